#pragma once

#include "amalgrade/presentation.hpp"

namespace amalgrade {

// Canonical representative of p modulo the lifted ideal, under the ambient
// order (first form) or a freshly computed basis for another order.
Polynomial normal_form(const Polynomial& p, const IdealHandle& a);
Polynomial normal_form(const Polynomial& p, const IdealHandle& a, const MonomialOrder& ord);

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);

// Computed in the cover with one auxiliary variable, then reduced back.
IdealHandle ideal_intersection(const IdealHandle& a, const IdealHandle& b);

// a in P/I with cover variables x_1..x_n; drops x_1..x_k. Returns the image
// ideal in the presented ring k[x_{k+1}..x_n] / (I eliminated), with the
// variable index map from the old cover to the new one (dropped -> -1).
struct EliminationResult {
    IdealHandle ideal;
    std::vector<int> var_map;
};
EliminationResult eliminate_first(const IdealHandle& a, std::size_t k);

// Kernel and contraction through the graph ideal of the map.
IdealHandle map_kernel(const RingMap& f);
IdealHandle contract_ideal(const RingMap& f, const IdealHandle& q);

// Membership in the radical (Rabinowitsch trick, exact).
bool in_radical(const Polynomial& p, const IdealHandle& a);
bool is_nilpotent(const Polynomial& p, const RingPtr& ring);
// All generators nilpotent?
bool ideal_is_nil(const IdealHandle& a);

// Does elem lie in the subalgebra k[gens] of ring? Tag-variable normal form
// test under an order eliminating the ambient variables.
bool subalgebra_contains(const Polynomial& elem, const std::vector<Polynomial>& gens,
                         const RingPtr& ring);

// Does elem lie in sum_i S[gens] * mods_i, the span of mods over the
// subalgebra k[gens]? Decided in ring[e]/(e^2) via the tag construction:
// products of two mod-tags vanish, so membership of elem*e in
// k[gens, mods*e] is exactly module-span membership.
bool submodule_over_subalgebra_contains(const Polynomial& elem,
                                        const std::vector<Polynomial>& gens,
                                        const std::vector<Polynomial>& mods,
                                        const RingPtr& ring);

} // namespace amalgrade
