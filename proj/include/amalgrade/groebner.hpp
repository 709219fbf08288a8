#pragma once

#include <vector>

#include "amalgrade/polynomial.hpp"

namespace amalgrade {

// Element of a free module P^r over a polynomial ring, one Polynomial per
// component. Rank-1 vectors are ideals' elements; everything below treats
// ideals as the r = 1 case.
using ModVec = std::vector<Polynomial>;

ModVec vec_zero(const PolyRingPtr& r, std::size_t rank);
ModVec vec_unit(const PolyRingPtr& r, std::size_t rank, std::size_t comp);
bool vec_is_zero(const ModVec& v);
ModVec vec_add(const ModVec& a, const ModVec& b);
ModVec vec_sub(const ModVec& a, const ModVec& b);
ModVec vec_neg(const ModVec& a);
ModVec vec_times_term(const ModVec& v, const Monomial& m, const FieldElement& c);
ModVec vec_scaled(const ModVec& v, const Polynomial& p);
std::string vec_to_string(const ModVec& v);

// Leading data of a nonzero vector under position-over-term: the first
// nonzero component wins, ties broken by the ring's monomial order.
struct VecLT {
    std::size_t comp;
    Monomial mon;
    FieldElement coeff;
};
VecLT vec_lt(const ModVec& v);

// a > b in POT?
bool pot_greater(const VecLT& a, const VecLT& b, const MonomialOrder& ord);

// Buchberger with degree-graded pair selection, the coprime criterion
// (rank 1 only; it is unsound for modules) and the chain criterion.
// Returns the unique reduced monic basis, sorted by ascending leading term.
// Charges the active budget; throws ResourceError when it runs out.
std::vector<ModVec> module_groebner(std::vector<ModVec> gens,
                                    const PolyRingPtr& ring, std::size_t rank);

// Full normal form: every term of the result is irreducible modulo G.
// Deterministic given G's order. G need not be a basis, but normal forms are
// only canonical when it is.
ModVec module_normal_form(ModVec v, const std::vector<ModVec>& G);

// Rank-1 conveniences.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, const PolyRingPtr& ring);
Polynomial normal_form_vs(const Polynomial& p, const std::vector<Polynomial>& G);

// Generators of the kernel of P^k -> P^rank / <rels>, e_i |-> images[i].
// Returned vectors have length k (coordinates in the source free module).
// This is the one primitive behind syzygies, homology and annihilators:
// tag components are appended after the real block, the POT basis is
// computed, and basis elements supported only on tags are projected out.
std::vector<ModVec> kernel_gens(const std::vector<ModVec>& images,
                                const std::vector<ModVec>& target_rels,
                                const PolyRingPtr& ring, std::size_t target_rank);

} // namespace amalgrade
