#pragma once

#include "amalgrade/presentation.hpp"

#include <optional>

namespace amalgrade {

// Finitely presented module over a presented ring R = P/I: a cokernel
// R^rank / <relations>, relations stored as vectors over the cover P.
// The "closure" below is the submodule of P^rank presenting zero, i.e. the
// relations together with I times each basis vector; all membership tests
// run against its basis.
class FPModule {
public:
    FPModule() = default;

    static FPModule free_module(RingPtr R, std::size_t rank);
    static FPModule cokernel(RingPtr R, std::size_t rank, std::vector<ModVec> relations);
    // R/a as a module over a's ambient ring.
    static FPModule quotient_by_ideal(const IdealHandle& a);
    // The ideal itself as a module: one generator per ideal generator,
    // relations computed as their syzygies.
    static FPModule ideal_as_module(const IdealHandle& a);

    bool attached() const { return ring_ != nullptr; }
    const RingPtr& ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    const std::vector<ModVec>& relations() const { return relations_; }

    const std::vector<ModVec>& closure_basis() const; // cached
    std::vector<ModVec> closure_gens() const;         // relations + I * basis

    ModVec reduce(const ModVec& v) const;
    bool contains_in_relations(const ModVec& v) const;
    // Decided by normal forms of the basis vectors, never by counting.
    bool is_zero_module() const;

    FPModule direct_sum(const FPModule& o) const;
    static FPModule direct_power(const FPModule& M, std::size_t copies);

    std::string to_string() const;

private:
    RingPtr ring_;
    std::size_t rank_ = 0;
    std::vector<ModVec> relations_;
    mutable std::shared_ptr<const std::vector<ModVec>> closure_;
};

// Map of finitely presented modules, columns[j] = image of the j-th basis
// vector, written in the target's cover coordinates. Construction checks
// well-definedness: images of source relations must vanish in the target.
class ModuleMap {
public:
    ModuleMap() = default;
    ModuleMap(FPModule source, FPModule target, std::vector<ModVec> columns);
    static ModuleMap zero_map(FPModule source, FPModule target);

    bool attached() const { return source_.attached(); }
    const FPModule& source() const { return source_; }
    const FPModule& target() const { return target_; }
    const std::vector<ModVec>& columns() const { return columns_; }

    ModVec apply(const ModVec& v) const;
    bool is_zero_map() const;

    static ModuleMap composed(const ModuleMap& outer, const ModuleMap& inner);

private:
    FPModule source_;
    FPModule target_;
    std::vector<ModVec> columns_;
};

// C_0 <- C_1 <- ... <- C_L with d_i : C_i -> C_{i-1}; construction checks
// d_i o d_{i+1} = 0.
class FiniteComplex {
public:
    FiniteComplex(std::vector<FPModule> modules, std::vector<ModuleMap> differentials);

    std::size_t top_index() const { return modules_.size() - 1; } // L
    const FPModule& module_at(std::size_t i) const { return modules_.at(i); }
    // d_i for 1 <= i <= L.
    const ModuleMap& differential(std::size_t i) const { return diffs_.at(i - 1); }

private:
    std::vector<FPModule> modules_;
    std::vector<ModuleMap> diffs_;
};

// ker d_i / im d_{i+1} at position i, as a presented subquotient: generators
// are kernel generators of d_i, relations are their coefficients landing in
// im d_{i+1} + relations. `zero` is decided by membership of every generator.
struct HomologyResult {
    FPModule module;
    bool zero;
};
HomologyResult homology_at(const FiniteComplex& C, std::size_t i);

// Homology of  . --in--> middle --out--> .  at `middle`; a missing map is
// treated as zero. Checks out o in = 0 when both are present.
HomologyResult homology_of_pair(const std::optional<ModuleMap>& in,
                                const std::optional<ModuleMap>& out,
                                const FPModule& middle);

// Generators of ker(R^k -> M), e_j -> elems[j].
std::vector<ModVec> syzygy_gens(const std::vector<ModVec>& elems, const FPModule& M);

// F_0 <- F_1 <- ... up to max_steps differentials (fewer when the resolution
// terminates). ranks[i] = rank F_i; columns[i] = columns of d_{i+1}.
// complete means the last computed kernel was zero.
struct FreeResolution {
    std::vector<std::size_t> ranks;
    std::vector<std::vector<ModVec>> columns;
    bool complete = false;
};
FreeResolution free_resolution_steps(const FPModule& M, std::size_t max_steps);

IdealHandle annihilator(const FPModule& M);

} // namespace amalgrade
