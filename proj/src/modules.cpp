#include "amalgrade/modules.hpp"

#include "amalgrade/ideal_ops.hpp"

namespace amalgrade {

FPModule FPModule::free_module(RingPtr R, std::size_t rank) {
    FPModule m;
    m.ring_ = std::move(R);
    m.rank_ = rank;
    return m;
}

FPModule FPModule::cokernel(RingPtr R, std::size_t rank, std::vector<ModVec> relations) {
    FPModule m;
    m.ring_ = std::move(R);
    m.rank_ = rank;
    for (ModVec& r : relations) {
        if (r.size() != rank) throw AmbientMismatchError("relation of wrong rank");
        ModVec red;
        red.reserve(rank);
        for (Polynomial& p : r) red.push_back(m.ring_->reduce(p));
        if (!vec_is_zero(red)) m.relations_.push_back(std::move(red));
    }
    return m;
}

FPModule FPModule::quotient_by_ideal(const IdealHandle& a) {
    std::vector<ModVec> rels;
    for (const Polynomial& g : a.gens()) rels.push_back({g});
    return cokernel(a.ambient(), 1, std::move(rels));
}

FPModule FPModule::ideal_as_module(const IdealHandle& a) {
    const RingPtr& R = a.ambient();
    std::vector<ModVec> elems;
    for (const Polynomial& g : a.gens()) elems.push_back({g});
    FPModule ambient_ring = free_module(R, 1);
    std::vector<ModVec> rels = syzygy_gens(elems, ambient_ring);
    return cokernel(R, a.gens().size(), std::move(rels));
}

std::vector<ModVec> FPModule::closure_gens() const {
    std::vector<ModVec> gens = relations_;
    for (const Polynomial& g : ring_->defining_groebner())
        for (std::size_t j = 0; j < rank_; ++j) {
            ModVec v = vec_zero(ring_->cover(), rank_);
            v[j] = g;
            gens.push_back(std::move(v));
        }
    return gens;
}

const std::vector<ModVec>& FPModule::closure_basis() const {
    if (!closure_) {
        closure_ = std::make_shared<const std::vector<ModVec>>(
            module_groebner(closure_gens(), ring_->cover(), rank_));
    }
    return *closure_;
}

ModVec FPModule::reduce(const ModVec& v) const {
    if (v.size() != rank_) throw AmbientMismatchError("vector of wrong rank");
    return module_normal_form(v, closure_basis());
}

bool FPModule::contains_in_relations(const ModVec& v) const {
    return vec_is_zero(reduce(v));
}

bool FPModule::is_zero_module() const {
    for (std::size_t j = 0; j < rank_; ++j)
        if (!contains_in_relations(vec_unit(ring_->cover(), rank_, j))) return false;
    return true;
}

FPModule FPModule::direct_sum(const FPModule& o) const {
    if (!ring_->same_ring_as(*o.ring_))
        throw AmbientMismatchError("direct sum over different rings");
    std::vector<ModVec> rels;
    const PolyRingPtr& P = ring_->cover();
    for (const ModVec& r : relations_) {
        ModVec v = r;
        for (std::size_t j = 0; j < o.rank_; ++j) v.push_back(Polynomial::zero(P));
        rels.push_back(std::move(v));
    }
    for (const ModVec& r : o.relations_) {
        ModVec v = vec_zero(P, rank_);
        for (const Polynomial& p : r) v.push_back(p);
        rels.push_back(std::move(v));
    }
    return cokernel(ring_, rank_ + o.rank_, std::move(rels));
}

FPModule FPModule::direct_power(const FPModule& M, std::size_t copies) {
    FPModule out = free_module(M.ring(), 0);
    for (std::size_t i = 0; i < copies; ++i) out = out.direct_sum(M);
    return out;
}

std::string FPModule::to_string() const {
    std::string s = "R^" + std::to_string(rank_);
    if (!relations_.empty()) {
        s += " / <";
        for (std::size_t i = 0; i < relations_.size(); ++i) {
            if (i) s += ", ";
            s += vec_to_string(relations_[i]);
        }
        s += ">";
    }
    return s;
}

ModuleMap::ModuleMap(FPModule source, FPModule target, std::vector<ModVec> columns)
    : source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
    if (!source_.ring()->same_ring_as(*target_.ring()))
        throw AmbientMismatchError("module map across different rings");
    if (columns_.size() != source_.rank())
        throw DomainError("module map needs one column per source basis vector");
    for (ModVec& c : columns_) {
        if (c.size() != target_.rank()) throw AmbientMismatchError("column of wrong rank");
        for (Polynomial& p : c) p = target_.ring()->reduce(p);
    }
    for (const ModVec& r : source_.relations()) {
        if (!target_.contains_in_relations(apply(r)))
            throw DomainError("module map not well-defined on relation " + vec_to_string(r));
    }
}

ModuleMap ModuleMap::zero_map(FPModule source, FPModule target) {
    std::vector<ModVec> cols(source.rank(), vec_zero(target.ring()->cover(), target.rank()));
    return ModuleMap(std::move(source), std::move(target), std::move(cols));
}

ModVec ModuleMap::apply(const ModVec& v) const {
    if (v.size() != source_.rank()) throw AmbientMismatchError("argument of wrong rank");
    ModVec out = vec_zero(target_.ring()->cover(), target_.rank());
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (v[j].is_zero()) continue;
        out = vec_add(out, vec_scaled(columns_[j], v[j]));
    }
    for (Polynomial& p : out) p = target_.ring()->reduce(p);
    return out;
}

bool ModuleMap::is_zero_map() const {
    for (const ModVec& c : columns_)
        if (!target_.contains_in_relations(c)) return false;
    return true;
}

ModuleMap ModuleMap::composed(const ModuleMap& outer, const ModuleMap& inner) {
    if (!inner.target().ring()->same_ring_as(*outer.source().ring()) ||
        inner.target().rank() != outer.source().rank())
        throw AmbientMismatchError("module maps do not compose");
    std::vector<ModVec> cols;
    cols.reserve(inner.columns().size());
    for (const ModVec& c : inner.columns()) cols.push_back(outer.apply(c));
    return ModuleMap(inner.source(), outer.target(), std::move(cols));
}

FiniteComplex::FiniteComplex(std::vector<FPModule> modules, std::vector<ModuleMap> differentials)
    : modules_(std::move(modules)), diffs_(std::move(differentials)) {
    if (modules_.empty()) throw DomainError("empty complex");
    if (diffs_.size() + 1 != modules_.size())
        throw DomainError("complex needs one differential per adjacent pair");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        if (diffs_[i].source().rank() != modules_[i + 1].rank() ||
            diffs_[i].target().rank() != modules_[i].rank())
            throw AmbientMismatchError("differential ranks do not match the complex");
    }
    for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
        if (!ModuleMap::composed(diffs_[i], diffs_[i + 1]).is_zero_map())
            throw DomainError("not a complex: d_" + std::to_string(i + 1) + " o d_" +
                              std::to_string(i + 2) + " is nonzero");
    }
}

std::vector<ModVec> syzygy_gens(const std::vector<ModVec>& elems, const FPModule& M) {
    for (const ModVec& e : elems)
        if (e.size() != M.rank()) throw AmbientMismatchError("element of wrong rank");
    return kernel_gens(elems, M.closure_gens(), M.ring()->cover(), M.rank());
}

HomologyResult homology_of_pair(const std::optional<ModuleMap>& in,
                                const std::optional<ModuleMap>& out,
                                const FPModule& middle) {
    const RingPtr& R = middle.ring();
    const PolyRingPtr& P = R->cover();
    if (in && (in->target().rank() != middle.rank() || !in->target().ring()->same_ring_as(*R)))
        throw AmbientMismatchError("incoming map does not land in the middle module");
    if (out && (out->source().rank() != middle.rank() || !out->source().ring()->same_ring_as(*R)))
        throw AmbientMismatchError("outgoing map does not start at the middle module");
    if (in && out && !ModuleMap::composed(*out, *in).is_zero_map())
        throw DomainError("maps do not compose to zero");

    // Generators of the cycle submodule of the middle cover-free module
    // (everything when the outgoing map is zero).
    std::vector<ModVec> cycle_gens;
    if (out) {
        cycle_gens =
            kernel_gens(out->columns(), out->target().closure_gens(), P, out->target().rank());
    } else {
        for (std::size_t j = 0; j < middle.rank(); ++j)
            cycle_gens.push_back(vec_unit(P, middle.rank(), j));
    }

    // Boundaries and the module's own relations.
    std::vector<ModVec> kill = middle.closure_gens();
    if (in)
        for (const ModVec& c : in->columns()) kill.push_back(c);

    std::vector<ModVec> kill_basis = module_groebner(kill, P, middle.rank());
    bool zero = true;
    for (const ModVec& z : cycle_gens) {
        if (!vec_is_zero(module_normal_form(z, kill_basis))) {
            zero = false;
            break;
        }
    }

    // Present the subquotient on the cycle generators.
    std::vector<ModVec> rels = kernel_gens(cycle_gens, kill, P, middle.rank());
    FPModule H = FPModule::cokernel(R, cycle_gens.size(), std::move(rels));
    return {std::move(H), zero};
}

HomologyResult homology_at(const FiniteComplex& C, std::size_t i) {
    if (i > C.top_index()) throw DomainError("homology index out of range");
    std::optional<ModuleMap> in, out;
    if (i < C.top_index()) in = C.differential(i + 1);
    if (i > 0) out = C.differential(i);
    return homology_of_pair(in, out, C.module_at(i));
}

FreeResolution free_resolution_steps(const FPModule& M, std::size_t max_steps) {
    FreeResolution res;
    res.ranks.push_back(M.rank());

    std::vector<ModVec> current; // columns of the next differential
    for (const ModVec& r : M.relations()) current.push_back(r);

    for (std::size_t step = 0; step < max_steps; ++step) {
        if (current.empty()) {
            res.complete = true;
            return res;
        }
        res.columns.push_back(current);
        res.ranks.push_back(current.size());
        FPModule target_free = FPModule::free_module(M.ring(), res.ranks[res.ranks.size() - 2]);
        current = syzygy_gens(current, target_free);
    }
    res.complete = current.empty();
    return res;
}

IdealHandle annihilator(const FPModule& M) {
    const RingPtr& R = M.ring();
    if (M.rank() == 0)
        return IdealHandle(R, {Polynomial::constant_long(R->cover(), 1)});
    IdealHandle acc;
    for (std::size_t j = 0; j < M.rank(); ++j) {
        std::vector<ModVec> image = {vec_unit(R->cover(), M.rank(), j)};
        std::vector<ModVec> tags = kernel_gens(image, M.closure_gens(), R->cover(), M.rank());
        std::vector<Polynomial> gens;
        for (const ModVec& t : tags) gens.push_back(t.front());
        IdealHandle colon(R, std::move(gens));
        acc = (j == 0) ? colon : ideal_intersection(acc, colon);
    }
    return acc;
}

} // namespace amalgrade
