#include "amalgrade/grade.hpp"

#include <bit>
#include <map>

#include "amalgrade/budget.hpp"

namespace amalgrade {

ExtendedCount ExtendedCount::finite(long v) {
    if (v < 0) throw DomainError("negative count");
    ExtendedCount c;
    c.v_ = v;
    return c;
}

ExtendedCount ExtendedCount::infinite() {
    ExtendedCount c;
    c.inf_ = true;
    return c;
}

long ExtendedCount::value() const {
    if (inf_) throw DomainError("value of an infinite count");
    return v_;
}

std::string ExtendedCount::to_string() const { return inf_ ? "inf" : std::to_string(v_); }

Dimension Dimension::of(long v) {
    Dimension d;
    d.v_ = v;
    return d;
}

Dimension Dimension::minus_infinity() {
    Dimension d;
    d.neg_inf_ = true;
    return d;
}

long Dimension::value() const {
    if (neg_inf_) throw DomainError("dimension of the zero ring");
    return v_;
}

std::string Dimension::to_string() const { return neg_inf_ ? "-inf" : std::to_string(v_); }

namespace {

void collect_subsets(std::size_t n, std::size_t p, std::size_t from, std::vector<std::size_t>& cur,
                     std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == p) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i + (p - cur.size()) <= n; ++i) {
        cur.push_back(i);
        collect_subsets(n, p, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t p) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    collect_subsets(n, p, 0, cur, out);
    return out;
}

// Columns of the Koszul differential d_p : K_p -> K_{p-1} on the sequence xs,
// d(e_S) = sum_t (-1)^t xs[S[t]] e_{S \ S[t]}.
std::vector<ModVec> koszul_columns(const std::vector<Polynomial>& xs,
                                   const std::vector<std::vector<std::size_t>>& level_p,
                                   const std::vector<std::vector<std::size_t>>& level_prev,
                                   const PolyRingPtr& P) {
    std::map<std::vector<std::size_t>, std::size_t> index_prev;
    for (std::size_t i = 0; i < level_prev.size(); ++i) index_prev[level_prev[i]] = i;

    std::vector<ModVec> cols;
    cols.reserve(level_p.size());
    for (const auto& S : level_p) {
        ModVec c = vec_zero(P, level_prev.size());
        for (std::size_t t = 0; t < S.size(); ++t) {
            std::vector<std::size_t> sub;
            for (std::size_t u = 0; u < S.size(); ++u)
                if (u != t) sub.push_back(S[u]);
            Polynomial term = (t % 2 == 0) ? xs[S[t]] : -xs[S[t]];
            std::size_t row = index_prev.at(sub);
            c[row] = c[row] + term;
        }
        cols.push_back(std::move(c));
    }
    return cols;
}

// Hom(d, M) for a map d between free modules given by `cols` (each of length
// `rows`): the dual map M^rows -> M^cols.size(), basis vector (u, w) of the
// source going to sum_j d[j][u] * (j, w).
ModuleMap hom_dual(const std::vector<ModVec>& cols, const FPModule& src_power,
                   const FPModule& tgt_power, const FPModule& M) {
    const PolyRingPtr& P = M.ring()->cover();
    const std::size_t rows = M.rank() == 0 ? 0 : src_power.rank() / M.rank();
    std::vector<ModVec> out_cols;
    out_cols.reserve(src_power.rank());
    for (std::size_t u = 0; u < rows; ++u)
        for (std::size_t w = 0; w < M.rank(); ++w) {
            ModVec col = vec_zero(P, tgt_power.rank());
            for (std::size_t j = 0; j < cols.size(); ++j) {
                const Polynomial& entry = cols[j][u];
                if (!entry.is_zero()) col[j * M.rank() + w] = entry;
            }
            out_cols.push_back(std::move(col));
        }
    return ModuleMap(src_power, tgt_power, std::move(out_cols));
}

FPModule warmed_power(const FPModule& M, std::size_t copies) {
    FPModule P = FPModule::direct_power(M, copies);
    P.closure_basis(); // compute once so every copy of the handle shares it
    return P;
}

} // namespace

GradeValue koszul_grade(const IdealHandle& a, const FPModule& M) {
    if (!M.ring()->same_ring_as(*a.ambient()))
        throw AmbientMismatchError("grade of an ideal on a module over a different ring");
    if (M.is_zero_module()) return GradeValue::infinite();
    if (a.is_unit()) return GradeValue::infinite();
    const std::vector<Polynomial>& xs = a.gens();
    const std::size_t n = xs.size();
    if (n == 0) return GradeValue::finite(0); // Hom(K_0, M) = M != 0

    std::vector<std::vector<std::vector<std::size_t>>> levels(n + 1);
    for (std::size_t p = 0; p <= n; ++p) levels[p] = subsets_of_size(n, p);

    std::vector<FPModule> cochain(n + 1);
    cochain[0] = M;
    std::optional<ModuleMap> prev; // delta^{i-1}
    for (std::size_t i = 0; i <= n; ++i) {
        std::optional<ModuleMap> delta_i;
        if (i < n) {
            auto cols = koszul_columns(xs, levels[i + 1], levels[i], M.ring()->cover());
            if (!cochain[i + 1].attached()) cochain[i + 1] = warmed_power(M, levels[i + 1].size());
            delta_i = hom_dual(cols, cochain[i], cochain[i + 1], M);
        }
        if (!homology_of_pair(prev, delta_i, cochain[i]).zero)
            return GradeValue::finite(static_cast<long>(i));
        prev = std::move(delta_i);
    }
    return GradeValue::infinite();
}

GradeValue ext_grade(const IdealHandle& a, const FPModule& M) {
    if (!M.ring()->same_ring_as(*a.ambient()))
        throw AmbientMismatchError("ext grade of an ideal on a module over a different ring");
    if (a.is_unit()) throw DomainError("ext grade needs a proper ideal");
    if (M.is_zero_module()) throw DomainError("ext grade needs a nonzero module");
    const RingPtr& R = a.ambient();
    const std::size_t cap = R->nvars();

    // Stepwise free resolution of R/a: ranks[i] = rank F_i, cols[i] = columns
    // of d_{i+1} (so ranks.size() == cols.size() + 1 until it terminates).
    std::vector<std::size_t> ranks = {1};
    std::vector<std::vector<ModVec>> cols;
    bool complete = a.gens().empty();
    if (!complete) {
        std::vector<ModVec> first;
        for (const Polynomial& g : a.gens()) first.push_back({g});
        ranks.push_back(first.size());
        cols.push_back(std::move(first));
    }
    auto extend = [&]() {
        FPModule F = FPModule::free_module(R, ranks[cols.size() - 1]);
        std::vector<ModVec> next = syzygy_gens(cols.back(), F);
        if (next.empty()) {
            complete = true;
            return;
        }
        ranks.push_back(next.size());
        cols.push_back(std::move(next));
    };

    std::vector<FPModule> cochain; // cochain[k] = M^{ranks[k]}
    cochain.reserve(cap + 2);      // references into it stay valid below
    auto power_at = [&](std::size_t k) -> const FPModule& {
        while (cochain.size() <= k) cochain.push_back(warmed_power(M, ranks[cochain.size()]));
        return cochain[k];
    };

    std::optional<ModuleMap> prev;
    for (std::size_t i = 0; i <= cap; ++i) {
        while (!complete && cols.size() <= i) extend();
        if (i >= ranks.size()) return GradeValue::infinite(); // resolution ended below i
        const FPModule& Ci = power_at(i);
        std::optional<ModuleMap> delta_i;
        if (i < cols.size()) delta_i = hom_dual(cols[i], Ci, power_at(i + 1), M);
        if (!homology_of_pair(prev, delta_i, Ci).zero)
            return GradeValue::finite(static_cast<long>(i));
        prev = std::move(delta_i);
    }
    return GradeValue::infinite();
}

Dimension krull_dim(const RingPtr& R) {
    if (R->is_zero_ring()) return Dimension::minus_infinity();
    const std::size_t n = R->nvars();
    if (n > 20) throw DomainError("dimension enumeration supports at most 20 variables");
    std::vector<std::uint32_t> supports;
    for (const Polynomial& g : R->defining_groebner()) {
        const Monomial& m = g.leading_monomial();
        std::uint32_t mask = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (m.exp(v) > 0) mask |= (1u << v);
        supports.push_back(mask);
    }
    budget::tick(std::size_t{1} << n);
    long best = 0;
    for (std::uint32_t S = 0; S < (1u << n); ++S) {
        bool independent = true;
        for (std::uint32_t s : supports) {
            if ((s & ~S) == 0) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, static_cast<long>(std::popcount(S)));
    }
    return Dimension::of(best);
}

Dimension dim_of_quotient(const IdealHandle& a) {
    return krull_dim(RingPresentation::quotient_of(a.ambient(), a.gens()));
}

} // namespace amalgrade
