#include "amalgrade/groebner.hpp"

#include <algorithm>
#include <set>

#include "amalgrade/budget.hpp"

namespace amalgrade {

ModVec vec_zero(const PolyRingPtr& r, std::size_t rank) {
    return ModVec(rank, Polynomial::zero(r));
}

ModVec vec_unit(const PolyRingPtr& r, std::size_t rank, std::size_t comp) {
    ModVec v = vec_zero(r, rank);
    v.at(comp) = Polynomial::constant_long(r, 1);
    return v;
}

bool vec_is_zero(const ModVec& v) {
    for (const Polynomial& p : v)
        if (!p.is_zero()) return false;
    return true;
}

ModVec vec_add(const ModVec& a, const ModVec& b) {
    if (a.size() != b.size()) throw AmbientMismatchError("vector rank mismatch");
    ModVec r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
    return r;
}

ModVec vec_sub(const ModVec& a, const ModVec& b) {
    if (a.size() != b.size()) throw AmbientMismatchError("vector rank mismatch");
    ModVec r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
    return r;
}

ModVec vec_neg(const ModVec& a) {
    ModVec r;
    r.reserve(a.size());
    for (const Polynomial& p : a) r.push_back(-p);
    return r;
}

ModVec vec_times_term(const ModVec& v, const Monomial& m, const FieldElement& c) {
    ModVec r;
    r.reserve(v.size());
    for (const Polynomial& p : v) r.push_back(p.times_term(m, c));
    return r;
}

ModVec vec_scaled(const ModVec& v, const Polynomial& p) {
    ModVec r;
    r.reserve(v.size());
    for (const Polynomial& q : v) r.push_back(q * p);
    return r;
}

std::string vec_to_string(const ModVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

VecLT vec_lt(const ModVec& v) {
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (!v[c].is_zero())
            return {c, v[c].leading_monomial(), v[c].leading_coeff()};
    }
    throw DomainError("leading term of the zero vector");
}

bool pot_greater(const VecLT& a, const VecLT& b, const MonomialOrder& ord) {
    if (a.comp != b.comp) return a.comp < b.comp;
    return ord.greater(a.mon, b.mon);
}

namespace {

struct BasisElt {
    ModVec vec;
    VecLT lt;
};

BasisElt make_elt(ModVec v) {
    VecLT lt = vec_lt(v);
    return {std::move(v), std::move(lt)};
}

long long vec_term_count(const ModVec& v) {
    long long n = 0;
    for (const Polynomial& p : v) n += static_cast<long long>(p.term_count());
    return n;
}

// One full normal form pass against a fixed list, first-match reducer choice.
ModVec nf_against(ModVec work, const std::vector<BasisElt>& G, const MonomialOrder& ord) {
    (void)ord;
    ModVec rem = work;
    for (Polynomial& p : rem) p = Polynomial::zero(p.ring());
    while (!vec_is_zero(work)) {
        VecLT lt = vec_lt(work);
        const BasisElt* red = nullptr;
        for (const BasisElt& g : G) {
            if (g.lt.comp == lt.comp && g.lt.mon.divides(lt.mon)) {
                red = &g;
                break;
            }
        }
        if (red) {
            Monomial q = lt.mon.divided_by(red->lt.mon);
            FieldElement c = lt.coeff / red->lt.coeff;
            budget::tick(1 + vec_term_count(red->vec));
            work = vec_sub(work, vec_times_term(red->vec, q, c));
        } else {
            // Move the irreducible head term to the remainder.
            Polynomial t = Polynomial::single(work[lt.comp].ring(), lt.mon, lt.coeff);
            rem[lt.comp] = rem[lt.comp] + t;
            work[lt.comp] = work[lt.comp] - t;
            budget::tick(1);
        }
    }
    return rem;
}

struct Pair {
    long deg;       // total degree of the head lcm, for graded selection
    std::size_t i;
    std::size_t j;  // i < j
    bool operator<(const Pair& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

} // namespace

ModVec module_normal_form(ModVec v, const std::vector<ModVec>& G) {
    if (G.empty()) return v;
    const MonomialOrder& ord = G.front().front().ring()->order();
    std::vector<BasisElt> basis;
    basis.reserve(G.size());
    for (const ModVec& g : G)
        if (!vec_is_zero(g)) basis.push_back(make_elt(g));
    return nf_against(std::move(v), basis, ord);
}

std::vector<ModVec> module_groebner(std::vector<ModVec> gens,
                                    const PolyRingPtr& ring, std::size_t rank) {
    const MonomialOrder& ord = ring->order();

    std::vector<BasisElt> G;
    for (ModVec& g : gens) {
        if (g.size() != rank) throw AmbientMismatchError("generator of wrong rank");
        if (vec_is_zero(g)) continue;
        VecLT lt = vec_lt(g);
        G.push_back({vec_times_term(g, Monomial::one(ring->nvars()), lt.coeff.inverse()),
                     {lt.comp, lt.mon, FieldElement::one(ring->field())}});
    }

    std::set<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        if (G[i].lt.comp != G[j].lt.comp) return;
        Monomial l = Monomial::lcm(G[i].lt.mon, G[j].lt.mon);
        pending.insert({l.total_degree(), i, j});
    };
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    const bool ideal_case = (rank == 1);

    while (!pending.empty()) {
        Pair pr = *pending.begin();
        pending.erase(pending.begin());
        seen.insert({pr.i, pr.j});
        budget::tick(1);
        stats::note_spair();

        const BasisElt& gi = G[pr.i];
        const BasisElt& gj = G[pr.j];
        Monomial l = Monomial::lcm(gi.lt.mon, gj.lt.mon);

        if (ideal_case && gi.lt.mon.coprime_with(gj.lt.mon)) continue;

        // Chain criterion: some k with head dividing the lcm, both side pairs done.
        bool chained = false;
        for (std::size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (G[k].lt.comp != gi.lt.comp || !G[k].lt.mon.divides(l)) continue;
            auto a = std::minmax(pr.i, k);
            auto b = std::minmax(pr.j, k);
            bool a_done = seen.count({a.first, a.second}) ||
                          !pending.count({Monomial::lcm(G[a.first].lt.mon, G[a.second].lt.mon).total_degree(),
                                          a.first, a.second});
            bool b_done = seen.count({b.first, b.second}) ||
                          !pending.count({Monomial::lcm(G[b.first].lt.mon, G[b.second].lt.mon).total_degree(),
                                          b.first, b.second});
            // Only skip when both flanking pairs were already processed or
            // never existed; "not pending" alone is not enough before they
            // are created, but pairs are created eagerly so it is.
            chained = a_done && b_done;
        }
        if (chained) continue;

        ModVec s = vec_sub(vec_times_term(gi.vec, l.divided_by(gi.lt.mon), FieldElement::one(ring->field())),
                           vec_times_term(gj.vec, l.divided_by(gj.lt.mon), FieldElement::one(ring->field())));
        ModVec h = nf_against(std::move(s), G, ord);
        if (vec_is_zero(h)) continue;

        VecLT lt = vec_lt(h);
        G.push_back({vec_times_term(h, Monomial::one(ring->nvars()), lt.coeff.inverse()),
                     {lt.comp, lt.mon, FieldElement::one(ring->field())}});
        for (const Polynomial& comp : G.back().vec)
            for (const Term& t : comp.terms()) stats::note_coeff_bits(t.coeff.bit_length());
        for (std::size_t i = 0; i + 1 < G.size(); ++i) push_pair(i, G.size() - 1);
    }

    // Minimalize: drop elements whose head is divisible by another survivor's.
    std::vector<bool> dropped(G.size(), false);
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j || dropped[j]) continue;
            if (G[j].lt.comp != G[i].lt.comp || !G[j].lt.mon.divides(G[i].lt.mon)) continue;
            if (G[j].lt.mon == G[i].lt.mon && j > i) continue; // equal heads: keep the earlier
            dropped[i] = true;
            break;
        }
    }
    std::vector<BasisElt> minimal;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (!dropped[i]) minimal.push_back(std::move(G[i]));

    // Tail-reduce to the unique reduced basis; iterate to a fixpoint.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<BasisElt> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            ModVec red = nf_against(minimal[i].vec, others, ord);
            if (!(red == minimal[i].vec)) {
                changed = true;
                minimal[i] = make_elt(std::move(red));
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const BasisElt& a, const BasisElt& b) {
        return pot_greater(b.lt, a.lt, ord); // ascending leading term
    });

    std::vector<ModVec> out;
    out.reserve(minimal.size());
    for (BasisElt& e : minimal) out.push_back(std::move(e.vec));
    return out;
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, const PolyRingPtr& ring) {
    std::vector<ModVec> wrapped;
    wrapped.reserve(gens.size());
    for (Polynomial& p : gens) wrapped.push_back({std::move(p)});
    std::vector<ModVec> gb = module_groebner(std::move(wrapped), ring, 1);
    std::vector<Polynomial> out;
    out.reserve(gb.size());
    for (ModVec& v : gb) out.push_back(std::move(v.front()));
    return out;
}

Polynomial normal_form_vs(const Polynomial& p, const std::vector<Polynomial>& G) {
    std::vector<ModVec> wrapped;
    wrapped.reserve(G.size());
    for (const Polynomial& g : G) wrapped.push_back({g});
    ModVec r = module_normal_form({p}, wrapped);
    return r.front();
}

std::vector<ModVec> kernel_gens(const std::vector<ModVec>& images,
                                const std::vector<ModVec>& target_rels,
                                const PolyRingPtr& ring, std::size_t target_rank) {
    const std::size_t k = images.size();
    std::vector<ModVec> aug;
    aug.reserve(k + target_rels.size());
    for (std::size_t i = 0; i < k; ++i) {
        if (images[i].size() != target_rank) throw AmbientMismatchError("image of wrong rank");
        ModVec w = images[i];
        for (std::size_t t = 0; t < k; ++t)
            w.push_back(t == i ? Polynomial::constant_long(ring, 1) : Polynomial::zero(ring));
        aug.push_back(std::move(w));
    }
    for (const ModVec& rl : target_rels) {
        if (rl.size() != target_rank) throw AmbientMismatchError("relation of wrong rank");
        ModVec w = rl;
        for (std::size_t t = 0; t < k; ++t) w.push_back(Polynomial::zero(ring));
        aug.push_back(std::move(w));
    }

    std::vector<ModVec> gb = module_groebner(std::move(aug), ring, target_rank + k);

    std::vector<ModVec> out;
    for (const ModVec& g : gb) {
        bool real_zero = true;
        for (std::size_t c = 0; c < target_rank && real_zero; ++c)
            if (!g[c].is_zero()) real_zero = false;
        if (!real_zero) continue;
        out.emplace_back(g.begin() + static_cast<std::ptrdiff_t>(target_rank), g.end());
    }
    return out;
}

} // namespace amalgrade
