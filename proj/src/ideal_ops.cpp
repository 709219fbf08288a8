#include "amalgrade/ideal_ops.hpp"

#include <algorithm>

namespace amalgrade {

namespace {

void require_same_ring(const IdealHandle& a, const IdealHandle& b) {
    if (!a.attached() || !b.attached())
        throw DomainError("detached ideal handle");
    if (!a.ambient()->same_ring_as(*b.ambient()))
        throw AmbientMismatchError("ideals live in different rings");
}

std::string fresh_name(const std::vector<std::string>& taken, std::string base) {
    auto used = [&](const std::string& n) {
        return std::find(taken.begin(), taken.end(), n) != taken.end();
    };
    while (used(base)) base += "_";
    return base;
}

std::vector<Polynomial> convert_all(const std::vector<Polynomial>& ps,
                                    const PolyRingPtr& target, const std::vector<int>& var_map) {
    std::vector<Polynomial> out;
    out.reserve(ps.size());
    for (const Polynomial& p : ps) out.push_back(p.converted(target, var_map));
    return out;
}

bool uses_first_vars(const Polynomial& p, std::size_t k) {
    for (const Term& t : p.terms())
        for (std::size_t i = 0; i < k; ++i)
            if (t.mon.exp(i)) return true;
    return false;
}

} // namespace

Polynomial normal_form(const Polynomial& p, const IdealHandle& a) {
    return a.reduce(p);
}

Polynomial normal_form(const Polynomial& p, const IdealHandle& a, const MonomialOrder& ord) {
    const PolyRingPtr& P = a.ambient()->cover();
    if (ord == P->order()) return a.reduce(p);
    PolyRingPtr P2 = PolyRing::create(P->var_names(), P->field(), ord);
    std::vector<int> ident(P->nvars());
    for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = static_cast<int>(i);
    std::vector<Polynomial> lifted = a.ambient()->defining();
    for (const Polynomial& g : a.gens()) lifted.push_back(g);
    std::vector<Polynomial> gb = groebner_basis(convert_all(lifted, P2, ident), P2);
    return normal_form_vs(p.converted(P2, ident), gb).converted(P, ident);
}

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
    require_same_ring(a, b);
    std::vector<Polynomial> gens = a.gens();
    for (const Polynomial& g : b.gens()) gens.push_back(g);
    return IdealHandle(a.ambient(), std::move(gens));
}

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
    require_same_ring(a, b);
    std::vector<Polynomial> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const Polynomial& p : a.gens())
        for (const Polynomial& q : b.gens()) gens.push_back(p * q);
    return IdealHandle(a.ambient(), std::move(gens));
}

IdealHandle ideal_intersection(const IdealHandle& a, const IdealHandle& b) {
    require_same_ring(a, b);
    const RingPtr& R = a.ambient();
    const PolyRingPtr& P = R->cover();
    const std::size_t n = P->nvars();

    std::vector<std::string> vars;
    vars.push_back(fresh_name(P->var_names(), "t"));
    for (const std::string& v : P->var_names()) vars.push_back(v);
    PolyRingPtr U = PolyRing::create(std::move(vars), P->field(), MonomialOrder::block_elim(1));

    std::vector<int> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = static_cast<int>(i + 1);

    Polynomial t = Polynomial::variable(U, 0);
    Polynomial one_minus_t = Polynomial::constant_long(U, 1) - t;

    std::vector<Polynomial> gens;
    auto push_scaled = [&](const std::vector<Polynomial>& side, const Polynomial& scale) {
        for (const Polynomial& g : side) gens.push_back(g.converted(U, up) * scale);
    };
    push_scaled(R->defining(), t);
    push_scaled(a.gens(), t);
    push_scaled(R->defining(), one_minus_t);
    push_scaled(b.gens(), one_minus_t);

    std::vector<Polynomial> gb = groebner_basis(std::move(gens), U);

    std::vector<int> down(n + 1, -1);
    for (std::size_t i = 0; i < n; ++i) down[i + 1] = static_cast<int>(i);
    std::vector<Polynomial> result;
    for (const Polynomial& g : gb)
        if (!uses_first_vars(g, 1)) result.push_back(g.converted(P, down));
    return IdealHandle(R, std::move(result));
}

EliminationResult eliminate_first(const IdealHandle& a, std::size_t k) {
    if (!a.attached()) throw DomainError("detached ideal handle");
    const RingPtr& R = a.ambient();
    const PolyRingPtr& P = R->cover();
    const std::size_t n = P->nvars();
    if (k > n)
        throw DomainError("elimination block exceeds variable count: " + std::to_string(k) +
                          " of " + std::to_string(n));

    PolyRingPtr PE = P;
    std::vector<int> ident(n);
    for (std::size_t i = 0; i < n; ++i) ident[i] = static_cast<int>(i);
    if (!P->order().eliminates(k))
        PE = PolyRing::create(P->var_names(), P->field(), MonomialOrder::block_elim(k));

    auto eliminate_set = [&](std::vector<Polynomial> gens) {
        std::vector<Polynomial> lifted =
            (PE == P) ? std::move(gens) : convert_all(gens, PE, ident);
        std::vector<Polynomial> gb = groebner_basis(std::move(lifted), PE);
        std::vector<Polynomial> kept;
        for (const Polynomial& g : gb)
            if (!uses_first_vars(g, k)) kept.push_back(g);
        return kept;
    };

    std::vector<Polynomial> both = R->defining();
    for (const Polynomial& g : a.gens()) both.push_back(g);
    std::vector<Polynomial> full = eliminate_set(std::move(both));
    std::vector<Polynomial> base = eliminate_set(R->defining());

    std::vector<std::string> rest(P->var_names().begin() + static_cast<std::ptrdiff_t>(k),
                                  P->var_names().end());
    PolyRingPtr Pp = PolyRing::create(std::move(rest), P->field(), MonomialOrder::degrevlex());
    std::vector<int> down(n, -1);
    for (std::size_t i = k; i < n; ++i) down[i] = static_cast<int>(i - k);

    RingPtr newR = RingPresentation::quotient(Pp, convert_all(base, Pp, down));
    IdealHandle out(newR, convert_all(full, Pp, down));
    return {std::move(out), std::move(down)};
}

namespace {

// Shared graph-ideal elimination: variables [target-vars', source-vars],
// ideal (target defining) + (extra, e.g. a contracted ideal) + graph of f.
// Returns the source-cover polynomials found in the eliminated basis.
std::vector<Polynomial> graph_eliminate(const RingMap& f, const std::vector<Polynomial>& extra) {
    const PolyRingPtr& P = f.source()->cover();
    const PolyRingPtr& Q = f.target()->cover();
    const std::size_t n = P->nvars(), m = Q->nvars();

    std::vector<std::string> vars;
    std::vector<std::string> taken = P->var_names();
    for (const std::string& q : Q->var_names()) {
        std::string nm = fresh_name(taken, q);
        taken.push_back(nm);
        vars.push_back(nm);
    }
    for (const std::string& x : P->var_names()) vars.push_back(x);
    PolyRingPtr U = PolyRing::create(std::move(vars), P->field(), MonomialOrder::block_elim(m));

    std::vector<int> q_up(m), x_up(n);
    for (std::size_t i = 0; i < m; ++i) q_up[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < n; ++i) x_up[i] = static_cast<int>(m + i);

    std::vector<Polynomial> gens = convert_all(f.target()->defining(), U, q_up);
    for (const Polynomial& e : extra) gens.push_back(e.converted(U, q_up));
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back(Polynomial::variable(U, m + i) - f.images()[i].converted(U, q_up));

    std::vector<Polynomial> gb = groebner_basis(std::move(gens), U);

    std::vector<int> down(m + n, -1);
    for (std::size_t i = 0; i < n; ++i) down[m + i] = static_cast<int>(i);
    std::vector<Polynomial> out;
    for (const Polynomial& g : gb)
        if (!uses_first_vars(g, m)) out.push_back(g.converted(P, down));
    return out;
}

} // namespace

IdealHandle map_kernel(const RingMap& f) {
    if (!f.attached()) throw DomainError("detached ring map");
    return IdealHandle(f.source(), graph_eliminate(f, {}));
}

IdealHandle contract_ideal(const RingMap& f, const IdealHandle& q) {
    if (!f.attached()) throw DomainError("detached ring map");
    if (!q.attached() || !q.ambient()->same_ring_as(*f.target()))
        throw AmbientMismatchError("contracting an ideal that is not in the map's target");
    return IdealHandle(f.source(), graph_eliminate(f, q.gens()));
}

bool in_radical(const Polynomial& p, const IdealHandle& a) {
    if (!a.attached()) throw DomainError("detached ideal handle");
    const RingPtr& R = a.ambient();
    const PolyRingPtr& P = R->cover();
    const std::size_t n = P->nvars();
    Polynomial red = R->reduce(p);
    if (a.contains(red)) return true;

    std::vector<std::string> vars;
    vars.push_back(fresh_name(P->var_names(), "w"));
    for (const std::string& v : P->var_names()) vars.push_back(v);
    PolyRingPtr U = PolyRing::create(std::move(vars), P->field(), MonomialOrder::degrevlex());

    std::vector<int> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = static_cast<int>(i + 1);

    std::vector<Polynomial> gens = convert_all(R->defining(), U, up);
    for (const Polynomial& g : a.gens()) gens.push_back(g.converted(U, up));
    gens.push_back(Polynomial::constant_long(U, 1) -
                   Polynomial::variable(U, 0) * red.converted(U, up));

    std::vector<Polynomial> gb = groebner_basis(std::move(gens), U);
    return gb.size() == 1 && gb.front().is_constant();
}

bool is_nilpotent(const Polynomial& p, const RingPtr& ring) {
    return in_radical(p, IdealHandle::zero(ring));
}

bool ideal_is_nil(const IdealHandle& a) {
    for (const Polynomial& g : a.gens())
        if (!is_nilpotent(g, a.ambient())) return false;
    return true;
}

bool subalgebra_contains(const Polynomial& elem, const std::vector<Polynomial>& gens,
                         const RingPtr& ring) {
    const PolyRingPtr& Q = ring->cover();
    const std::size_t m = Q->nvars();
    const std::size_t r = gens.size();

    std::vector<std::string> vars = Q->var_names();
    std::vector<std::string> taken = vars;
    for (std::size_t i = 0; i < r; ++i) {
        std::string nm = fresh_name(taken, "y" + std::to_string(i + 1));
        taken.push_back(nm);
        vars.push_back(nm);
    }
    PolyRingPtr U = PolyRing::create(std::move(vars), Q->field(), MonomialOrder::block_elim(m));

    std::vector<int> up(m);
    for (std::size_t i = 0; i < m; ++i) up[i] = static_cast<int>(i);

    std::vector<Polynomial> w = convert_all(ring->defining(), U, up);
    for (std::size_t i = 0; i < r; ++i)
        w.push_back(Polynomial::variable(U, m + i) - gens[i].converted(U, up));

    std::vector<Polynomial> gb = groebner_basis(std::move(w), U);
    Polynomial nf = normal_form_vs(elem.converted(U, up), gb);
    return !uses_first_vars(nf, m);
}

bool submodule_over_subalgebra_contains(const Polynomial& elem,
                                        const std::vector<Polynomial>& gens,
                                        const std::vector<Polynomial>& mods,
                                        const RingPtr& ring) {
    const PolyRingPtr& Q = ring->cover();
    const std::size_t m = Q->nvars();

    std::vector<std::string> vars = Q->var_names();
    std::string eps = fresh_name(vars, "e");
    vars.push_back(eps);
    PolyRingPtr Qe = PolyRing::create(std::move(vars), Q->field(), Q->order().kind() == OrderKind::Lex
                                                                       ? MonomialOrder::lex()
                                                                       : MonomialOrder::degrevlex());
    std::vector<int> up(m);
    for (std::size_t i = 0; i < m; ++i) up[i] = static_cast<int>(i);

    Polynomial e = Polynomial::variable(Qe, m);
    std::vector<Polynomial> defining = convert_all(ring->defining(), Qe, up);
    defining.push_back(e * e);
    RingPtr ring_e = RingPresentation::quotient(Qe, std::move(defining));

    std::vector<Polynomial> sub_gens = convert_all(gens, Qe, up);
    for (const Polynomial& md : mods) sub_gens.push_back(md.converted(Qe, up) * e);

    return subalgebra_contains(elem.converted(Qe, up) * e, sub_gens, ring_e);
}

} // namespace amalgrade
