#include "amalgrade/amalgam.hpp"

#include "amalgrade/errors.hpp"
#include "amalgrade/ideal_ops.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace amalgrade {

// T, or T1..Tm; the stem grows until it clashes with no base variable.
std::vector<std::string> amalgam_tag_names(const std::vector<std::string>& base_vars,
                                           std::size_t m) {
    std::string stem = "T";
    for (;;) {
        std::vector<std::string> out;
        out.reserve(m);
        for (std::size_t u = 0; u < m; ++u)
            out.push_back(m == 1 ? stem : stem + std::to_string(u + 1));
        bool fresh = true;
        for (const std::string& name : out)
            if (std::find(base_vars.begin(), base_vars.end(), name) != base_vars.end()) {
                fresh = false;
                break;
            }
        if (fresh) return out;
        stem += "T";
    }
}

namespace {

void check_datum(const AmalgamDatum& d) {
    if (!d.A || !d.B || !d.f.attached() || !d.J.attached())
        throw DomainError("incomplete amalgam datum");
    if (!d.f.source()->same_ring_as(*d.A) || !d.f.target()->same_ring_as(*d.B))
        throw AmbientMismatchError("structure map does not run from the base ring to the extension ring");
    if (!(d.A->field() == d.B->field()))
        throw AmbientMismatchError("component rings live over different fields");
    if (!d.J.ambient()->same_ring_as(*d.B))
        throw AmbientMismatchError("ideal does not live in the extension ring");
    for (const Polynomial& j : d.subring_gens) {
        if (!j.ring()->same_as(*d.B->cover()))
            throw AmbientMismatchError("subring generator written in the wrong cover");
        if (!d.J.contains(j))
            throw DomainError("subring generator lies outside the ideal");
        if (d.nilpotent && !is_nilpotent(j, d.B))
            throw DomainError("datum claims nilpotency but a subring generator is not nilpotent");
    }
    if (d.module_finite()) {
        const FPModule& M = *d.j_module;
        if (!M.attached() || !M.ring()->same_ring_as(*d.A))
            throw AmbientMismatchError("module presentation not over the base ring");
        if (M.rank() != d.subring_gens.size())
            throw DomainError("module presentation rank does not match the subring generators");
        for (const ModVec& rel : M.relations()) {
            Polynomial s = Polynomial::zero(d.B->cover());
            for (std::size_t u = 0; u < M.rank(); ++u)
                s = s + d.f.apply(rel[u]) * d.subring_gens[u];
            if (!d.B->is_zero_elem(s))
                throw DomainError("module relation does not hold in the extension ring");
        }
    }
}

// Min(a), with one extra attempt for a = (0): the ambient may be a domain
// whose zero ideal certifies directly (staircase and friends).
std::vector<IdealHandle> min_primes_with_domain_fallback(const IdealHandle& a) {
    try {
        return minimal_primes(a);
    } catch (const NotDecidableError&) {
        if (!a.is_zero_ideal()) throw;
        return minimal_primes(a, {PrimeClaim(a)});
    }
}

} // namespace

Polynomial AmalgamRing::tag(std::size_t u) const {
    if (u >= tag_count()) throw DomainError("tag index out of range");
    return Polynomial::variable(ring_->cover(), datum_.A->nvars() + u);
}

std::vector<Polynomial> AmalgamRing::tags() const {
    std::vector<Polynomial> out;
    out.reserve(tag_count());
    for (std::size_t u = 0; u < tag_count(); ++u) out.push_back(tag(u));
    return out;
}

AmalgamRing build_amalgamation(const AmalgamDatum& d) {
    check_datum(d);

    const std::size_t nA = d.A->nvars();
    const std::size_t m = d.subring_gens.size();

    std::vector<std::string> names = d.A->cover()->var_names();
    for (std::string& t : amalgam_tag_names(names, m)) names.push_back(std::move(t));
    PolyRingPtr cover = PolyRing::create(std::move(names), d.A->field(), MonomialOrder::degrevlex());
    RingPtr free_cover = RingPresentation::quotient(cover, {});

    std::vector<Polynomial> to_A_images;
    to_A_images.reserve(nA + m);
    for (std::size_t i = 0; i < nA; ++i)
        to_A_images.push_back(Polynomial::variable(d.A->cover(), i));
    for (std::size_t u = 0; u < m; ++u)
        to_A_images.push_back(Polynomial::zero(d.A->cover()));

    std::vector<Polynomial> to_B_images = d.f.images();
    for (const Polynomial& j : d.subring_gens) to_B_images.push_back(j);

    RingMap to_A(free_cover, d.A, to_A_images);
    RingMap to_B(free_cover, d.B, to_B_images);
    IdealHandle kernel = ideal_intersection(map_kernel(to_A), map_kernel(to_B));

    AmalgamRing R;
    R.datum_ = d;
    R.ring_ = RingPresentation::quotient(cover, kernel.lifted_groebner());

    std::vector<Polynomial> iota_images;
    for (std::size_t i = 0; i < nA; ++i) iota_images.push_back(Polynomial::variable(cover, i));
    R.iota_ = RingMap(d.A, R.ring_, std::move(iota_images));
    R.proj_A_ = RingMap(R.ring_, d.A, std::move(to_A_images));
    R.proj_B_ = RingMap(R.ring_, d.B, std::move(to_B_images));

    for (std::size_t i = 0; i < nA; ++i) {
        Polynomial xi = Polynomial::variable(d.A->cover(), i);
        if (!(R.proj_A_.apply(R.iota_.images()[i]) == d.A->reduce(xi)))
            throw DomainError("structure maps violate proj_A o iota = id");
    }

    try {
        if (auto claims = extended_min_claims(R, IdealHandle::zero(d.A))) {
            std::vector<IdealHandle> comps =
                minimal_primes(IdealHandle::zero(R.ring_), *claims);
            std::vector<std::vector<Polynomial>> curated;
            curated.reserve(comps.size());
            for (const IdealHandle& c : comps) curated.push_back(c.gens());
            R.ring_->set_curated_components(std::move(curated));
            R.zero_components_ = std::move(comps);
            R.zero_claims_ = std::move(*claims);
        }
    } catch (const NotDecidableError&) {
        // components stay unknown; heights in the built ring may not decide
    }

    return R;
}

GenerationStatus verify_generation(const AmalgamDatum& d) {
    check_datum(d);

    bool ok = IdealHandle(d.B, d.subring_gens).same_ideal_as(d.J);
    if (ok) {
        std::vector<Polynomial> mods = d.subring_gens;
        for (std::size_t u = 0; u < d.subring_gens.size(); ++u)
            for (std::size_t v = u; v < d.subring_gens.size(); ++v)
                mods.push_back(d.subring_gens[u] * d.subring_gens[v]);
        const std::vector<Polynomial>& sub = d.f.images();
        for (std::size_t k = 0; ok && k < d.B->nvars(); ++k) {
            Polynomial yk = Polynomial::variable(d.B->cover(), k);
            for (const Polynomial& j : d.subring_gens) {
                if (!submodule_over_subalgebra_contains(yk * j, sub, mods, d.B)) {
                    ok = false;
                    break;
                }
            }
        }
    }
    if (ok) return GenerationStatus::Verified;
    return d.attested ? GenerationStatus::Attested : GenerationStatus::Failed;
}

IdealHandle extend_ideal(const IdealHandle& a, const AmalgamRing& R) {
    if (!a.attached() || !a.ambient()->same_ring_as(*R.datum().A))
        throw AmbientMismatchError("ideal does not live in the base ring");
    std::vector<Polynomial> gens;
    gens.reserve(a.gens().size());
    for (const Polynomial& g : a.gens()) gens.push_back(R.iota().apply(g));
    return IdealHandle(R.ring(), std::move(gens));
}

IdealHandle prime_p_prime(const PrimeClaim& p, const AmalgamRing& R) {
    if (!p.ideal.attached() || !p.ideal.ambient()->same_ring_as(*R.datum().A))
        throw AmbientMismatchError("claimed prime does not live in the base ring");
    if (!certify_prime(p))
        throw NotDecidableError("no primality certificate for the base ideal");
    std::vector<Polynomial> gens;
    gens.reserve(p.ideal.gens().size() + R.tag_count());
    for (const Polynomial& g : p.ideal.gens()) gens.push_back(R.iota().apply(g));
    for (Polynomial& t : R.tags()) gens.push_back(std::move(t));
    return IdealHandle(R.ring(), std::move(gens));
}

IdealHandle prime_q_bar(const IdealHandle& q, const AmalgamRing& R) {
    if (!q.attached() || !q.ambient()->same_ring_as(*R.datum().B))
        throw AmbientMismatchError("ideal does not live in the extension ring");
    if (q.contains_ideal(R.datum().J))
        throw DomainError("ideal contains the whole tag image ideal; contract a base prime instead");
    return contract_ideal(R.proj_B(), q);
}

FPModule amalgam_as_A_module(const AmalgamRing& R) {
    const AmalgamDatum& d = R.datum();
    if (!d.module_finite())
        throw NotDecidableError("no module presentation available for the ideal part");
    return FPModule::free_module(d.A, 1).direct_sum(*d.j_module);
}

AmalgamDatum trivial_extension(const RingPtr& A, const FPModule& M) {
    if (!A) throw DomainError("detached ring");
    if (!M.attached() || !M.ring()->same_ring_as(*A))
        throw AmbientMismatchError("module does not live over the given ring");

    const std::size_t nA = A->nvars();
    const std::size_t m = M.rank();
    std::vector<std::string> names = A->cover()->var_names();
    for (std::string& t : amalgam_tag_names(names, m)) names.push_back(std::move(t));
    PolyRingPtr cover = PolyRing::create(std::move(names), A->field(), MonomialOrder::degrevlex());

    std::vector<int> up(nA);
    for (std::size_t i = 0; i < nA; ++i) up[i] = static_cast<int>(i);

    std::vector<Polynomial> defs;
    for (const Polynomial& g : A->defining()) defs.push_back(g.converted(cover, up));
    for (const ModVec& rel : M.relations()) {
        Polynomial s = Polynomial::zero(cover);
        for (std::size_t u = 0; u < m; ++u)
            s = s + rel[u].converted(cover, up) * Polynomial::variable(cover, nA + u);
        if (!s.is_zero()) defs.push_back(s);
    }
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = u; v < m; ++v)
            defs.push_back(Polynomial::variable(cover, nA + u) * Polynomial::variable(cover, nA + v));
    RingPtr B = RingPresentation::quotient(cover, std::move(defs));

    std::vector<Polynomial> f_images;
    for (std::size_t i = 0; i < nA; ++i) f_images.push_back(Polynomial::variable(cover, i));
    std::vector<Polynomial> tags;
    for (std::size_t u = 0; u < m; ++u) tags.push_back(Polynomial::variable(cover, nA + u));

    AmalgamDatum d;
    d.A = A;
    d.B = B;
    d.f = RingMap(A, B, std::move(f_images));
    d.J = IdealHandle(B, tags);
    d.subring_gens = std::move(tags);
    d.j_module = M;
    d.nilpotent = true;
    return d;
}

AmalgamDatum duplication(const RingPtr& A, const IdealHandle& I) {
    if (!A) throw DomainError("detached ring");
    if (!I.attached() || !I.ambient()->same_ring_as(*A))
        throw AmbientMismatchError("ideal does not live in the given ring");

    AmalgamDatum d;
    d.A = A;
    d.B = I.ambient();
    d.f = RingMap::identity(d.B);
    d.J = I;
    d.subring_gens = I.gens();
    d.j_module = FPModule::ideal_as_module(I);
    d.nilpotent = ideal_is_nil(I);
    return d;
}

IdealHandle amalgam_kernel_by_product(const AmalgamRing& R) {
    const AmalgamDatum& d = R.datum();
    const std::size_t nA = d.A->nvars();
    const std::size_t nB = d.B->nvars();
    const std::size_t m = R.tag_count();

    std::vector<std::string> names;
    names.reserve(nA + nB + 1);
    for (std::size_t i = 0; i < nA; ++i) names.push_back("u" + std::to_string(i + 1));
    for (std::size_t j = 0; j < nB; ++j) names.push_back("v" + std::to_string(j + 1));
    names.push_back("e");
    PolyRingPtr P = PolyRing::create(std::move(names), d.A->field(), MonomialOrder::degrevlex());

    std::vector<int> up_A(nA), up_B(nB);
    for (std::size_t i = 0; i < nA; ++i) up_A[i] = static_cast<int>(i);
    for (std::size_t j = 0; j < nB; ++j) up_B[j] = static_cast<int>(nA + j);

    Polynomial e = Polynomial::variable(P, nA + nB);
    Polynomial rest = Polynomial::constant_long(P, 1) - e;

    std::vector<Polynomial> defs;
    for (const Polynomial& g : d.A->defining()) defs.push_back(g.converted(P, up_A));
    for (const Polynomial& g : d.B->defining()) defs.push_back(g.converted(P, up_B));
    defs.push_back(e * e - e);
    for (std::size_t i = 0; i < nA; ++i)
        defs.push_back(Polynomial::variable(P, i) * rest);
    for (std::size_t j = 0; j < nB; ++j)
        defs.push_back(Polynomial::variable(P, nA + j) * e);
    RingPtr product = RingPresentation::quotient(P, std::move(defs));

    RingPtr source = RingPresentation::quotient(R.ring()->cover(), {});
    std::vector<Polynomial> images;
    images.reserve(nA + m);
    for (std::size_t i = 0; i < nA; ++i)
        images.push_back(Polynomial::variable(P, i) * e + d.f.images()[i].converted(P, up_B) * rest);
    for (std::size_t u = 0; u < m; ++u)
        images.push_back(d.subring_gens[u].converted(P, up_B) * rest);

    return map_kernel(RingMap(source, product, std::move(images)));
}

std::optional<std::vector<PrimeClaim>> extended_min_claims(
    const AmalgamRing& R, const IdealHandle& a,
    const std::optional<std::vector<PrimeClaim>>& base_claims) {
    const AmalgamDatum& d = R.datum();
    if (!a.attached() || !a.ambient()->same_ring_as(*d.A))
        throw AmbientMismatchError("ideal does not live in the base ring");

    std::vector<PrimeClaim> pool;
    try {
        std::vector<IdealHandle> base_min = base_claims
                                                ? minimal_primes(a, *base_claims)
                                                : min_primes_with_domain_fallback(a);
        for (const IdealHandle& p : base_min)
            pool.emplace_back(contract_ideal(R.proj_A(), p), R.proj_A(), PrimeClaim(p));
        if (!d.nilpotent) {
            // with non-nilpotent tags the extension ring contributes
            // components of its own
            for (const IdealHandle& q : min_primes_with_domain_fallback(d.f.push_ideal(a)))
                pool.emplace_back(contract_ideal(R.proj_B(), q), R.proj_B(), PrimeClaim(q));
        }
    } catch (const NotDecidableError&) {
        return std::nullopt;
    }

    std::vector<std::string> keys;
    keys.reserve(pool.size());
    for (const PrimeClaim& c : pool) keys.push_back(c.ideal.canonical_key());
    std::vector<std::size_t> order(pool.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });

    std::vector<PrimeClaim> kept;
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const std::size_t i = order[oi];
        if (oi > 0 && keys[order[oi - 1]] == keys[i]) continue; // duplicate ideal
        bool redundant = false;
        for (std::size_t j = 0; j < pool.size() && !redundant; ++j)
            if (keys[j] != keys[i] && pool[i].ideal.contains_ideal(pool[j].ideal))
                redundant = true; // a strictly smaller claim exists
        if (!redundant) kept.push_back(pool[i]);
    }
    return kept;
}

} // namespace amalgrade
