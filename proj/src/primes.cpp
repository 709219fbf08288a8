#include "amalgrade/primes.hpp"

#include <algorithm>
#include <bit>

#include "amalgrade/budget.hpp"
#include "amalgrade/ideal_ops.hpp"

namespace amalgrade {

namespace {

// --- primality certificates ------------------------------------------------

// Reduced basis whose leading terms are all bare variables: the heads are
// distinct variables and, by reducedness, the tails avoid every head, so the
// quotient is a polynomial ring in the remaining variables. Empty basis:
// the quotient is the whole polynomial cover.
bool lex_staircase_certificate(const IdealHandle& p) {
    const PolyRingPtr& cover = p.ambient()->cover();
    PolyRingPtr L = PolyRing::create(cover->var_names(), cover->field(), MonomialOrder::lex());
    std::vector<int> ident(cover->nvars());
    for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = static_cast<int>(i);
    std::vector<Polynomial> lift;
    for (const Polynomial& g : p.lifted_groebner()) lift.push_back(g.converted(L, ident));
    for (const Polynomial& g : groebner_basis(lift, L)) {
        if (g.leading_monomial().total_degree() != 1) return false;
    }
    return true;
}

// The single variable a polynomial mentions, if there is exactly one.
std::optional<std::size_t> sole_variable(const Polynomial& g) {
    std::optional<std::size_t> var;
    for (const Term& t : g.terms())
        for (std::size_t v = 0; v < g.ring()->nvars(); ++v)
            if (t.mon.exp(v) > 0) {
                if (var && *var != v) return std::nullopt;
                var = v;
            }
    return var;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            out.push_back(n / d);
        }
    }
    return out;
}

// Degree 2 or 3 and no root in the coefficient field, hence irreducible.
bool rootless_univariate_certificate(const Polynomial& g, std::size_t var) {
    const long deg = g.total_degree();
    if (deg < 2 || deg > 3) return false;
    const PolyRingPtr& ring = g.ring();
    const Field& F = ring->field();

    std::vector<FieldElement> coeff(static_cast<std::size_t>(deg) + 1, FieldElement::zero(F));
    for (const Term& t : g.terms()) coeff[t.mon.exp(var)] = t.coeff;

    auto value_at = [&](const FieldElement& x) {
        FieldElement acc = coeff[static_cast<std::size_t>(deg)];
        for (long k = deg - 1; k >= 0; --k) acc = acc * x + coeff[static_cast<std::size_t>(k)];
        return acc;
    };

    if (F.is_rational()) {
        // Integer coefficients first, then the rational root test.
        mpz_class den = 1;
        for (const FieldElement& c : coeff)
            den = lcm(den, mpz_class(c.rational_value().get_den()));
        std::vector<mpz_class> ic;
        for (const FieldElement& c : coeff) {
            mpq_class scaled = c.rational_value() * mpq_class(den);
            ic.push_back(mpz_class(scaled.get_num()));
        }
        if (ic.front() == 0) return false; // 0 is a root
        const mpz_class bound(1000000000);
        if (abs(ic.front()) > bound || abs(ic.back()) > bound) return false; // refuse to certify
        for (const mpz_class& num : positive_divisors(ic.front())) {
            for (const mpz_class& d : positive_divisors(ic.back())) {
                budget::tick(1);
                FieldElement cand = FieldElement::from_rational(F, mpq_class(num, d));
                if (value_at(cand).is_zero() || value_at(-cand).is_zero()) return false;
            }
        }
        return true;
    }

    const std::uint32_t p = F.prime();
    if (p > 2000000) return false; // refuse rather than scan forever
    for (std::uint32_t r = 0; r < p; ++r) {
        budget::tick(1);
        if (value_at(FieldElement::from_long(F, r)).is_zero()) return false;
    }
    return true;
}

bool principal_univariate_certificate(const IdealHandle& p) {
    const std::vector<Polynomial>& gb = p.lifted_groebner();
    if (gb.size() != 1) return false;
    std::optional<std::size_t> var = sole_variable(gb.front());
    if (!var) return false;
    return rootless_univariate_certificate(gb.front(), *var);
}

// --- minimal prime routes ----------------------------------------------------

std::optional<std::vector<IdealHandle>> monomial_route(const IdealHandle& a) {
    const std::vector<Polynomial>& gb = a.lifted_groebner();
    for (const Polynomial& g : gb)
        if (g.term_count() != 1) return std::nullopt;

    const RingPtr& R = a.ambient();
    const std::size_t n = R->nvars();
    if (n > 20) throw DomainError("minimal prime enumeration supports at most 20 variables");

    std::vector<std::uint32_t> supports;
    for (const Polynomial& g : gb) {
        const Monomial& m = g.leading_monomial();
        std::uint32_t mask = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (m.exp(v) > 0) mask |= (1u << v);
        supports.push_back(mask);
    }

    auto covers = [&](std::uint32_t S) {
        for (std::uint32_t s : supports)
            if ((s & S) == 0) return false;
        return true;
    };

    budget::tick(std::size_t{1} << n);
    std::vector<IdealHandle> out;
    for (std::uint32_t S = 0; S < (1u << n); ++S) {
        if (!covers(S)) continue;
        bool minimal = true;
        for (std::size_t v = 0; v < n && minimal; ++v)
            if ((S >> v) & 1u)
                if (covers(S & ~(1u << v))) minimal = false;
        if (!minimal) continue;
        std::vector<Polynomial> gens;
        for (std::size_t v = 0; v < n; ++v)
            if ((S >> v) & 1u) gens.push_back(Polynomial::variable(R->cover(), v));
        out.emplace_back(R, std::move(gens));
    }
    std::sort(out.begin(), out.end(), [](const IdealHandle& x, const IdealHandle& y) {
        return x.canonical_key() < y.canonical_key();
    });
    return out;
}

std::vector<IdealHandle> verified_claims_route(const IdealHandle& a,
                                               const std::vector<PrimeClaim>& claims) {
    if (claims.empty())
        throw NotDecidableError("a proper ideal needs at least one claimed component");
    for (const PrimeClaim& c : claims) {
        if (!c.ideal.ambient()->same_ring_as(*a.ambient()))
            throw AmbientMismatchError("claimed component lives in a different ring");
        if (!c.ideal.contains_ideal(a))
            throw NotDecidableError("claimed component does not contain the ideal: " +
                                    c.ideal.to_string());
        if (!certify_prime(c))
            throw NotDecidableError("no primality certificate for claimed component: " +
                                    c.ideal.to_string());
    }
    for (std::size_t i = 0; i < claims.size(); ++i)
        for (std::size_t j = 0; j < claims.size(); ++j)
            if (i != j && claims[i].ideal.contains_ideal(claims[j].ideal))
                throw NotDecidableError("claimed components are not pairwise incomparable");

    IdealHandle meet = claims.front().ideal;
    for (std::size_t i = 1; i < claims.size(); ++i)
        meet = ideal_intersection(meet, claims[i].ideal);
    for (const Polynomial& g : meet.gens())
        if (!in_radical(g, a))
            throw NotDecidableError(
                "claimed components intersect outside the radical (decomposition incomplete)");

    std::vector<IdealHandle> out;
    for (const PrimeClaim& c : claims) out.push_back(c.ideal);
    std::sort(out.begin(), out.end(), [](const IdealHandle& x, const IdealHandle& y) {
        return x.canonical_key() < y.canonical_key();
    });
    return out;
}

std::vector<IdealHandle> minimal_primes_impl(const IdealHandle& a,
                                             const std::vector<PrimeClaim>* claims) {
    if (a.is_unit()) return {};
    if (auto mono = monomial_route(a)) return *mono;
    if (claims) return verified_claims_route(a, *claims);
    if (a.is_zero_ideal() && a.ambient()->curated_components()) {
        std::vector<PrimeClaim> curated;
        for (const std::vector<Polynomial>& gens : *a.ambient()->curated_components())
            curated.emplace_back(IdealHandle(a.ambient(), gens));
        return verified_claims_route(a, curated);
    }
    throw NotDecidableError("minimal primes: not a monomial ideal and no claimed decomposition");
}

} // namespace

bool certify_prime(const PrimeClaim& claim) {
    const IdealHandle& p = claim.ideal;
    if (p.is_unit()) return false;
    if (lex_staircase_certificate(p)) return true;
    if (principal_univariate_certificate(p)) return true;
    if (claim.via) {
        const PrimeClaim::Contraction& c = *claim.via;
        if (!c.along.source()->same_ring_as(*p.ambient())) return false;
        IdealHandle rederived = contract_ideal(c.along, c.upstream->ideal);
        if (rederived.same_ideal_as(p) && certify_prime(*c.upstream)) return true;
    }
    return false;
}

std::vector<IdealHandle> minimal_primes(const IdealHandle& a) {
    return minimal_primes_impl(a, nullptr);
}

std::vector<IdealHandle> minimal_primes(const IdealHandle& a,
                                        const std::vector<PrimeClaim>& claimed) {
    return minimal_primes_impl(a, &claimed);
}

HeightValue height(const IdealHandle& a, const std::optional<std::vector<PrimeClaim>>& claimed,
                   const std::optional<std::vector<PrimeClaim>>& claimed_zero) {
    if (a.is_unit()) return HeightValue::infinite();
    const RingPtr& R = a.ambient();
    std::vector<IdealHandle> mins =
        claimed ? minimal_primes(a, *claimed) : minimal_primes(a);
    IdealHandle zero = IdealHandle::zero(R);
    std::vector<IdealHandle> min0 =
        claimed_zero ? minimal_primes(zero, *claimed_zero) : minimal_primes(zero);

    std::vector<long> dim0;
    dim0.reserve(min0.size());
    for (const IdealHandle& q : min0) dim0.push_back(dim_of_quotient(q).value());

    HeightValue best = HeightValue::infinite();
    for (const IdealHandle& p : mins) {
        const long dim_p = dim_of_quotient(p).value();
        long ht = -1;
        for (std::size_t i = 0; i < min0.size(); ++i)
            if (p.contains_ideal(min0[i])) ht = std::max(ht, dim0[i] - dim_p);
        if (ht < 0)
            throw DomainError("component misses every minimal prime of (0)"); // unreachable
        best = std::min(best, HeightValue::finite(ht));
    }
    if (best.is_infinite()) throw DomainError("proper ideal with no components"); // unreachable
    return best;
}

HeightValue height_on_module(const IdealHandle& a, const FPModule& M,
                             const std::optional<std::vector<PrimeClaim>>& claimed_sum,
                             const std::optional<std::vector<PrimeClaim>>& claimed_zero) {
    if (!M.ring()->same_ring_as(*a.ambient()))
        throw AmbientMismatchError("height on a module over a different ring");
    IdealHandle ann = annihilator(M);
    RingPtr support_ring = RingPresentation::quotient_of(M.ring(), ann.gens());
    IdealHandle a_bar(support_ring, a.gens());
    return height(a_bar, claimed_sum, claimed_zero);
}

} // namespace amalgrade
