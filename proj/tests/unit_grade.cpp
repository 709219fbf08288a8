#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amalgrade/grade.hpp"
#include "amalgrade/ideal_ops.hpp"
#include "amalgrade/primes.hpp"
#include "amalgrade/rng.hpp"

using namespace amalgrade;

namespace {

RingPtr qfree(std::vector<std::string> vars) {
    return RingPresentation::quotient(
        PolyRing::create(std::move(vars), Field::rationals(), MonomialOrder::degrevlex()), {});
}

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r->cover(), s); }

IdealHandle ideal(const RingPtr& r, std::vector<std::string> gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(P(r, g));
    return IdealHandle(r, std::move(ps));
}

} // namespace

TEST_CASE("grade of a regular sequence equals its length") {
    auto R = qfree({"x", "y"});
    auto free1 = FPModule::free_module(R, 1);
    CHECK(koszul_grade(ideal(R, {"x", "y"}), free1) == GradeValue::finite(2));
    CHECK(koszul_grade(ideal(R, {"x"}), free1) == GradeValue::finite(1));
    CHECK(ext_grade(ideal(R, {"x", "y"}), free1) == GradeValue::finite(2));
}

TEST_CASE("degenerate grade inputs") {
    auto R = qfree({"x", "y"});
    auto free1 = FPModule::free_module(R, 1);
    // zero ideal on a nonzero module: H^0 = M
    CHECK(koszul_grade(IdealHandle::zero(R), free1) == GradeValue::finite(0));
    // unit ideal: every cohomology vanishes
    CHECK(koszul_grade(ideal(R, {"1"}), free1) == GradeValue::infinite());
    CHECK(koszul_grade(ideal(R, {"x", "x - 1"}), free1) == GradeValue::infinite());
    // zero module
    auto zero = FPModule::quotient_by_ideal(ideal(R, {"1"}));
    CHECK(koszul_grade(ideal(R, {"x"}), zero) == GradeValue::infinite());
    // the ext oracle refuses improper inputs instead
    CHECK_THROWS_AS(ext_grade(ideal(R, {"1"}), free1), DomainError);
    CHECK_THROWS_AS(ext_grade(ideal(R, {"x"}), zero), DomainError);
}

TEST_CASE("zerodivisors force grade zero") {
    auto A = qfree({"x"});
    // M = k[x]/(x^2) over k[x]: x kills the class of x.
    auto M = FPModule::quotient_by_ideal(ideal(A, {"x^2"}));
    CHECK(koszul_grade(ideal(A, {"x"}), M) == GradeValue::finite(0));
    CHECK(ext_grade(ideal(A, {"x"}), M) == GradeValue::finite(0));

    // Same thing intrinsically: over R = k[x]/(x^2), x is a zerodivisor.
    auto R = RingPresentation::quotient_of(A, {P(A, "x^2")});
    CHECK(koszul_grade(ideal(R, {"x"}), FPModule::free_module(R, 1)) == GradeValue::finite(0));
}

TEST_CASE("grade drops to one on the coordinate-line module") {
    auto R = qfree({"x", "y"});
    // M = R/(x) = k[y]; y is regular on it, x acts as zero.
    auto M = FPModule::quotient_by_ideal(ideal(R, {"x"}));
    CHECK(koszul_grade(ideal(R, {"x", "y"}), M) == GradeValue::finite(1));
    CHECK(ext_grade(ideal(R, {"x", "y"}), M) == GradeValue::finite(1));
}

TEST_CASE("grade of the maximal ideal on an ideal of the plane is one") {
    auto R = qfree({"x", "y"});
    auto I = FPModule::ideal_as_module(ideal(R, {"x", "y"}));
    CHECK(ext_grade(ideal(R, {"x", "y"}), I) == GradeValue::finite(1));
    CHECK(koszul_grade(ideal(R, {"x", "y"}), I) == GradeValue::finite(1));
}

TEST_CASE("koszul grade ignores the choice of generators") {
    auto R = qfree({"x", "y"});
    auto free1 = FPModule::free_module(R, 1);
    auto M = FPModule::quotient_by_ideal(ideal(R, {"x"}));
    auto lean = ideal(R, {"x", "y"});
    auto fat = ideal(R, {"x", "y", "x + y", "x^2 + 3*y"});
    CHECK(koszul_grade(lean, free1) == koszul_grade(fat, free1));
    CHECK(koszul_grade(lean, M) == koszul_grade(fat, M));

    auto one_gen = ideal(R, {"x"});
    auto padded = ideal(R, {"x", "x^2", "x + x^3"});
    CHECK(koszul_grade(one_gen, free1) == koszul_grade(padded, free1));
}

TEST_CASE("grade of a direct sum is the minimum of the grades") {
    auto R = qfree({"x", "y"});
    auto m = ideal(R, {"x", "y"});
    auto free1 = FPModule::free_module(R, 1);
    auto M = FPModule::quotient_by_ideal(ideal(R, {"x"}));
    auto S = free1.direct_sum(M);
    CHECK(koszul_grade(m, S) == GradeValue::finite(1));
    CHECK(std::min(koszul_grade(m, free1), koszul_grade(m, M)) == koszul_grade(m, S));
}

TEST_CASE("koszul and ext grades agree on sampled monomial ideals") {
    auto R = qfree({"x", "y", "z"});
    auto free1 = FPModule::free_module(R, 1);
    auto k = FPModule::quotient_by_ideal(ideal(R, {"x", "y", "z"}));
    SplitMix64 rng(7);
    int checked = 0;
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Polynomial> gens;
        std::size_t ngens = 1 + rng.below(2);
        for (std::size_t g = 0; g < ngens; ++g) {
            Monomial m = Monomial::one(3);
            std::size_t degree = 1 + rng.below(2);
            for (std::size_t d = 0; d < degree; ++d) {
                std::size_t v = rng.below(3);
                m.set_exp(v, m.exp(v) + 1);
            }
            gens.push_back(Polynomial::single(R->cover(), m, FieldElement::one(R->field())));
        }
        IdealHandle a(R, gens);
        if (a.is_unit()) continue;
        const FPModule& M = (trial % 2 == 0) ? free1 : k;
        if (M.is_zero_module()) continue;
        CHECK(koszul_grade(a, M) == ext_grade(a, M));
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("dimension from leading terms") {
    CHECK(krull_dim(qfree({"x", "y"})) == Dimension::of(2));
    auto A = qfree({"x"});
    CHECK(krull_dim(RingPresentation::quotient_of(A, {P(A, "x^2")})) == Dimension::of(0));
    CHECK(krull_dim(RingPresentation::quotient_of(A, {P(A, "1")})) ==
          Dimension::minus_infinity());
    auto R3 = qfree({"x", "y", "z"});
    CHECK(krull_dim(RingPresentation::quotient_of(R3, {P(R3, "x*y - z^3")})) == Dimension::of(2));
    CHECK(dim_of_quotient(ideal(R3, {"x", "y"})) == Dimension::of(1));
}

TEST_CASE("minimal primes of monomial ideals via covers") {
    auto R = qfree({"x", "y", "z"});
    auto mins = minimal_primes(ideal(R, {"x*y", "x*z"}));
    REQUIRE(mins.size() == 2);
    CHECK(mins[0].same_ideal_as(ideal(R, {"x"})));
    CHECK(mins[1].same_ideal_as(ideal(R, {"y", "z"})));

    auto only = minimal_primes(ideal(R, {"x"}));
    REQUIRE(only.size() == 1);
    CHECK(only[0].same_ideal_as(ideal(R, {"x"})));

    // (0) in a polynomial ring
    auto of_zero = minimal_primes(IdealHandle::zero(R));
    REQUIRE(of_zero.size() == 1);
    CHECK(of_zero[0].is_zero_ideal());

    // unit ideal has no components at all
    CHECK(minimal_primes(ideal(R, {"1"})).empty());

    // powers do not change the covers
    auto square = minimal_primes(ideal(R, {"x^2*y", "x*z^2"}));
    REQUIRE(square.size() == 2);
    CHECK(square[0].same_ideal_as(ideal(R, {"x"})));
    CHECK(square[1].same_ideal_as(ideal(R, {"y", "z"})));
}

TEST_CASE("claimed decompositions are verified, not believed") {
    auto R = qfree({"x", "y"});
    auto a = ideal(R, {"x*y*(x - y)"});
    // Correct decomposition: three components, all certifiable.
    std::vector<PrimeClaim> good;
    good.emplace_back(ideal(R, {"x"}));
    good.emplace_back(ideal(R, {"y"}));
    good.emplace_back(ideal(R, {"x - y"}));
    auto mins = minimal_primes(a, good);
    CHECK(mins.size() == 3);

    // Missing a component: incomplete, refused.
    std::vector<PrimeClaim> missing;
    missing.emplace_back(ideal(R, {"x"}));
    missing.emplace_back(ideal(R, {"y"}));
    CHECK_THROWS_AS(minimal_primes(a, missing), NotDecidableError);

    // Comparable claims: refused.
    std::vector<PrimeClaim> nested;
    nested.emplace_back(ideal(R, {"x"}));
    nested.emplace_back(ideal(R, {"x", "y"}));
    nested.emplace_back(ideal(R, {"y"}));
    nested.emplace_back(ideal(R, {"x - y"}));
    CHECK_THROWS_AS(minimal_primes(a, nested), NotDecidableError);

    // A claim that is not prime ((x-1)^2 has the root 1): no certificate.
    auto b = ideal(R, {"(x - 1)^2"});
    std::vector<PrimeClaim> reducible;
    reducible.emplace_back(b);
    CHECK_THROWS_AS(minimal_primes(b, reducible), NotDecidableError);

    // A monomial ideal never needs claims; bogus ones are simply unused.
    auto sq = minimal_primes(ideal(R, {"x^2"}), reducible);
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].same_ideal_as(ideal(R, {"x"})));

    // A claim that fails containment.
    std::vector<PrimeClaim> unrelated;
    unrelated.emplace_back(ideal(R, {"y"}));
    CHECK_THROWS_AS(minimal_primes(ideal(R, {"x - 1"}), unrelated), NotDecidableError);

    // Non-monomial ideal without claims: refused outright.
    CHECK_THROWS_AS(minimal_primes(a), NotDecidableError);
}

TEST_CASE("primality certificates: rootless quadratics and cubics") {
    auto A = qfree({"x"});
    CHECK(certify_prime(PrimeClaim(ideal(A, {"x^2 - 2"}))));
    CHECK(certify_prime(PrimeClaim(ideal(A, {"x^3 - 2"}))));
    CHECK(certify_prime(PrimeClaim(ideal(A, {"x^2 + 1"}))));
    CHECK_FALSE(certify_prime(PrimeClaim(ideal(A, {"x^2 - 1"}))));      // roots +-1
    CHECK_FALSE(certify_prime(PrimeClaim(ideal(A, {"x^2 - x"}))));      // root 0
    CHECK_FALSE(certify_prime(PrimeClaim(ideal(A, {"2*x^3 - x - 1"})))); // root 1
    CHECK_FALSE(certify_prime(PrimeClaim(ideal(A, {"1"}))));

    auto F7 = RingPresentation::quotient(
        PolyRing::create({"x"}, Field::modular(7), MonomialOrder::degrevlex()), {});
    CHECK(certify_prime(PrimeClaim(IdealHandle(F7, {parse_polynomial(F7->cover(), "x^2 - 3")}))));
    CHECK_FALSE(
        certify_prime(PrimeClaim(IdealHandle(F7, {parse_polynomial(F7->cover(), "x^2 - 2")}))));
}

TEST_CASE("primality via contraction provenance") {
    auto A = qfree({"x"});
    auto S = qfree({"u", "v"});
    RingMap phi(S, A, {P(A, "x^2"), P(A, "x^3")});
    auto cusp = map_kernel(phi); // (u^3 - v^2)
    CHECK(cusp.contains(P(S, "u^3 - v^2")));

    // Not certifiable on its own...
    CHECK_FALSE(certify_prime(PrimeClaim(cusp)));
    // ...but it is the contraction of (0) in k[x] along phi.
    PrimeClaim upstream(IdealHandle::zero(A));
    CHECK(certify_prime(PrimeClaim(cusp, phi, upstream)));

    // A wrong provenance gives no certificate: the contraction of (x) is
    // (u, v), not the cusp.
    PrimeClaim wrong_upstream(ideal(A, {"x"}));
    CHECK_FALSE(certify_prime(PrimeClaim(cusp, phi, wrong_upstream)));
}

TEST_CASE("heights in a polynomial ring") {
    auto R = qfree({"x", "y", "z"});
    CHECK(height(ideal(R, {"x"})) == HeightValue::finite(1));
    CHECK(height(ideal(R, {"x", "y"})) == HeightValue::finite(2));
    CHECK(height(ideal(R, {"x*y", "x*z"})) == HeightValue::finite(1));
    CHECK(height(IdealHandle::zero(R)) == HeightValue::finite(0));
    CHECK(height(ideal(R, {"1"})) == HeightValue::infinite());
}

TEST_CASE("height and dimension on the union of a line and a plane") {
    // R = k[X,Y,Z]/((Y,Z) meet (X-Y)): a plane and a line through the origin.
    auto cover = PolyRing::create({"X", "Y", "Z"}, Field::rationals(), MonomialOrder::degrevlex());
    auto R = RingPresentation::quotient(
        cover, {parse_polynomial(cover, "(X - Y)*Y"), parse_polynomial(cover, "(X - Y)*Z")});
    CHECK(krull_dim(R) == Dimension::of(2));

    std::vector<PrimeClaim> comps;
    comps.emplace_back(ideal(R, {"Y", "Z"}));
    comps.emplace_back(ideal(R, {"X - Y"}));
    auto mins = minimal_primes(IdealHandle::zero(R), comps);
    CHECK(mins.size() == 2);

    auto m = ideal(R, {"X", "Y", "Z"});
    CHECK(height(m, std::nullopt, comps) == HeightValue::finite(2));
    CHECK(height(IdealHandle::zero(R), comps, comps) == HeightValue::finite(0));
    // the plane component itself has height zero
    CHECK(height(ideal(R, {"Y", "Z"}), std::nullopt, comps) == HeightValue::finite(0));

    // the low Koszul grade that makes this ring interesting, cross-checked
    auto free1 = FPModule::free_module(R, 1);
    CHECK(koszul_grade(m, free1) == GradeValue::finite(1));
    CHECK(ext_grade(m, free1) == GradeValue::finite(1));

    // curated components on the presentation serve the same purpose
    R->set_curated_components({{P(R, "Y"), P(R, "Z")}, {P(R, "X - Y")}});
    CHECK(height(m) == HeightValue::finite(2));
}

TEST_CASE("height measured on a module") {
    auto R = qfree({"x", "y"});
    auto free1 = FPModule::free_module(R, 1);
    CHECK(height_on_module(ideal(R, {"x"}), free1) == HeightValue::finite(1));
    // M = R/(y): support is the x-axis; (x) cuts it at the origin.
    auto M = FPModule::quotient_by_ideal(ideal(R, {"y"}));
    CHECK(height_on_module(ideal(R, {"x"}), M) == HeightValue::finite(1));
    // disjoint support: (y - 1) misses V(y)
    CHECK(height_on_module(ideal(R, {"y - 1"}), M) == HeightValue::infinite());
    CHECK(height_on_module(ideal(R, {"1"}), free1) == HeightValue::infinite());
}

TEST_CASE("grade never exceeds decidable height") {
    auto R = qfree({"x", "y"});
    auto free1 = FPModule::free_module(R, 1);
    auto M = FPModule::quotient_by_ideal(ideal(R, {"x"}));
    for (const auto& gens :
         {std::vector<std::string>{"x"}, {"x", "y"}, {"x*y"}, {"x^2", "y"}}) {
        auto a = ideal(R, gens);
        auto ht = height(a);
        for (const FPModule& M2 : {free1, M}) {
            auto g = koszul_grade(a, M2);
            if (!g.is_infinite()) CHECK(g <= ht);
        }
    }
}
