#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amalgrade/field.hpp"
#include "amalgrade/monomial.hpp"
#include "amalgrade/polynomial.hpp"
#include "amalgrade/rng.hpp"

using namespace amalgrade;

namespace {

PolyRingPtr qring(std::vector<std::string> vars,
                  MonomialOrder ord = MonomialOrder::degrevlex()) {
    return PolyRing::create(std::move(vars), Field::rationals(), ord);
}

Polynomial random_poly(SplitMix64& rng, const PolyRingPtr& r, int max_terms, int max_deg) {
    std::vector<Term> ts;
    int nt = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms))) + 1;
    for (int t = 0; t < nt; ++t) {
        Monomial m(r->nvars());
        for (std::size_t v = 0; v < r->nvars(); ++v)
            m.set_exp(v, static_cast<std::uint32_t>(rng.below(static_cast<std::uint64_t>(max_deg + 1))));
        long num = rng.range(-6, 6);
        long den = rng.range(1, 4);
        ts.push_back({m, FieldElement::from_rational(r->field(), mpq_class(num, den))});
    }
    return Polynomial::from_terms(r, std::move(ts));
}

} // namespace

TEST_CASE("rational elements stay in lowest terms with positive denominator") {
    Field QQ = Field::rationals();
    FieldElement a = FieldElement::from_string(QQ, "4/6");
    CHECK(a.rational_value().get_num() == 2);
    CHECK(a.rational_value().get_den() == 3);

    FieldElement b = FieldElement::from_string(QQ, "-3/9");
    FieldElement c = a + b; // 2/3 - 1/3 = 1/3
    CHECK(c.to_string() == "1/3");
    CHECK(c.rational_value().get_den() == 3);

    // Denominator sign is normalized by canonicalization.
    FieldElement d = FieldElement::from_rational(QQ, mpq_class(mpz_class(1), mpz_class(-2)));
    CHECK(d.to_string() == "-1/2");
    CHECK(d.rational_value().get_den() == 2);
}

TEST_CASE("no overflow: iterated squaring stays exact") {
    Field QQ = Field::rationals();
    FieldElement x = FieldElement::from_string(QQ, "3/2");
    for (int i = 0; i < 7; ++i) x = x * x;
    // 3^128 / 2^128, checked against GMP directly.
    mpz_class n, d;
    mpz_ui_pow_ui(n.get_mpz_t(), 3, 128);
    mpz_ui_pow_ui(d.get_mpz_t(), 2, 128);
    CHECK(x.rational_value() == mpq_class(n, d));
}

TEST_CASE("modular field keeps residues in range and checks the modulus") {
    Field F7 = Field::modular(7);
    FieldElement a = FieldElement::from_long(F7, -3);
    CHECK(a.residue() == 4);
    FieldElement b = FieldElement::from_string(F7, "3/2"); // 3 * inv(2) = 3*4 = 12 = 5
    CHECK(b.residue() == 5);
    CHECK((b * FieldElement::from_long(F7, 2)).residue() == 3);

    CHECK_THROWS_AS(Field::modular(6), DomainError);
    CHECK_THROWS_AS(Field::modular(1), DomainError);
    CHECK_NOTHROW(Field::modular(32003));
}

TEST_CASE("field arithmetic axioms, sampled") {
    for (Field f : {Field::rationals(), Field::modular(32003)}) {
        SplitMix64 rng(42);
        for (int i = 0; i < 200; ++i) {
            FieldElement a = FieldElement::from_long(f, rng.range(-50, 50));
            FieldElement b = FieldElement::from_long(f, rng.range(-50, 50));
            FieldElement c = FieldElement::from_long(f, rng.range(-50, 50));
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == FieldElement::zero(f));
            if (!b.is_zero()) CHECK(a / b * b == a);
        }
    }
}

TEST_CASE("mixed-field arithmetic is rejected") {
    FieldElement q = FieldElement::one(Field::rationals());
    FieldElement m = FieldElement::one(Field::modular(7));
    CHECK_THROWS_AS((void)(q + m), AmbientMismatchError);
    CHECK_THROWS_AS((void)(q == m), AmbientMismatchError);
}

TEST_CASE("lex and degrevlex comparisons") {
    // Three variables x > y > z.
    auto mon = [](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        return Monomial(std::vector<std::uint32_t>{a, b, c});
    };
    MonomialOrder lex = MonomialOrder::lex();
    MonomialOrder drl = MonomialOrder::degrevlex();

    CHECK(lex.greater(mon(1, 0, 0), mon(0, 5, 5)));       // x > y^5 z^5
    CHECK(drl.greater(mon(0, 5, 5), mon(1, 0, 0)));       // degree wins first
    // Degree tie x^2 y vs x y^2: fewer of the last variable wins under degrevlex.
    CHECK(drl.greater(mon(2, 1, 0), mon(1, 2, 0)));
    CHECK(lex.greater(mon(2, 1, 0), mon(1, 2, 0)));
    // x z vs y^2: degrevlex compares from the back, z beats nothing: y^2 has
    // less z, so x z < y^2.
    CHECK(drl.greater(mon(0, 2, 0), mon(1, 0, 1)));
    CHECK(lex.greater(mon(1, 0, 1), mon(0, 2, 0)));
}

TEST_CASE("block order eliminates its leading block") {
    auto mon = [](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        return Monomial(std::vector<std::uint32_t>{a, b, c});
    };
    MonomialOrder blk = MonomialOrder::block_elim(1);
    // Anything with the first variable beats anything without it.
    CHECK(blk.greater(mon(1, 0, 0), mon(0, 9, 9)));
    CHECK(blk.eliminates(1));
    CHECK_FALSE(blk.eliminates(2));
    CHECK(MonomialOrder::lex().eliminates(2));
    CHECK_FALSE(MonomialOrder::degrevlex().eliminates(1));
}

TEST_CASE("order is multiplicative and total, sampled") {
    SplitMix64 rng(7);
    for (MonomialOrder ord : {MonomialOrder::lex(), MonomialOrder::degrevlex(),
                              MonomialOrder::block_elim(2)}) {
        for (int i = 0; i < 300; ++i) {
            auto rand_mon = [&]() {
                Monomial m(4);
                for (std::size_t v = 0; v < 4; ++v)
                    m.set_exp(v, static_cast<std::uint32_t>(rng.below(4)));
                return m;
            };
            Monomial a = rand_mon(), b = rand_mon(), c = rand_mon();
            int ab = ord.compare(a, b);
            CHECK(ab == -ord.compare(b, a));
            CHECK(ord.compare(a * c, b * c) == ab); // multiplicative
            if (!(a == b)) CHECK(ab != 0);          // total
            Monomial one = Monomial::one(4);
            if (!a.is_one()) CHECK(ord.greater(a, one)); // global: 1 is least
        }
    }
}

TEST_CASE("polynomial canonical form: merged, sorted, no zero terms") {
    auto R = qring({"x", "y"});
    Field QQ = R->field();
    Monomial xy = Monomial(std::vector<std::uint32_t>{1, 1});
    Monomial x2 = Monomial(std::vector<std::uint32_t>{2, 0});
    std::vector<Term> ts = {
        {xy, FieldElement::from_long(QQ, 2)},
        {x2, FieldElement::from_long(QQ, 1)},
        {xy, FieldElement::from_long(QQ, -2)}, // cancels the first
    };
    Polynomial p = Polynomial::from_terms(R, ts);
    CHECK(p.term_count() == 1);
    CHECK(p.to_string() == "x^2");

    // from_terms on already-canonical input is the identity.
    Polynomial q = Polynomial::from_terms(R, p.terms());
    CHECK(p == q);
}

TEST_CASE("(x+1)^2 over F_2 drops the cross term") {
    auto R = PolyRing::create({"x"}, Field::modular(2), MonomialOrder::degrevlex());
    Polynomial p = parse_polynomial(R, "(x + 1)^2");
    // Expanded by hand: x^2 + 2x + 1, and 2 = 0 in F_2.
    CHECK(p == parse_polynomial(R, "x^2 + 1"));
    CHECK(p.term_count() == 2);
}

TEST_CASE("leading term of zero polynomial is an error") {
    auto R = qring({"x"});
    Polynomial z = Polynomial::zero(R);
    CHECK_THROWS_AS((void)z.leading(), DomainError);
    CHECK(z.total_degree() == -1);
}

TEST_CASE("leading term under degrevlex, worked example") {
    auto R = qring({"x", "y", "z"});
    Polynomial p = parse_polynomial(R, "x*y^2 - x^2*y + z^4");
    CHECK(p.leading_monomial() == Monomial(std::vector<std::uint32_t>{0, 0, 4}));
    CHECK(p.leading_coeff() == FieldElement::one(R->field()));
    Polynomial q = parse_polynomial(R, "x*y^2 - x^2*y");
    CHECK(q.leading_monomial() == Monomial(std::vector<std::uint32_t>{2, 1, 0}));
    CHECK(q.leading_coeff() == FieldElement::from_long(R->field(), -1));
}

TEST_CASE("ring axioms for polynomials, sampled") {
    auto R = qring({"x", "y", "z"});
    SplitMix64 rng(2026);
    for (int i = 0; i < 60; ++i) {
        Polynomial f = random_poly(rng, R, 4, 3);
        Polynomial g = random_poly(rng, R, 4, 3);
        Polynomial h = random_poly(rng, R, 4, 3);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) * h == f * h + g * h);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f - f == Polynomial::zero(R));
        CHECK(f * Polynomial::constant_long(R, 1) == f);
        CHECK(f * Polynomial::zero(R) == Polynomial::zero(R));
    }
}

TEST_CASE("mixed-ring polynomial arithmetic is rejected") {
    auto R = qring({"x", "y"});
    auto S = qring({"x", "w"});
    Polynomial a = parse_polynomial(R, "x");
    Polynomial b = parse_polynomial(S, "x");
    CHECK_THROWS_AS((void)(a + b), AmbientMismatchError);
}

TEST_CASE("to_string round-trips through the parser") {
    auto R = qring({"x", "y", "z"});
    SplitMix64 rng(99);
    for (int i = 0; i < 60; ++i) {
        Polynomial f = random_poly(rng, R, 5, 4);
        CHECK(parse_polynomial(R, f.to_string()) == f);
    }
    CHECK(parse_polynomial(R, "0") == Polynomial::zero(R));
    CHECK(Polynomial::zero(R).to_string() == "0");
}

TEST_CASE("parser rejects unknown variables and trailing garbage") {
    auto R = qring({"x", "y"});
    CHECK_THROWS_AS(parse_polynomial(R, "x + q"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(R, "x + 1 )"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(R, "x ^ y"), ParseError);
}

TEST_CASE("substitution is a ring homomorphism, sampled") {
    auto R = qring({"x", "y"});
    auto S = qring({"u", "v", "w"});
    std::vector<Polynomial> images = {parse_polynomial(S, "u*v - 1"),
                                      parse_polynomial(S, "w^2 + u")};
    SplitMix64 rng(5);
    for (int i = 0; i < 25; ++i) {
        Polynomial f = random_poly(rng, R, 3, 2);
        Polynomial g = random_poly(rng, R, 3, 2);
        CHECK((f + g).apply(images, S) == f.apply(images, S) + g.apply(images, S));
        CHECK((f * g).apply(images, S) == f.apply(images, S) * g.apply(images, S));
    }
}

TEST_CASE("conversion between rings permutes exponents and re-sorts") {
    auto R = qring({"x", "y"});
    auto S = qring({"t", "y", "x"}, MonomialOrder::lex());
    Polynomial p = parse_polynomial(R, "x^2*y + y^3");
    Polynomial q = p.converted(S, {2, 1});
    CHECK(q == parse_polynomial(S, "x^2*y + y^3"));
    // Dropping an occurring variable must fail.
    CHECK_THROWS_AS(p.converted(qring({"y"}), std::vector<int>{-1, 0}), DomainError);
}
