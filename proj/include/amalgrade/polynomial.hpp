#pragma once

#include <memory>
#include <string>
#include <vector>

#include "amalgrade/field.hpp"
#include "amalgrade/monomial.hpp"

namespace amalgrade {

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

// Free polynomial ring context: variable names, coefficient field, term order.
// Shared immutably by every polynomial built over it.
class PolyRing {
public:
    static PolyRingPtr create(std::vector<std::string> vars, Field field, MonomialOrder order);

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const std::string& var_name(std::size_t i) const { return vars_.at(i); }
    int var_index(const std::string& name) const;
    const Field& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }

    bool same_as(const PolyRing& o) const {
        return vars_ == o.vars_ && field_ == o.field_ && order_ == o.order_;
    }

    std::string to_string() const;

private:
    PolyRing(std::vector<std::string> vars, Field field, MonomialOrder order);
    std::vector<std::string> vars_;
    Field field_;
    MonomialOrder order_;
};

struct Term {
    Monomial mon;
    FieldElement coeff;
};

// Exact multivariate polynomial in canonical form: terms strictly descending
// under the ring's order, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default; // detached; most operations require a ring

    static Polynomial zero(PolyRingPtr r);
    static Polynomial constant(PolyRingPtr r, FieldElement c);
    static Polynomial constant_long(PolyRingPtr r, long long v);
    static Polynomial variable(PolyRingPtr r, std::size_t i);
    static Polynomial single(PolyRingPtr r, Monomial m, FieldElement c);
    static Polynomial from_terms(PolyRingPtr r, std::vector<Term> ts);

    const PolyRingPtr& ring() const { return ring_; }
    bool attached() const { return ring_ != nullptr; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return is_constant() && terms_[0].coeff.is_one(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
    }
    bool is_single_term() const { return terms_.size() == 1; }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading() const;
    const Monomial& leading_monomial() const { return leading().mon; }
    const FieldElement& leading_coeff() const { return leading().coeff; }

    long total_degree() const; // -1 for the zero polynomial
    bool is_homogeneous() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial pow(unsigned e) const;
    Polynomial scaled(const FieldElement& c) const;
    // this * (c * m), the inner loop of reduction.
    Polynomial times_term(const Monomial& m, const FieldElement& c) const;
    Polynomial monic() const; // DomainError on zero

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    FieldElement coeff_of(const Monomial& m) const;

    // Evaluate at images[i] substituted for variable i; images live in the
    // target ring (which may equal this one).
    Polynomial apply(const std::vector<Polynomial>& images, PolyRingPtr target) const;

    // Re-home into new_ring sending variable i to var_map[i] (-1 only allowed
    // for variables that do not occur). Coefficient field must agree.
    Polynomial converted(PolyRingPtr new_ring, const std::vector<int>& var_map) const;

    std::string to_string() const;

private:
    void require_ring() const;
    void check_compatible(const Polynomial& o) const;

    PolyRingPtr ring_;
    std::vector<Term> terms_;
};

// Parses an expression ("(x + 2*y)^2 - 3/4*z") over r's variables; full
// grammar: + - * ^, parentheses, integer and rational literals.
Polynomial parse_polynomial(const PolyRingPtr& r, const std::string& text);

} // namespace amalgrade
