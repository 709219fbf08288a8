#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "amalgrade/errors.hpp"

namespace amalgrade {

enum class FieldKind : unsigned char { Rational, Modular };

// Coefficient field descriptor: the rationals, or Z/p for an odd-sized prime p.
// Cheap value type; every FieldElement carries one so mixed-field arithmetic
// is caught at the first operation instead of corrupting results.
class Field {
public:
    static Field rationals() { return Field(FieldKind::Rational, 0); }
    static Field modular(std::uint32_t p); // requires 2 <= p < 2^31 and p prime

    FieldKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == FieldKind::Rational; }
    bool is_modular() const { return kind_ == FieldKind::Modular; }
    std::uint32_t prime() const;

    bool operator==(const Field&) const = default;

    std::string to_string() const;

private:
    Field(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}
    FieldKind kind_;
    std::uint32_t p_;
};

// An element of a Field, always in canonical form: rationals in lowest terms
// with positive denominator (mpq_class canonicalized), residues in [0, p).
class FieldElement {
public:
    static FieldElement zero(const Field& f);
    static FieldElement one(const Field& f);
    static FieldElement from_long(const Field& f, long long v);
    // Parses "n", "-n", or "n/d"; arbitrary-size integers accepted.
    static FieldElement from_string(const Field& f, const std::string& s);
    static FieldElement from_rational(const Field& f, const mpq_class& q);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const; // DomainError on zero divisor
    FieldElement operator-() const;
    FieldElement inverse() const;

    bool operator==(const FieldElement& o) const; // AmbientMismatchError across fields
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // True when the canonical signed representative is negative (rationals only;
    // modular residues are never negative). Used by printers.
    bool is_negative() const;
    FieldElement abs() const;

    const mpq_class& rational_value() const;
    std::uint64_t residue() const;

    // Bits in the larger of numerator and denominator (rationals), or in the
    // residue (modular). Feeds the kernel statistics, nothing else.
    long bit_length() const;

    std::string to_string() const;

private:
    explicit FieldElement(const Field& f) : field_(f) {}
    void check_same_field(const FieldElement& o) const;

    Field field_;
    mpq_class q_;            // Rational payload
    std::uint64_t r_ = 0;    // Modular payload
};

} // namespace amalgrade
