#pragma once

#include <compare>

#include "amalgrade/modules.hpp"

namespace amalgrade {

// A non-negative count with an infinity sentinel, printed as "inf". Grades
// use infinity for the unit ideal / vanishing-cohomology case, heights for
// the inf-over-empty-set convention.
class ExtendedCount {
public:
    static ExtendedCount finite(long v);
    static ExtendedCount infinite();

    bool is_infinite() const { return inf_; }
    long value() const; // DomainError when infinite

    std::string to_string() const;

    friend bool operator==(const ExtendedCount&, const ExtendedCount&) = default;
    friend std::strong_ordering operator<=>(const ExtendedCount& a, const ExtendedCount& b) {
        if (a.inf_ && b.inf_) return std::strong_ordering::equal;
        if (a.inf_) return std::strong_ordering::greater;
        if (b.inf_) return std::strong_ordering::less;
        return a.v_ <=> b.v_;
    }

private:
    bool inf_ = false;
    long v_ = 0;
};

using GradeValue = ExtendedCount;
using HeightValue = ExtendedCount;

// Krull dimension; the zero ring gets the minus-infinity sentinel ("-inf").
class Dimension {
public:
    static Dimension of(long v);
    static Dimension minus_infinity();

    bool is_minus_infinity() const { return neg_inf_; }
    long value() const; // DomainError on the zero ring

    std::string to_string() const;

    friend bool operator==(const Dimension&, const Dimension&) = default;

private:
    bool neg_inf_ = false;
    long v_ = 0;
};

// Least i with nonvanishing cohomology of Hom(K(x), M), where K(x) is the
// Koszul complex on the handle's stored generators; infinity when every
// cohomology vanishes (in particular for the unit ideal and the zero module).
// The result does not depend on the chosen generating set.
GradeValue koszul_grade(const IdealHandle& a, const FPModule& M);

// Least i with Ext^i(R/a, M) != 0, from a stepwise free resolution of R/a.
// Serves as an independent oracle for koszul_grade; requires a proper and
// M nonzero. The scan stops at the variable count of the cover: a finite
// grade never exceeds the ring dimension.
GradeValue ext_grade(const IdealHandle& a, const FPModule& M);

// Combinatorial dimension of the leading-term ideal: the largest variable
// subset S such that no leading monomial of the defining basis is supported
// inside S. Exact for affine algebras, any global term order.
Dimension krull_dim(const RingPtr& R);

// dim R/a for a presented ring R and ideal a of it.
Dimension dim_of_quotient(const IdealHandle& a);

} // namespace amalgrade
