#include "amalgrade/field.hpp"

namespace amalgrade {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Residue inverse by extended Euclid.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p), new_r = static_cast<long long>(a % p);
    while (new_r != 0) {
        long long q = r / new_r;
        t -= q * new_t; std::swap(t, new_t);
        r -= q * new_r; std::swap(r, new_r);
    }
    if (r != 1) throw DomainError("residue not invertible");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t mpz_mod_u(const mpz_class& z, std::uint32_t p) {
    mpz_class m = z % p; // sign follows z in GMP's C++ wrapper
    if (m < 0) m += p;
    return m.get_ui();
}

} // namespace

Field Field::modular(std::uint32_t p) {
    if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
        throw DomainError("modulus must be a prime in [2, 2^31): got " + std::to_string(p));
    return Field(FieldKind::Modular, p);
}

std::uint32_t Field::prime() const {
    if (kind_ != FieldKind::Modular) throw DomainError("field has no characteristic prime");
    return p_;
}

std::string Field::to_string() const {
    return kind_ == FieldKind::Rational ? "QQ" : "Fp(" + std::to_string(p_) + ")";
}

FieldElement FieldElement::zero(const Field& f) { return FieldElement(f); }

FieldElement FieldElement::one(const Field& f) { return from_long(f, 1); }

FieldElement FieldElement::from_long(const Field& f, long long v) {
    FieldElement e(f);
    if (f.is_rational()) {
        e.q_ = mpq_class(mpz_class(static_cast<long>(v)));
    } else {
        long long m = v % static_cast<long long>(f.prime());
        if (m < 0) m += f.prime();
        e.r_ = static_cast<std::uint64_t>(m);
    }
    return e;
}

FieldElement FieldElement::from_rational(const Field& f, const mpq_class& q) {
    // Copy numerator and denominator at the mpz level and canonicalize before
    // any mpq-level operation: this libgmp crashes on mpq copies whose
    // denominator is negative (e.g. values built with mpq_class(num, den)).
    mpq_class c;
    mpz_set(mpq_numref(c.get_mpq_t()), mpq_numref(q.get_mpq_t()));
    mpz_set(mpq_denref(c.get_mpq_t()), mpq_denref(q.get_mpq_t()));
    if (mpz_sgn(mpq_denref(c.get_mpq_t())) == 0)
        throw DomainError("rational with zero denominator");
    c.canonicalize();

    FieldElement e(f);
    if (f.is_rational()) {
        e.q_ = c;
    } else {
        std::uint64_t den = mpz_mod_u(c.get_den(), f.prime());
        if (den == 0) throw DomainError("denominator vanishes in " + f.to_string());
        std::uint64_t num = mpz_mod_u(c.get_num(), f.prime());
        e.r_ = (num * mod_inverse(den, f.prime())) % f.prime();
    }
    return e;
}

FieldElement FieldElement::from_string(const Field& f, const std::string& s) {
    try {
        mpq_class q(s);
        return from_rational(f, q);
    } catch (const std::invalid_argument&) {
        throw DomainError("cannot parse field element from \"" + s + "\"");
    }
}

bool FieldElement::is_zero() const {
    return field_.is_rational() ? (sgn(q_) == 0) : (r_ == 0);
}

bool FieldElement::is_one() const {
    return field_.is_rational() ? (q_ == 1) : (r_ == 1);
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (!(field_ == o.field_))
        throw AmbientMismatchError("field elements live in " + field_.to_string() +
                                   " and " + o.field_.to_string());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(o);
    FieldElement e(field_);
    if (field_.is_rational()) e.q_ = q_ + o.q_;
    else e.r_ = (r_ + o.r_) % field_.prime();
    return e;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(o);
    FieldElement e(field_);
    if (field_.is_rational()) e.q_ = q_ - o.q_;
    else e.r_ = (r_ + field_.prime() - o.r_) % field_.prime();
    return e;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(o);
    FieldElement e(field_);
    if (field_.is_rational()) e.q_ = q_ * o.q_;
    else e.r_ = (r_ * o.r_) % field_.prime(); // p < 2^31, product fits
    return e;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

FieldElement FieldElement::operator-() const {
    FieldElement e(field_);
    if (field_.is_rational()) e.q_ = -q_;
    else e.r_ = r_ == 0 ? 0 : field_.prime() - r_;
    return e;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    FieldElement e(field_);
    if (field_.is_rational()) e.q_ = 1 / q_;
    else e.r_ = mod_inverse(r_, field_.prime());
    return e;
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same_field(o);
    return field_.is_rational() ? (q_ == o.q_) : (r_ == o.r_);
}

bool FieldElement::is_negative() const {
    return field_.is_rational() && sgn(q_) < 0;
}

FieldElement FieldElement::abs() const {
    return is_negative() ? -*this : *this;
}

const mpq_class& FieldElement::rational_value() const {
    if (!field_.is_rational()) throw DomainError("not a rational element");
    return q_;
}

std::uint64_t FieldElement::residue() const {
    if (!field_.is_modular()) throw DomainError("not a modular element");
    return r_;
}

long FieldElement::bit_length() const {
    if (field_.is_rational()) {
        long n = static_cast<long>(mpz_sizeinbase(q_.get_num().get_mpz_t(), 2));
        long d = static_cast<long>(mpz_sizeinbase(q_.get_den().get_mpz_t(), 2));
        return n > d ? n : d;
    }
    long bits = 0;
    for (std::uint64_t v = r_; v != 0; v >>= 1) ++bits;
    return bits == 0 ? 1 : bits;
}

std::string FieldElement::to_string() const {
    return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

} // namespace amalgrade
