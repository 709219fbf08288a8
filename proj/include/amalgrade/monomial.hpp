#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amalgrade/errors.hpp"

namespace amalgrade {

// Exponent vector over a fixed, implicit variable list. Monomials only meet
// other monomials of the same arity; the owning ring enforces that.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial var(std::size_t nvars, std::size_t i, std::uint32_t e = 1) {
        Monomial m(nvars);
        m.e_.at(i) = e;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t exp(std::size_t i) const { return e_[i]; }
    void set_exp(std::size_t i, std::uint32_t v) { e_[i] = v; }

    long total_degree() const {
        long d = 0;
        for (auto x : e_) d += x;
        return d;
    }

    bool is_one() const {
        for (auto x : e_) if (x) return false;
        return true;
    }

    // Number of distinct variables with positive exponent.
    std::size_t support_size() const {
        std::size_t k = 0;
        for (auto x : e_) if (x) ++k;
        return k;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // this / o; caller must know o | this.
    Monomial divided_by(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (o.e_[i] > e_[i]) throw DomainError("monomial division with remainder");
            r.e_[i] -= o.e_[i];
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i)
            if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] && o.e_[i]) return false;
        return true;
    }

    bool operator==(const Monomial&) const = default;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::vector<std::uint32_t> e_;
};

enum class OrderKind : unsigned char { Lex, DegRevLex, Block };

// Term order. Block orders compare the leading block (first `block` variables)
// by degrevlex first, so they eliminate that block.
class MonomialOrder {
public:
    static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0); }
    static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::DegRevLex, 0); }
    static MonomialOrder block_elim(std::size_t first_block) {
        return MonomialOrder(OrderKind::Block, first_block);
    }

    OrderKind kind() const { return kind_; }
    std::size_t block_size() const { return block_; }

    // Can normal forms under this order decide membership in k[x_{k+1},...]?
    bool eliminates(std::size_t k) const {
        switch (kind_) {
            case OrderKind::Lex: return true;
            case OrderKind::Block: return k <= block_;
            case OrderKind::DegRevLex: return k == 0;
        }
        return false;
    }

    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder&) const = default;

    std::string to_string() const;

private:
    MonomialOrder(OrderKind k, std::size_t b) : kind_(k), block_(b) {}
    OrderKind kind_;
    std::size_t block_;
};

} // namespace amalgrade
