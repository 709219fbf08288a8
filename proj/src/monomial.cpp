#include "amalgrade/monomial.hpp"

namespace amalgrade {

std::string Monomial::to_string(const std::vector<std::string>& names) const {
    if (is_one()) return "1";
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (!e_[i]) continue;
        if (!s.empty()) s += "*";
        s += names.at(i);
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s;
}

namespace {

int cmp_lex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
    }
    return 0;
}

int cmp_degrevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) { da += a.exp(i); db += b.exp(i); }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars())
        throw AmbientMismatchError("comparing monomials of different arity");
    const std::size_t n = a.nvars();
    switch (kind_) {
        case OrderKind::Lex:
            return cmp_lex(a, b, 0, n);
        case OrderKind::DegRevLex:
            return cmp_degrevlex(a, b, 0, n);
        case OrderKind::Block: {
            const std::size_t k = block_ < n ? block_ : n;
            if (int c = cmp_degrevlex(a, b, 0, k)) return c;
            return cmp_degrevlex(a, b, k, n);
        }
    }
    return 0;
}

std::string MonomialOrder::to_string() const {
    switch (kind_) {
        case OrderKind::Lex: return "lex";
        case OrderKind::DegRevLex: return "degrevlex";
        case OrderKind::Block: return "block(" + std::to_string(block_) + ")";
    }
    return "?";
}

} // namespace amalgrade
