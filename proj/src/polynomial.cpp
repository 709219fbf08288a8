#include "amalgrade/polynomial.hpp"

#include <algorithm>

#include "amalgrade/budget.hpp"

namespace amalgrade {

PolyRing::PolyRing(std::vector<std::string> vars, Field field, MonomialOrder order)
    : vars_(std::move(vars)), field_(field), order_(order) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].empty()) throw DomainError("empty variable name");
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                throw DomainError("duplicate variable name " + vars_[i]);
    }
}

PolyRingPtr PolyRing::create(std::vector<std::string> vars, Field field, MonomialOrder order) {
    return PolyRingPtr(new PolyRing(std::move(vars), field, order));
}

int PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

std::string PolyRing::to_string() const {
    std::string s = field_.to_string() + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    return s + "] " + order_.to_string();
}

void Polynomial::require_ring() const {
    if (!ring_) throw DomainError("operation on detached polynomial");
}

void Polynomial::check_compatible(const Polynomial& o) const {
    require_ring();
    o.require_ring();
    if (ring_ == o.ring_) return;
    if (!ring_->same_as(*o.ring_))
        throw AmbientMismatchError("polynomials from different rings: " +
                                   ring_->to_string() + " vs " + o.ring_->to_string());
}

Polynomial Polynomial::zero(PolyRingPtr r) {
    Polynomial p;
    p.ring_ = std::move(r);
    return p;
}

Polynomial Polynomial::constant(PolyRingPtr r, FieldElement c) {
    if (!(c.field() == r->field()))
        throw AmbientMismatchError("constant from wrong field for " + r->to_string());
    Polynomial p = zero(std::move(r));
    if (!c.is_zero())
        p.terms_.push_back({Monomial::one(p.ring_->nvars()), std::move(c)});
    return p;
}

Polynomial Polynomial::constant_long(PolyRingPtr r, long long v) {
    FieldElement c = FieldElement::from_long(r->field(), v);
    return constant(std::move(r), std::move(c));
}

Polynomial Polynomial::variable(PolyRingPtr r, std::size_t i) {
    if (i >= r->nvars()) throw DomainError("variable index out of range");
    Monomial m = Monomial::var(r->nvars(), i);
    FieldElement c = FieldElement::one(r->field());
    Polynomial p = zero(std::move(r));
    p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::single(PolyRingPtr r, Monomial m, FieldElement c) {
    if (m.nvars() != r->nvars()) throw AmbientMismatchError("monomial arity mismatch");
    std::vector<Term> ts;
    ts.push_back({std::move(m), std::move(c)});
    return from_terms(std::move(r), std::move(ts));
}

Polynomial Polynomial::from_terms(PolyRingPtr r, std::vector<Term> ts) {
    const MonomialOrder& ord = r->order();
    for (const Term& t : ts) {
        if (t.mon.nvars() != r->nvars()) throw AmbientMismatchError("monomial arity mismatch");
        if (!(t.coeff.field() == r->field())) throw AmbientMismatchError("coefficient field mismatch");
    }
    std::sort(ts.begin(), ts.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mon, b.mon); });
    Polynomial p = zero(std::move(r));
    for (Term& t : ts) {
        if (t.coeff.is_zero()) continue;
        if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
            p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& Polynomial::leading() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return terms_.front();
}

long Polynomial::total_degree() const {
    long d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mon.total_degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = terms_[0].mon.total_degree();
    for (const Term& t : terms_)
        if (t.mon.total_degree() != d) return false;
    return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    const MonomialOrder& ord = ring_->order();
    Polynomial r = zero(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.compare(terms_[i].mon, o.terms_[j].mon);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            FieldElement s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mon, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    if (is_zero() || o.is_zero()) return zero(ring_);
    budget::tick(static_cast<long long>(terms_.size()) * static_cast<long long>(o.terms_.size()));
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_)
            prod.push_back({a.mon * b.mon, a.coeff * b.coeff});
    return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::pow(unsigned e) const {
    require_ring();
    Polynomial acc = constant_long(ring_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    require_ring();
    if (c.is_zero()) return zero(ring_);
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = t.coeff * c;
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const FieldElement& c) const {
    require_ring();
    if (c.is_zero()) return zero(ring_);
    Polynomial r = *this;
    for (Term& t : r.terms_) {
        t.mon = t.mon * m;
        t.coeff = t.coeff * c;
    }
    return r; // multiplying by a fixed term preserves the order of terms
}

Polynomial Polynomial::monic() const {
    return scaled(leading().coeff.inverse());
}

bool Polynomial::operator==(const Polynomial& o) const {
    check_compatible(o);
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mon == o.terms_[i].mon) || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

FieldElement Polynomial::coeff_of(const Monomial& m) const {
    require_ring();
    for (const Term& t : terms_)
        if (t.mon == m) return t.coeff;
    return FieldElement::zero(ring_->field());
}

Polynomial Polynomial::apply(const std::vector<Polynomial>& images, PolyRingPtr target) const {
    require_ring();
    if (images.size() != ring_->nvars())
        throw DomainError("substitution needs one image per variable");
    if (!(ring_->field() == target->field()))
        throw AmbientMismatchError("substitution cannot change the coefficient field");
    for (const Polynomial& im : images)
        if (!im.attached() || !im.ring()->same_as(*target))
            throw AmbientMismatchError("substitution image not in the target ring");

    // Per-variable power cache, grown on demand.
    std::vector<std::vector<Polynomial>> pw(images.size());
    auto power = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
        auto& cache = pw[v];
        if (cache.empty()) cache.push_back(Polynomial::constant_long(target, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
        return cache[e];
    };

    Polynomial out = Polynomial::zero(target);
    for (const Term& t : terms_) {
        Polynomial piece = Polynomial::constant(target, t.coeff);
        for (std::size_t v = 0; v < images.size(); ++v)
            if (t.mon.exp(v)) piece = piece * power(v, t.mon.exp(v));
        out = out + piece;
    }
    return out;
}

Polynomial Polynomial::converted(PolyRingPtr new_ring, const std::vector<int>& var_map) const {
    require_ring();
    if (var_map.size() != ring_->nvars()) throw DomainError("variable map has wrong length");
    if (!(new_ring->field() == ring_->field()))
        throw AmbientMismatchError("conversion cannot change the coefficient field");
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial m(new_ring->nvars());
        for (std::size_t i = 0; i < var_map.size(); ++i) {
            if (!t.mon.exp(i)) continue;
            if (var_map[i] < 0)
                throw DomainError("conversion drops an occurring variable: " + ring_->var_name(i));
            m.set_exp(static_cast<std::size_t>(var_map[i]), t.mon.exp(i));
        }
        ts.push_back({std::move(m), t.coeff});
    }
    return from_terms(std::move(new_ring), std::move(ts));
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    const auto& names = ring_->var_names();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        FieldElement c = t.coeff;
        if (i == 0) {
            if (c.is_negative()) { s += "-"; c = c.abs(); }
        } else {
            if (c.is_negative()) { s += " - "; c = c.abs(); }
            else s += " + ";
        }
        const bool unit_coeff = c.is_one();
        const bool bare = t.mon.is_one();
        if (bare) s += c.to_string();
        else if (unit_coeff) s += t.mon.to_string(names);
        else s += c.to_string() + "*" + t.mon.to_string(names);
    }
    return s;
}

} // namespace amalgrade
