#include "amalgrade/presentation.hpp"

#include <algorithm>

namespace amalgrade {

RingPresentation::RingPresentation(PolyRingPtr cover, std::vector<Polynomial> defining)
    : cover_(std::move(cover)) {
    defining_.reserve(defining.size());
    for (Polynomial& g : defining) {
        if (!g.attached() || !g.ring()->same_as(*cover_))
            throw AmbientMismatchError("defining generator not in the cover ring");
        if (!g.is_zero()) defining_.push_back(std::move(g));
    }
}

RingPtr RingPresentation::free_ring(std::vector<std::string> vars, Field field,
                                    MonomialOrder order) {
    PolyRingPtr cover = PolyRing::create(std::move(vars), field, order);
    return RingPtr(new RingPresentation(std::move(cover), {}));
}

RingPtr RingPresentation::quotient(PolyRingPtr cover, std::vector<Polynomial> defining) {
    return RingPtr(new RingPresentation(std::move(cover), std::move(defining)));
}

RingPtr RingPresentation::quotient_of(const RingPtr& base, const std::vector<Polynomial>& extra) {
    std::vector<Polynomial> all = base->defining();
    for (const Polynomial& g : extra) all.push_back(g);
    return quotient(base->cover(), std::move(all));
}

const std::vector<Polynomial>& RingPresentation::defining_groebner() const {
    if (!gb_)
        gb_ = std::make_shared<const std::vector<Polynomial>>(groebner_basis(defining_, cover_));
    return *gb_;
}

Polynomial RingPresentation::reduce(const Polynomial& p) const {
    if (!p.attached() || !p.ring()->same_as(*cover_))
        throw AmbientMismatchError("element not in the cover ring of " + to_string());
    if (defining_.empty()) return p;
    return normal_form_vs(p, defining_groebner());
}

bool RingPresentation::is_zero_ring() const {
    const auto& gb = defining_groebner();
    return gb.size() == 1 && gb.front().is_constant();
}

bool RingPresentation::is_standard_graded() const {
    for (const Polynomial& g : defining_)
        if (!g.is_homogeneous()) return false;
    return true;
}

bool RingPresentation::same_ring_as(const RingPresentation& o) const {
    if (this == &o) return true;
    if (!cover_->same_as(*o.cover_)) return false;
    const auto& a = defining_groebner();
    const auto& b = o.defining_groebner();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

void RingPresentation::set_curated_components(std::vector<std::vector<Polynomial>> comps) const {
    curated_ = std::move(comps);
}

std::string RingPresentation::to_string() const {
    std::string s = cover_->to_string();
    if (!defining_.empty()) {
        s += " / (";
        for (std::size_t i = 0; i < defining_.size(); ++i) {
            if (i) s += ", ";
            s += defining_[i].to_string();
        }
        s += ")";
    }
    return s;
}

IdealHandle::IdealHandle(RingPtr ambient, std::vector<Polynomial> gens)
    : ambient_(std::move(ambient)) {
    gens_.reserve(gens.size());
    for (Polynomial& g : gens) {
        Polynomial r = ambient_->reduce(g);
        if (!r.is_zero()) gens_.push_back(std::move(r));
    }
}

const std::vector<Polynomial>& IdealHandle::lifted_groebner() const {
    if (!gb_) {
        std::vector<Polynomial> all = ambient_->defining();
        for (const Polynomial& g : gens_) all.push_back(g);
        gb_ = std::make_shared<const std::vector<Polynomial>>(
            groebner_basis(std::move(all), ambient_->cover()));
    }
    return *gb_;
}

Polynomial IdealHandle::reduce(const Polynomial& p) const {
    if (!attached()) throw DomainError("detached ideal handle");
    if (!p.attached() || !p.ring()->same_as(*ambient_->cover()))
        throw AmbientMismatchError("element not in the ambient cover");
    return normal_form_vs(p, lifted_groebner());
}

bool IdealHandle::contains_ideal(const IdealHandle& o) const {
    if (!ambient_->same_ring_as(*o.ambient_))
        throw AmbientMismatchError("ideals in different rings");
    for (const Polynomial& g : o.gens_)
        if (!contains(g)) return false;
    return true;
}

bool IdealHandle::same_ideal_as(const IdealHandle& o) const {
    return contains_ideal(o) && o.contains_ideal(*this);
}

bool IdealHandle::is_unit() const {
    const auto& gb = lifted_groebner();
    return gb.size() == 1 && gb.front().is_constant();
}

std::string IdealHandle::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].to_string();
    }
    return s + ")";
}

std::string IdealHandle::canonical_key() const {
    std::vector<std::string> parts;
    for (const Polynomial& g : lifted_groebner()) parts.push_back(g.to_string());
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (const std::string& p : parts) {
        if (!s.empty()) s += " | ";
        s += p;
    }
    return s;
}

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)) {
    if (images.size() != source_->nvars())
        throw DomainError("ring map needs one image per source variable");
    if (!(source_->field() == target_->field()))
        throw AmbientMismatchError("ring map cannot change the coefficient field");
    images_.reserve(images.size());
    for (Polynomial& im : images) {
        if (!im.attached() || !im.ring()->same_as(*target_->cover()))
            throw AmbientMismatchError("map image not in the target cover");
        images_.push_back(target_->reduce(im));
    }
    // Well-definedness: defining generators must land in the target's ideal.
    for (const Polynomial& g : source_->defining()) {
        if (!apply(g).is_zero())
            throw DomainError("map not well-defined: image of " + g.to_string() +
                              " is nonzero in " + target_->to_string());
    }
}

Polynomial RingMap::apply(const Polynomial& p) const {
    if (!attached()) throw DomainError("detached ring map");
    if (!p.attached() || !p.ring()->same_as(*source_->cover()))
        throw AmbientMismatchError("argument not in the source cover");
    return target_->reduce(p.apply(images_, target_->cover()));
}

IdealHandle RingMap::push_ideal(const IdealHandle& a) const {
    if (!a.ambient()->same_ring_as(*source_))
        throw AmbientMismatchError("ideal not in the map's source");
    std::vector<Polynomial> gens;
    gens.reserve(a.gens().size());
    for (const Polynomial& g : a.gens()) gens.push_back(apply(g));
    return IdealHandle(target_, std::move(gens));
}

RingMap RingMap::compose(const RingMap& outer, const RingMap& inner) {
    if (!inner.target()->same_ring_as(*outer.source()))
        throw AmbientMismatchError("maps do not compose");
    std::vector<Polynomial> images;
    images.reserve(inner.images().size());
    for (const Polynomial& im : inner.images()) images.push_back(outer.apply(im));
    return RingMap(inner.source(), outer.target(), std::move(images));
}

RingMap RingMap::identity(const RingPtr& r) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < r->nvars(); ++i)
        images.push_back(Polynomial::variable(r->cover(), i));
    return RingMap(r, r, std::move(images));
}

std::string RingMap::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) s += ", ";
        s += source_->cover()->var_name(i) + " -> " + images_[i].to_string();
    }
    return s + "]";
}

} // namespace amalgrade
