#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "amalgrade/groebner.hpp"
#include "amalgrade/polynomial.hpp"

namespace amalgrade {

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

// A presented affine ring P/I: a free cover ring P and defining generators
// for I. The reduced basis of I is computed once on demand; normal forms
// against it give canonical representatives for ring elements.
//
// Presentations may also carry curated components: claimed generators for the
// minimal primes of (0). They are never trusted as-is; the prime machinery
// re-verifies them before use.
class RingPresentation {
public:
    static RingPtr free_ring(std::vector<std::string> vars, Field field,
                             MonomialOrder order = MonomialOrder::degrevlex());
    static RingPtr quotient(PolyRingPtr cover, std::vector<Polynomial> defining);
    // base's defining generators plus extra ones, same cover.
    static RingPtr quotient_of(const RingPtr& base, const std::vector<Polynomial>& extra);

    const PolyRingPtr& cover() const { return cover_; }
    std::size_t nvars() const { return cover_->nvars(); }
    const Field& field() const { return cover_->field(); }
    const std::vector<Polynomial>& defining() const { return defining_; }

    const std::vector<Polynomial>& defining_groebner() const; // reduced, cached
    Polynomial reduce(const Polynomial& p) const;             // canonical rep mod I
    bool is_zero_elem(const Polynomial& p) const { return reduce(p).is_zero(); }
    bool is_zero_ring() const;
    bool is_free_cover() const { return defining_.empty(); }

    // Every defining generator homogeneous for the standard grading?
    bool is_standard_graded() const;

    bool same_ring_as(const RingPresentation& o) const;

    void set_curated_components(std::vector<std::vector<Polynomial>> comps) const;
    const std::optional<std::vector<std::vector<Polynomial>>>& curated_components() const {
        return curated_;
    }

    std::string to_string() const;

private:
    RingPresentation(PolyRingPtr cover, std::vector<Polynomial> defining);

    PolyRingPtr cover_;
    std::vector<Polynomial> defining_;
    mutable std::shared_ptr<const std::vector<Polynomial>> gb_; // lazy
    mutable std::optional<std::vector<std::vector<Polynomial>>> curated_;
};

// An ideal of a presented ring, named by generators (stored as canonical
// representatives, zero generators dropped). Carries a cached basis of the
// lifted ideal I + (gens) in the cover, and optionally a hint for its minimal
// primes (claims to be verified, never believed).
class IdealHandle {
public:
    IdealHandle() = default;
    IdealHandle(RingPtr ambient, std::vector<Polynomial> gens);

    static IdealHandle zero(RingPtr ambient) { return IdealHandle(std::move(ambient), {}); }

    bool attached() const { return ambient_ != nullptr; }
    const RingPtr& ambient() const { return ambient_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    const std::vector<Polynomial>& lifted_groebner() const; // basis of I + (gens)
    Polynomial reduce(const Polynomial& p) const;
    bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }
    bool contains_ideal(const IdealHandle& o) const;
    bool same_ideal_as(const IdealHandle& o) const;

    bool is_unit() const;
    bool is_zero_ideal() const { return gens_.empty(); }

    std::string to_string() const;

    // Sorted, canonical generator strings of the lifted basis; used to order
    // and fingerprint ideals deterministically.
    std::string canonical_key() const;

private:
    RingPtr ambient_;
    std::vector<Polynomial> gens_;
    mutable std::shared_ptr<const std::vector<Polynomial>> gb_;
};

// Ring map between presented rings, given by images of the source cover
// variables. Well-definedness (defining generators map into the target's
// defining ideal) is checked at construction.
class RingMap {
public:
    RingMap() = default;
    RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images);

    bool attached() const { return source_ != nullptr; }
    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    const std::vector<Polynomial>& images() const { return images_; }

    // p given in the source cover; result is a canonical target representative.
    Polynomial apply(const Polynomial& p) const;

    // The extension f(a) * target.
    IdealHandle push_ideal(const IdealHandle& a) const;

    static RingMap compose(const RingMap& outer, const RingMap& inner);
    static RingMap identity(const RingPtr& r);

    std::string to_string() const;

private:
    RingPtr source_;
    RingPtr target_;
    std::vector<Polynomial> images_;
};

} // namespace amalgrade
