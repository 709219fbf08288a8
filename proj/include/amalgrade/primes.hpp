#pragma once

#include "amalgrade/grade.hpp"

namespace amalgrade {

// A claimed prime ideal, optionally with its origin: the preimage of an
// upstream claim along a ring map. Claims are inputs to verification and are
// never trusted as stated.
struct PrimeClaim {
    IdealHandle ideal;

    struct Contraction {
        RingMap along;                        // source ring = the claim's ambient ring
        std::shared_ptr<PrimeClaim> upstream; // lives in along's target ring
    };
    std::optional<Contraction> via;

    explicit PrimeClaim(IdealHandle i) : ideal(std::move(i)) {}
    PrimeClaim(IdealHandle i, RingMap along, PrimeClaim upstream)
        : ideal(std::move(i)),
          via(Contraction{std::move(along), std::make_shared<PrimeClaim>(std::move(upstream))}) {}
};

// True only when a supporting certificate is found; false means "no
// certificate", never "not prime". Certificates:
//   - lex staircase: the lifted ideal's lex basis has only bare variables as
//     leading terms (covers variable-generated ideals, linear forms, and the
//     zero ideal of a polynomial cover), so the quotient is a polynomial ring;
//   - principal univariate of degree 2 or 3 with no root in the field
//     (rational root test over the rationals, full scan for small Z/p);
//   - contraction: the claim re-derives as the preimage of a certified
//     upstream claim (preimages of primes are prime).
bool certify_prime(const PrimeClaim& claim);

// Minimal primes of a, exactly. Routes, in order: unit ideal (empty list);
// monomial lifted basis (minimal variable covers); verification of a claimed
// decomposition (containment, certified primality, pairwise incomparability,
// and completeness: the intersection of the claims lies in the radical of a);
// the ambient ring's curated components when a = (0). Anything else raises
// NotDecidableError: no guess is ever returned.
std::vector<IdealHandle> minimal_primes(const IdealHandle& a);
std::vector<IdealHandle> minimal_primes(const IdealHandle& a,
                                        const std::vector<PrimeClaim>& claimed);

// ht a = min over p in Min(a) of ht p, with ht p = max over q in Min(0)
// contained in p of dim R/q - dim R/p (the dimension formula; components of
// affine algebras over a field are catenary). Unit ideal: infinity. Optional
// claimed decompositions feed the two Min computations.
HeightValue height(const IdealHandle& a,
                   const std::optional<std::vector<PrimeClaim>>& claimed = std::nullopt,
                   const std::optional<std::vector<PrimeClaim>>& claimed_zero = std::nullopt);

// Height measured on Supp(M): the height of (a + ann M)/ann M inside
// R/ann M; infinity when a + ann M is the unit ideal (empty support locus).
// The optional decompositions are for (a + ann M) and for (0), both inside
// R/ann M.
HeightValue height_on_module(
    const IdealHandle& a, const FPModule& M,
    const std::optional<std::vector<PrimeClaim>>& claimed_sum = std::nullopt,
    const std::optional<std::vector<PrimeClaim>>& claimed_zero = std::nullopt);

} // namespace amalgrade
