#pragma once

#include "amalgrade/modules.hpp"
#include "amalgrade/primes.hpp"

#include <optional>

namespace amalgrade {

// Input data for building the subring { (a, f(a)+j) : a in A, j in J } of
// A x B. subring_gens are the chosen generators j_1..j_m of J used for the
// presentation; j_module, when present, is an A-module presentation of J on
// exactly those generators (module-finite mode; absent means algebra mode).
struct AmalgamDatum {
    RingPtr A;
    RingPtr B;
    RingMap f;     // A -> B
    IdealHandle J; // ideal of B
    std::vector<Polynomial> subring_gens;
    std::optional<FPModule> j_module;
    bool nilpotent = false; // every j_u nilpotent in B; checked at build
    bool attested = false;  // instance vouches for generation when unverifiable

    bool module_finite() const { return j_module.has_value(); }
};

// Did the membership test confirm that the j's generate all of 0 x J, or is
// the instance merely trusted, or did the test come back negative?
enum class GenerationStatus { Verified, Attested, Failed };

// The built ring: a presentation on variables (A-vars, T_1..T_m) with
// defining ideal ker(cover -> A) n ker(cover -> B), together with the
// structure maps. iota embeds A (x_i -> x_i); proj_A kills the tags;
// proj_B sends x_i -> f(x_i) and T_u -> j_u. proj_A o iota = id.
class AmalgamRing {
public:
    const RingPtr& ring() const { return ring_; }
    const AmalgamDatum& datum() const { return datum_; }
    const RingMap& iota() const { return iota_; }
    const RingMap& proj_A() const { return proj_A_; }
    const RingMap& proj_B() const { return proj_B_; }

    std::size_t tag_count() const { return datum_.subring_gens.size(); }
    Polynomial tag(std::size_t u) const; // T_u as an element of ring()
    std::vector<Polynomial> tags() const;

    // Minimal primes of (0) in the built ring when they could be derived and
    // verified from the component rings; they are also installed as curated
    // components on ring(), so height computations there just work.
    const std::optional<std::vector<IdealHandle>>& zero_components() const {
        return zero_components_;
    }

    // The claims behind zero_components, with their contraction provenance.
    // Curated components keep only generators, which is not always enough to
    // re-certify primality; callers that need Min(0) again (the height of an
    // extended ideal, say) should pass these to the prime machinery instead.
    const std::optional<std::vector<PrimeClaim>>& zero_claims() const { return zero_claims_; }

private:
    friend AmalgamRing build_amalgamation(const AmalgamDatum& d);
    AmalgamRing() = default;

    AmalgamDatum datum_;
    RingPtr ring_;
    RingMap iota_;
    RingMap proj_A_;
    RingMap proj_B_;
    std::optional<std::vector<IdealHandle>> zero_components_;
    std::optional<std::vector<PrimeClaim>> zero_claims_;
};

// Presents the image of k[A-vars, T_1..T_m] -> A x B, x_i -> (x_i, f(x_i)),
// T_u -> (0, j_u): the defining ideal is the intersection of the two
// component kernels, each computed by elimination. Checks the datum
// invariants first (generators lie in J, nilpotency when claimed, module
// relations hold in B).
AmalgamRing build_amalgamation(const AmalgamDatum& d);

// The tag variable names a build will choose: T (one tag) or T1..Tm, with
// the stem doubled until it avoids every base variable. Exposed so text
// frontends can name elements of the built cover before building it.
std::vector<std::string> amalgam_tag_names(const std::vector<std::string>& base_vars,
                                           std::size_t m);

// Sufficient test that the built subring is the whole of
// { (a, f(a)+j) }: the j's generate J as a B-ideal and every product
// (cover variable of B) * j_u falls back into the f(A)-span of the j's and
// their pairwise products. Returns Attested instead of Failed when the datum
// carries the attested flag.
GenerationStatus verify_generation(const AmalgamDatum& d);

// a * (built ring), generators iota(a's generators).
IdealHandle extend_ideal(const IdealHandle& a, const AmalgamRing& R);

// The prime (iota(p), T_1..T_m) lying over a certified prime p of A.
// No certificate -> NotDecidableError.
IdealHandle prime_p_prime(const PrimeClaim& p, const AmalgamRing& R);

// Contraction of an ideal q of B along proj_B. Guarded: when J sits inside
// q the contraction collapses to a tag-containing prime of the other kind,
// so that input is rejected with DomainError.
IdealHandle prime_q_bar(const IdealHandle& q, const AmalgamRing& R);

// The built ring as an A-module: A (+) J, using the supplied module
// presentation of J. Algebra mode -> NotDecidableError.
FPModule amalgam_as_A_module(const AmalgamRing& R);

// Datum for A acting on itself through B = A[T's]/(M-relations, T_u*T_v):
// the square-zero extension of A by M. Module-finite and nilpotent.
AmalgamDatum trivial_extension(const RingPtr& A, const FPModule& M);

// Datum for B = A, f = id, J = I; the module presentation is computed from
// the syzygies of I's generators.
AmalgamDatum duplication(const RingPtr& A, const IdealHandle& I);

// The defining ideal recomputed along an independent route: present A x B on
// (u-vars, v-vars, e) with e the idempotent (1,0), map the amalgam cover in,
// and take one kernel. Returned in a free presentation of the built cover;
// must equal the built defining ideal.
IdealHandle amalgam_kernel_by_product(const AmalgamRing& R);

// Claimed minimal primes of (a * built ring) assembled from the component
// rings: contractions of Min_A(a) along proj_A, plus contractions of
// Min_B(f(a)B) along proj_B when the tag part is not nilpotent. Claims carry
// their contraction provenance so the prime machinery can certify them.
// base_claims, when given, feeds the Min_A(a) computation. nullopt when a
// component decomposition is itself not decidable.
std::optional<std::vector<PrimeClaim>> extended_min_claims(
    const AmalgamRing& R, const IdealHandle& a,
    const std::optional<std::vector<PrimeClaim>>& base_claims = std::nullopt);

} // namespace amalgrade
