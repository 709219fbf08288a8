#pragma once

#include "amalgrade/amalgam.hpp"
#include "amalgrade/primes.hpp"

namespace amalgrade {

// A finite list of ideals standing in for a quantifier. Every verdict below
// is relative to such a family and the reports say so: "CM over the family"
// is evidence, not a proof over all ideals.
struct IdealFamily {
    RingPtr ring;
    std::vector<IdealHandle> members;
    std::string kind; // "maximal_graded" | "explicit" | "monomial_sample"

    // The irrelevant ideal (all variables) of a standard graded ring.
    static IdealFamily maximal_graded(const RingPtr& R);

    static IdealFamily explicit_list(RingPtr R, std::vector<IdealHandle> members);

    // Reproducible monomial ideals: `count` draws, each with at most
    // `max_gens` generators of degree at most `degree_bound`, from
    // SplitMix64(seed). Needs at least one variable.
    static IdealFamily monomial_sample(const RingPtr& R, std::size_t count = 25,
                                       std::size_t degree_bound = 3, std::size_t max_gens = 3,
                                       std::uint64_t seed = 42);
};

enum class Verdict {
    CMOverFamily,   // every decidable row has kgr = ht and no row failed
    Counterexample, // some decidable row has kgr != ht
    Consistent,     // both sides of a biconditional agree on every decidable row
    Violated,       // a claimed identity failed on a decidable row
    Inapplicable,   // a hypothesis does not hold, so the check says nothing
};
const char* verdict_name(Verdict v);

// One ideal's worth of evidence for cm_in_sense_of. Skipped rows mark ideals
// whose height is not decidable with the routes at hand; they never count
// for or against the verdict. The fingerprint hashes the reduced basis of
// the ideal together with the ambient presentation, so a row can be matched
// to a recomputation later.
struct CMRow {
    IdealHandle ideal;
    std::optional<GradeValue> kgr;
    std::optional<HeightValue> ht;
    bool skipped = false;
    bool equal = false;
    std::string note;
    std::string fingerprint;
};

struct CMReport {
    Verdict verdict = Verdict::Inapplicable;
    std::vector<CMRow> rows;
    std::optional<std::size_t> witness; // index of the first unequal row
    std::vector<std::string> trust;
    bool resource_hit = false;
};

// Koszul grade against height, row by row over the family. Rows are computed
// independently and folded in member order, so the report is deterministic.
CMReport cm_in_sense_of(const RingPtr& R, const IdealFamily& F);

// Recomputes a ~10% sample of the decidable rows with the generator order
// shuffled by `seed`, expecting identical grade and height. Returns false on
// any mismatch. Grade and height do not depend on the generating set, so a
// mismatch means a computation bug, not bad luck.
bool reverify_rows(const CMReport& report, std::uint64_t seed);

// One ideal of the base ring tracked across the construction: grades and
// heights downstairs, the same for the extension upstairs, and the identities
// tying them together. `hypothesis` is the base-side conjunction (base ring
// CM at the ideal, and the tag module's grade at least the height);
// `conclusion` is CM at the extended ideal. Rows with a nonempty note are
// derived rows (extensions of certified primes) and only the conclusion side
// is meaningful there.
struct TransferRow {
    IdealHandle ideal;
    bool skipped = false;
    std::string note;
    std::optional<GradeValue> kgr_base;       // grade on the base ring itself
    std::optional<GradeValue> kgr_ideal_part; // grade on the tag module
    std::optional<GradeValue> kgr_ext;
    std::optional<HeightValue> ht_base;
    std::optional<HeightValue> ht_ext;
    bool hypothesis = false;
    bool conclusion = false;
    bool internal_ok = false;
    std::string fingerprint;
};

struct TheoremReport {
    std::string check;
    Verdict verdict = Verdict::Inapplicable;
    std::string reason; // set when inapplicable or violated
    std::vector<TransferRow> rows;
    std::vector<std::pair<std::string, std::string>> facts;
    std::vector<std::string> trust;
    bool resource_hit = false;
};

// Graded-local criterion. Preconditions: both component rings standard
// graded, the tag generators of positive degree, and a module presentation
// for the tags. Checks, at the irrelevant ideal m of the base ring:
//   - grade of m'_f upstairs = min(grade of m on the base, grade of m on the
//     tag module), and the same value at the plain extension (same radical);
//   - dim upstairs = dim downstairs (the construction is module finite);
//   - CM upstairs at m'_f iff (CM downstairs at m and the tag module's grade
//     equals the base dimension).
TheoremReport check_theorem_maximal(const AmalgamRing& R,
                                    std::optional<GenerationStatus> generation = std::nullopt);

// Nilpotent-tag criterion, over a family of base ideals. Preconditions:
// the tag ideal is nilpotent and has a module presentation. Per member a:
//   - grade of a^e = min of the two base grades, and ht a^e = ht a;
//   - hypothesis(a) iff conclusion(a^e);
// and for certifiable prime members the lifted prime p'_f is checked too.
TheoremReport check_theorem_nilpotent(const AmalgamRing& R, const IdealFamily& F,
                                      std::optional<GenerationStatus> generation = std::nullopt);

// The grade-min identity alone, at a single finitely generated ideal b:
// grade of b^e upstairs = min(grade of b on the base, grade of b on the tag
// module). Needs the module presentation for the right-hand side.
TheoremReport check_lemma_grade_min(const AmalgamRing& R, const IdealHandle& b,
                                    std::optional<GenerationStatus> generation = std::nullopt);

// Flat-plus-integral criterion, same row logic as the nilpotent check but
// justified by a different hypothesis. Accepted certificates, checked, never
// assumed: the structural map is the identity (duplication), or `free_basis`
// exhibits the second ring as a free module over the image of the first
// (1 lies in the span, the span absorbs variables and pairwise products).
// Without a certificate the check is inapplicable: flatness is not decided
// here and going-down is never tested algorithmically.
TheoremReport check_integral_flat_corollaries(
    const AmalgamRing& R, const IdealFamily& F,
    const std::optional<std::vector<Polynomial>>& free_basis = std::nullopt,
    std::optional<GenerationStatus> generation = std::nullopt);

} // namespace amalgrade
