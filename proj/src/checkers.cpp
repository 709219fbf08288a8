#include "amalgrade/checkers.hpp"

#include "amalgrade/errors.hpp"
#include "amalgrade/ideal_ops.hpp"
#include "amalgrade/rng.hpp"

#include <algorithm>
#include <cstdio>

namespace amalgrade {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex16(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

// Hash of the reduced data actually used for a row: the ambient presentation
// and the canonical form of the ideal. Stable under generator reordering.
std::string row_fingerprint(const IdealHandle& a) {
    return hex16(fnv1a(a.ambient()->to_string() + "|" + a.canonical_key()));
}

// height(a), falling back to a itself as a claimed one-prime decomposition
// (only accepted if it certifies). nullopt when still not decidable, with
// the reason in *note; *used_claims records what the fallback used so the
// extension side can reuse it.
std::optional<HeightValue> height_with_fallback(
    const IdealHandle& a, std::optional<std::vector<PrimeClaim>>* used_claims,
    std::string* note) {
    try {
        return height(a);
    } catch (const NotDecidableError&) {
    }
    std::vector<PrimeClaim> self;
    self.emplace_back(a);
    try {
        HeightValue h = height(a, self);
        if (used_claims) *used_claims = self;
        return h;
    } catch (const NotDecidableError& e) {
        if (note) *note = e.what();
        return std::nullopt;
    }
}

GradeValue min_grade(const GradeValue& x, const GradeValue& y) { return x <= y ? x : y; }

// Shared row evaluation for the family-driven theorem checks: grades and
// heights of a downstairs, of a^e upstairs, and the identities relating them.
TransferRow transfer_row(const AmalgamRing& R, const FPModule& free_base,
                         const FPModule& free_ext, const IdealHandle& a, bool* resource_hit) {
    TransferRow row;
    row.ideal = a;
    row.fingerprint = row_fingerprint(a);
    const AmalgamDatum& d = R.datum();
    try {
        row.kgr_base = koszul_grade(a, free_base);
        row.kgr_ideal_part = koszul_grade(a, *d.j_module);
        std::optional<std::vector<PrimeClaim>> used;
        row.ht_base = height_with_fallback(a, &used, &row.note);
        if (!row.ht_base) {
            row.skipped = true;
            return row;
        }
        IdealHandle ext = extend_ideal(a, R);
        auto claims = extended_min_claims(R, a, used);
        if (!claims) {
            row.skipped = true;
            row.note = "minimal primes of the extension not decided";
            return row;
        }
        row.ht_ext = height(ext, *claims, R.zero_claims());
        row.kgr_ext = koszul_grade(ext, free_ext);
    } catch (const NotDecidableError& e) {
        row.skipped = true;
        row.note = e.what();
        return row;
    } catch (const ResourceError& e) {
        row.skipped = true;
        row.note = e.what();
        if (resource_hit) *resource_hit = true;
        return row;
    }

    row.hypothesis = (*row.kgr_base == *row.ht_base) && (*row.kgr_ideal_part >= *row.ht_base);
    row.conclusion = (*row.kgr_ext == *row.ht_ext);

    bool grade_min_ok = (*row.kgr_ext == min_grade(*row.kgr_base, *row.kgr_ideal_part));
    bool ht_transfer_ok = (*row.ht_ext == *row.ht_base);
    // Finite grade on a finitely generated module never exceeds the height.
    bool bound_ok = row.kgr_ideal_part->is_infinite() || (*row.kgr_ideal_part <= *row.ht_base);
    // Under the hypothesis the extension's grade collapses to the base grade.
    bool collapse_ok = !row.hypothesis || (*row.kgr_ext == *row.kgr_base);
    bool row_biconditional = (row.hypothesis == row.conclusion);
    row.internal_ok = grade_min_ok && ht_transfer_ok && bound_ok && collapse_ok && row_biconditional;
    if (!row.internal_ok) {
        row.note = "identity failure:";
        if (!grade_min_ok) row.note += " grade-min";
        if (!ht_transfer_ok) row.note += " height-transfer";
        if (!bound_ok) row.note += " grade-height-bound";
        if (!collapse_ok) row.note += " grade-collapse";
        if (!row_biconditional) row.note += " row-biconditional";
    }
    return row;
}

// The lifted prime (iota(p), tags) over a certified prime member p. Only the
// conclusion side is computed fresh; the expected relations back to p's own
// row are recorded in internal_ok.
TransferRow lifting_row(const AmalgamRing& R, const FPModule& free_ext, const IdealHandle& p,
                        const TransferRow& base_row, std::size_t base_index, bool nilpotent_tags,
                        bool* resource_hit) {
    TransferRow row;
    row.note = "lifted prime of row " + std::to_string(base_index);
    try {
        PrimeClaim base_claim(p);
        IdealHandle lifted = prime_p_prime(base_claim, R);
        row.ideal = lifted;
        row.fingerprint = row_fingerprint(lifted);
        row.kgr_ext = koszul_grade(lifted, free_ext);
        // The lifted prime is prime by contraction along proj_A; hand height
        // that claim so Min(lifted) = {lifted} certifies.
        std::vector<PrimeClaim> claims;
        claims.emplace_back(lifted, R.proj_A(), base_claim);
        row.ht_ext = height(lifted, claims, R.zero_claims());
    } catch (const NotDecidableError& e) {
        row.skipped = true;
        row.note += "; " + std::string(e.what());
        return row;
    } catch (const ResourceError& e) {
        row.skipped = true;
        row.note += "; " + std::string(e.what());
        if (resource_hit) *resource_hit = true;
        return row;
    }
    row.conclusion = (*row.kgr_ext == *row.ht_ext);
    row.hypothesis = base_row.hypothesis;

    // ht(p'_f) = ht(p) holds in both checker regimes (minimal primes over the
    // extension collapse, resp. integrality plus going-down). When the tags
    // are nilpotent p'_f and p^e share a radical, so the grades match too.
    bool ok = true;
    if (base_row.ht_base) ok = ok && (*row.ht_ext == *base_row.ht_base);
    if (nilpotent_tags && base_row.kgr_ext) ok = ok && (*row.kgr_ext == *base_row.kgr_ext);
    if (nilpotent_tags && base_row.ht_ext) ok = ok && (*row.ht_ext == *base_row.ht_ext);
    // Hypothesis at p forces Cohen-Macaulayness at the lifted prime.
    ok = ok && (!row.hypothesis || row.conclusion);
    row.internal_ok = ok;
    if (!ok) row.note += "; identity failure";
    return row;
}

struct FamilyFold {
    bool hyp_all = true;
    bool conc_all = true;
    bool any_decidable = false;
    bool any_skipped = false;
    std::vector<std::string> violations;
};

FamilyFold fold_rows(const std::vector<TransferRow>& rows) {
    FamilyFold f;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const TransferRow& r = rows[i];
        if (r.skipped) {
            f.any_skipped = true;
            continue;
        }
        f.any_decidable = true;
        bool lifted = !r.note.empty();
        if (!lifted) f.hyp_all = f.hyp_all && r.hypothesis;
        f.conc_all = f.conc_all && r.conclusion;
        if (!r.internal_ok) f.violations.push_back("row " + std::to_string(i) + ": " + r.note);
    }
    if (f.hyp_all != f.conc_all)
        f.violations.push_back("family-level biconditional mismatch: hypothesis " +
                               std::string(f.hyp_all ? "holds" : "fails") + ", conclusion " +
                               std::string(f.conc_all ? "holds" : "fails"));
    return f;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += "; ";
        out += p;
    }
    return out;
}

// Establishes generation status and the common trust annotations; returns
// false (with the report filled in) when the check cannot proceed.
bool generation_gate(const AmalgamDatum& d, std::optional<GenerationStatus> provided,
                     TheoremReport& rep) {
    GenerationStatus gs = provided ? *provided : verify_generation(d);
    switch (gs) {
        case GenerationStatus::Verified:
            rep.trust.push_back("generation: verified");
            return true;
        case GenerationStatus::Attested:
            rep.trust.push_back("generation: attested by the instance, not verified");
            return true;
        case GenerationStatus::Failed:
            rep.verdict = Verdict::Inapplicable;
            rep.reason = "tag generators fail the generation test";
            return false;
    }
    return false;
}

bool require_module_finite(const AmalgamDatum& d, TheoremReport& rep) {
    if (d.module_finite()) return true;
    rep.verdict = Verdict::Inapplicable;
    rep.reason = "no module presentation for the tag ideal";
    return false;
}

bool map_is_identity(const RingMap& f) {
    if (!f.source()->same_ring_as(*f.target())) return false;
    for (std::size_t i = 0; i < f.source()->nvars(); ++i) {
        Polynomial xi = Polynomial::variable(f.source()->cover(), i);
        if (f.images()[i] != f.target()->reduce(xi)) return false;
    }
    return true;
}

void check_family_ring(const IdealFamily& F, const RingPtr& R, const char* who) {
    if (!F.ring || !F.ring->same_ring_as(*R))
        throw AmbientMismatchError(std::string(who) + ": family lives in a different ring");
    if (F.members.empty()) throw DomainError(std::string(who) + ": empty family");
}

} // namespace

IdealFamily IdealFamily::maximal_graded(const RingPtr& R) {
    if (!R->is_standard_graded())
        throw DomainError("maximal_graded: presentation is not standard graded");
    std::vector<Polynomial> vars;
    vars.reserve(R->nvars());
    for (std::size_t i = 0; i < R->nvars(); ++i)
        vars.push_back(Polynomial::variable(R->cover(), i));
    IdealFamily F;
    F.ring = R;
    F.kind = "maximal_graded";
    F.members.emplace_back(R, std::move(vars));
    return F;
}

IdealFamily IdealFamily::explicit_list(RingPtr R, std::vector<IdealHandle> members) {
    if (members.empty()) throw DomainError("explicit_list: empty family");
    for (const auto& a : members)
        if (!a.attached() || !a.ambient()->same_ring_as(*R))
            throw AmbientMismatchError("explicit_list: member from a different ring");
    IdealFamily F;
    F.ring = std::move(R);
    F.kind = "explicit";
    F.members = std::move(members);
    return F;
}

IdealFamily IdealFamily::monomial_sample(const RingPtr& R, std::size_t count,
                                         std::size_t degree_bound, std::size_t max_gens,
                                         std::uint64_t seed) {
    if (R->nvars() == 0) throw DomainError("monomial_sample: ring has no variables");
    if (count == 0 || degree_bound == 0 || max_gens == 0)
        throw DomainError("monomial_sample: zero count, degree bound, or generator bound");
    SplitMix64 rng(seed);
    IdealFamily F;
    F.ring = R;
    F.kind = "monomial_sample";
    for (std::size_t c = 0; c < count; ++c) {
        std::size_t g = 1 + static_cast<std::size_t>(rng.below(max_gens));
        std::vector<Polynomial> gens;
        gens.reserve(g);
        for (std::size_t k = 0; k < g; ++k) {
            std::size_t deg = 1 + static_cast<std::size_t>(rng.below(degree_bound));
            Polynomial m = Polynomial::constant_long(R->cover(), 1);
            for (std::size_t e = 0; e < deg; ++e)
                m = m * Polynomial::variable(R->cover(), rng.below(R->nvars()));
            gens.push_back(std::move(m));
        }
        F.members.emplace_back(R, std::move(gens));
    }
    return F;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::CMOverFamily: return "CM-over-family";
        case Verdict::Counterexample: return "counterexample";
        case Verdict::Consistent: return "consistent";
        case Verdict::Violated: return "violated";
        case Verdict::Inapplicable: return "inapplicable";
    }
    return "?";
}

CMReport cm_in_sense_of(const RingPtr& R, const IdealFamily& F) {
    check_family_ring(F, R, "cm_in_sense_of");
    CMReport rep;
    FPModule self = FPModule::free_module(R, 1);
    for (const auto& a : F.members) {
        CMRow row;
        row.ideal = a;
        row.fingerprint = row_fingerprint(a);
        try {
            row.kgr = koszul_grade(a, self);
            row.ht = height_with_fallback(a, nullptr, &row.note);
            if (!row.ht)
                row.skipped = true;
            else
                row.equal = (*row.kgr == *row.ht);
        } catch (const ResourceError& e) {
            row.skipped = true;
            row.note = e.what();
            rep.resource_hit = true;
        }
        rep.rows.push_back(std::move(row));
    }
    bool any_skipped = false;
    rep.verdict = Verdict::CMOverFamily;
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        if (rep.rows[i].skipped) {
            any_skipped = true;
            continue;
        }
        if (!rep.rows[i].equal && rep.verdict == Verdict::CMOverFamily) {
            rep.verdict = Verdict::Counterexample;
            rep.witness = i;
        }
    }
    if (any_skipped) rep.trust.push_back("some rows skipped: height not decided there");
    rep.trust.push_back("verdict is over the supplied family only");
    return rep;
}

bool reverify_rows(const CMReport& report, std::uint64_t seed) {
    std::vector<std::size_t> decidable;
    for (std::size_t i = 0; i < report.rows.size(); ++i)
        if (!report.rows[i].skipped) decidable.push_back(i);
    if (decidable.empty()) return true;

    SplitMix64 rng(seed);
    std::size_t take = (decidable.size() + 9) / 10;
    for (std::size_t k = 0; k < take; ++k) {
        std::size_t j = k + static_cast<std::size_t>(rng.below(decidable.size() - k));
        std::swap(decidable[k], decidable[j]);
    }
    for (std::size_t k = 0; k < take; ++k) {
        const CMRow& row = report.rows[decidable[k]];
        if (row_fingerprint(row.ideal) != row.fingerprint) return false;
        std::vector<Polynomial> gens = row.ideal.gens();
        for (std::size_t j = gens.size(); j > 1; --j)
            std::swap(gens[j - 1], gens[static_cast<std::size_t>(rng.below(j))]);
        IdealHandle shuffled(row.ideal.ambient(), std::move(gens));
        GradeValue kgr = koszul_grade(shuffled, FPModule::free_module(row.ideal.ambient(), 1));
        if (!row.kgr || kgr != *row.kgr) return false;
        auto ht = height_with_fallback(shuffled, nullptr, nullptr);
        if (!ht || !row.ht || *ht != *row.ht) return false;
    }
    return true;
}

TheoremReport check_theorem_maximal(const AmalgamRing& R,
                                    std::optional<GenerationStatus> generation) {
    TheoremReport rep;
    rep.check = "theorem_maximal";
    const AmalgamDatum& d = R.datum();
    if (!require_module_finite(d, rep)) return rep;
    if (!generation_gate(d, generation, rep)) return rep;
    if (!d.A->is_standard_graded() || !d.B->is_standard_graded()) {
        rep.reason = "component presentations are not standard graded";
        return rep;
    }
    for (const auto& j : d.subring_gens) {
        Polynomial r = d.B->reduce(j);
        if (!r.coeff_of(Monomial::one(d.B->nvars())).is_zero()) {
            rep.reason = "a tag generator has a nonzero constant term";
            return rep;
        }
    }
    Dimension dim_base = krull_dim(d.A);
    if (dim_base.is_minus_infinity()) {
        rep.reason = "base ring is the zero ring";
        return rep;
    }

    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < d.A->nvars(); ++i)
        vars.push_back(Polynomial::variable(d.A->cover(), i));
    IdealHandle m(d.A, vars);
    PrimeClaim m_claim(m);

    try {
        FPModule free_base = FPModule::free_module(d.A, 1);
        FPModule free_ext = FPModule::free_module(R.ring(), 1);

        IdealHandle m_prime = prime_p_prime(m_claim, R);
        GradeValue kgr_ext = koszul_grade(m_prime, free_ext);
        GradeValue kgr_ext_plain = koszul_grade(extend_ideal(m, R), free_ext);
        GradeValue kgr_base = koszul_grade(m, free_base);
        GradeValue kgr_tags = koszul_grade(m, *d.j_module);

        std::vector<PrimeClaim> lifted_claims;
        lifted_claims.emplace_back(m_prime, R.proj_A(), m_claim);
        HeightValue ht_ext = height(m_prime, lifted_claims, R.zero_claims());
        HeightValue ht_base = height(m);
        Dimension dim_ext = krull_dim(R.ring());

        GradeValue dim_as_grade = GradeValue::finite(dim_base.value());
        bool cm_up = (kgr_ext == ht_ext);
        bool cm_down = (kgr_base == ht_base) && (kgr_tags == dim_as_grade);

        bool grade_min_ok = (kgr_ext == min_grade(kgr_base, kgr_tags));
        bool radical_ok = (kgr_ext == kgr_ext_plain);
        bool dim_ok = (dim_ext == dim_base);
        bool biconditional_ok = (cm_up == cm_down);

        rep.facts = {
            {"kgr_max_ext", kgr_ext.to_string()},
            {"kgr_max_ext_plain", kgr_ext_plain.to_string()},
            {"kgr_base", kgr_base.to_string()},
            {"kgr_tag_module", kgr_tags.to_string()},
            {"ht_max_ext", ht_ext.to_string()},
            {"ht_max_base", ht_base.to_string()},
            {"dim_base", dim_base.to_string()},
            {"dim_ext", dim_ext.to_string()},
            {"cm_upstairs", cm_up ? "true" : "false"},
            {"cm_downstairs_and_tag_grade", cm_down ? "true" : "false"},
        };

        std::vector<std::string> violations;
        if (!grade_min_ok) violations.push_back("grade-min identity failed");
        if (!radical_ok) violations.push_back("grade differs between m'_f and the plain extension");
        if (!dim_ok) violations.push_back("dimension not preserved");
        if (!biconditional_ok) violations.push_back("biconditional sides disagree");
        rep.verdict = violations.empty() ? Verdict::Consistent : Verdict::Violated;
        rep.reason = join(violations);
    } catch (const NotDecidableError& e) {
        rep.verdict = Verdict::Inapplicable;
        rep.reason = std::string("not decidable: ") + e.what();
    } catch (const ResourceError& e) {
        rep.verdict = Verdict::Inapplicable;
        rep.reason = std::string("budget exhausted: ") + e.what();
        rep.resource_hit = true;
    }
    return rep;
}

namespace {

// Shared body of the nilpotent and flat-integral checks: same rows, same
// identities, different admission gates.
void run_transfer_family(const AmalgamRing& R, const IdealFamily& F, bool nilpotent_tags,
                         TheoremReport& rep) {
    const AmalgamDatum& d = R.datum();
    FPModule free_base = FPModule::free_module(d.A, 1);
    FPModule free_ext = FPModule::free_module(R.ring(), 1);

    for (const auto& a : F.members)
        rep.rows.push_back(transfer_row(R, free_base, free_ext, a, &rep.resource_hit));

    std::size_t base_count = rep.rows.size();
    for (std::size_t i = 0; i < base_count; ++i) {
        if (rep.rows[i].skipped) continue;
        PrimeClaim claim(F.members[i]);
        if (!certify_prime(claim)) continue;
        rep.rows.push_back(lifting_row(R, free_ext, F.members[i], rep.rows[i], i, nilpotent_tags,
                                       &rep.resource_hit));
    }

    FamilyFold fold = fold_rows(rep.rows);
    if (fold.any_skipped) rep.trust.push_back("some rows skipped: not decidable within budget");
    rep.trust.push_back("verdict is over the supplied family only");
    rep.verdict = fold.violations.empty() ? Verdict::Consistent : Verdict::Violated;
    rep.reason = join(fold.violations);
}

} // namespace

TheoremReport check_theorem_nilpotent(const AmalgamRing& R, const IdealFamily& F,
                                      std::optional<GenerationStatus> generation) {
    TheoremReport rep;
    rep.check = "theorem_nilpotent";
    const AmalgamDatum& d = R.datum();
    check_family_ring(F, d.A, "check_theorem_nilpotent");
    if (!d.nilpotent) {
        rep.verdict = Verdict::Inapplicable;
        rep.reason = "tag ideal is not nilpotent";
        return rep;
    }
    if (!require_module_finite(d, rep)) return rep;
    if (!generation_gate(d, generation, rep)) return rep;
    run_transfer_family(R, F, /*nilpotent_tags=*/true, rep);
    return rep;
}

TheoremReport check_lemma_grade_min(const AmalgamRing& R, const IdealHandle& b,
                                    std::optional<GenerationStatus> generation) {
    TheoremReport rep;
    rep.check = "lemma_grade_min";
    const AmalgamDatum& d = R.datum();
    if (!b.attached() || !b.ambient()->same_ring_as(*d.A))
        throw AmbientMismatchError("check_lemma_grade_min: ideal not in the base ring");
    if (!require_module_finite(d, rep)) return rep;
    if (!generation_gate(d, generation, rep)) return rep;
    try {
        GradeValue left = koszul_grade(extend_ideal(b, R), FPModule::free_module(R.ring(), 1));
        GradeValue on_base = koszul_grade(b, FPModule::free_module(d.A, 1));
        GradeValue on_tags = koszul_grade(b, *d.j_module);
        bool ok = (left == min_grade(on_base, on_tags));
        rep.facts = {
            {"kgr_ext", left.to_string()},
            {"kgr_base", on_base.to_string()},
            {"kgr_tag_module", on_tags.to_string()},
        };
        rep.verdict = ok ? Verdict::Consistent : Verdict::Violated;
        if (!ok) rep.reason = "grade-min identity failed";
    } catch (const ResourceError& e) {
        rep.verdict = Verdict::Inapplicable;
        rep.reason = std::string("budget exhausted: ") + e.what();
        rep.resource_hit = true;
    }
    return rep;
}

TheoremReport check_integral_flat_corollaries(const AmalgamRing& R, const IdealFamily& F,
                                              const std::optional<std::vector<Polynomial>>& free_basis,
                                              std::optional<GenerationStatus> generation) {
    TheoremReport rep;
    rep.check = "integral_flat";
    const AmalgamDatum& d = R.datum();
    check_family_ring(F, d.A, "check_integral_flat_corollaries");
    if (!require_module_finite(d, rep)) return rep;
    if (!generation_gate(d, generation, rep)) return rep;

    if (map_is_identity(d.f)) {
        rep.trust.push_back("certificate: structural map is the identity");
    } else if (free_basis && !free_basis->empty()) {
        // Spanning makes the target module finite (hence integral) over the
        // image; freeness of the exhibited basis is what the instance
        // asserts and is what flatness rides on.
        const std::vector<Polynomial>& alg = d.f.images();
        std::vector<Polynomial> basis = *free_basis;
        Polynomial one = Polynomial::constant_long(d.B->cover(), 1);
        bool ok = submodule_over_subalgebra_contains(one, alg, basis, d.B);
        for (std::size_t i = 0; ok && i < d.B->nvars(); ++i)
            ok = submodule_over_subalgebra_contains(Polynomial::variable(d.B->cover(), i), alg,
                                                    basis, d.B);
        for (std::size_t i = 0; ok && i < basis.size(); ++i)
            for (std::size_t j = i; ok && j < basis.size(); ++j)
                ok = submodule_over_subalgebra_contains(basis[i] * basis[j], alg, basis, d.B);
        if (!ok) {
            rep.verdict = Verdict::Inapplicable;
            rep.reason = "claimed basis does not span the target over the image";
            return rep;
        }
        rep.trust.push_back("certificate: basis spans (verified); independence attested");
    } else {
        rep.verdict = Verdict::Inapplicable;
        rep.reason = "no flatness certificate (identity map or explicit basis)";
        return rep;
    }

    run_transfer_family(R, F, /*nilpotent_tags=*/d.nilpotent, rep);
    return rep;
}

} // namespace amalgrade
