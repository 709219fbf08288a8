#include "amalgrade/runner.hpp"

#include "amalgrade/errors.hpp"

#include "json.hpp"

#include <chrono>
#include <map>
#include <sstream>

namespace amalgrade {

namespace {

using nlohmann::json;

json count_json(const std::optional<ExtendedCount>& v) {
    if (!v) return nullptr;
    if (v->is_infinite()) return "inf";
    return v->value();
}

json cm_rows_json(const CMReport& r) {
    json rows = json::array();
    for (const CMRow& row : r.rows) {
        json o;
        o["ideal"] = row.ideal.to_string();
        o["kgr"] = count_json(row.kgr);
        o["ht"] = count_json(row.ht);
        o["equal"] = row.equal;
        o["skipped"] = row.skipped;
        if (!row.note.empty()) o["note"] = row.note;
        o["fingerprint"] = row.fingerprint;
        rows.push_back(std::move(o));
    }
    return rows;
}

json transfer_rows_json(const TheoremReport& r) {
    json rows = json::array();
    for (const TransferRow& row : r.rows) {
        json o;
        o["ideal"] = row.ideal.to_string();
        o["kgr_base"] = count_json(row.kgr_base);
        o["kgr_tag_module"] = count_json(row.kgr_ideal_part);
        o["kgr_ext"] = count_json(row.kgr_ext);
        o["ht_base"] = count_json(row.ht_base);
        o["ht_ext"] = count_json(row.ht_ext);
        o["hypothesis"] = row.hypothesis;
        o["conclusion"] = row.conclusion;
        o["internal_ok"] = row.internal_ok;
        o["skipped"] = row.skipped;
        if (!row.note.empty()) o["note"] = row.note;
        o["fingerprint"] = row.fingerprint;
        rows.push_back(std::move(o));
    }
    return rows;
}

json check_json(const CheckResult& c) {
    json o;
    o["name"] = c.name;
    o["op"] = c.op;
    o["verdict"] = verdict_name(c.verdict());
    if (c.expected) {
        o["expected"] = *c.expected;
        o["matched"] = c.matched;
    }
    if (c.cm) {
        if (c.cm->witness) o["witness"] = *c.cm->witness;
        o["trust"] = c.cm->trust;
        o["resource_hit"] = c.cm->resource_hit;
        o["rows"] = cm_rows_json(*c.cm);
    } else if (c.thm) {
        if (!c.thm->reason.empty()) o["reason"] = c.thm->reason;
        json facts = json::object();
        for (const auto& [k, v] : c.thm->facts) facts[k] = v;
        o["facts"] = std::move(facts);
        o["trust"] = c.thm->trust;
        o["resource_hit"] = c.thm->resource_hit;
        o["rows"] = transfer_rows_json(*c.thm);
    }
    return o;
}

} // namespace

Verdict CheckResult::verdict() const {
    if (cm) return cm->verdict;
    if (thm) return thm->verdict;
    return Verdict::Inapplicable;
}

bool CheckResult::resource_hit() const {
    if (cm) return cm->resource_hit;
    if (thm) return thm->resource_hit;
    return false;
}

const RingPtr& BuiltInstance::ring_of(const std::string& name) const {
    auto it = rings.find(name);
    if (it != rings.end()) return it->second;
    return amalgams.at(name).R.ring();
}

namespace {

std::vector<Polynomial> parse_list(const RingPtr& R, const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    out.reserve(texts.size());
    for (const std::string& t : texts) out.push_back(parse_polynomial(R->cover(), t));
    return out;
}

} // namespace

BuiltInstance build_objects(const InstanceFile& file, const RunOptions& opts) {
    BuiltInstance b;
    for (const Decl& d : file.decls) {
        switch (d.kind) {
            case Decl::Kind::Ring: {
                std::uint64_t prime = opts.field_override.value_or(d.prime);
                Field f = prime == 0 ? Field::rationals()
                                     : Field::modular(static_cast<std::uint32_t>(prime));
                RingPtr R = RingPresentation::free_ring(d.vars, f);
                if (!d.ring_quotient.empty())
                    R = RingPresentation::quotient(R->cover(), parse_list(R, d.ring_quotient));
                b.rings[d.name] = std::move(R);
                break;
            }
            case Decl::Kind::Ideal: {
                const RingPtr& R = b.ring_of(d.refs[0]);
                b.ideals.emplace(d.name, IdealHandle(R, parse_list(R, d.polys)));
                break;
            }
            case Decl::Kind::Map: {
                const RingPtr& src = b.rings.at(d.refs[0]);
                const RingPtr& dst = b.rings.at(d.refs[1]);
                b.maps.emplace(d.name, RingMap(src, dst, parse_list(dst, d.polys)));
                break;
            }
            case Decl::Kind::Module: {
                const RingPtr& R = b.rings.at(d.refs[0]);
                FPModule M;
                if (d.module_form == "free") {
                    M = FPModule::free_module(R, d.rank);
                } else if (d.module_form == "ideal") {
                    M = FPModule::ideal_as_module(IdealHandle(R, parse_list(R, d.polys)));
                } else {
                    std::vector<ModVec> rel;
                    rel.reserve(d.rows.size());
                    for (const auto& row : d.rows) rel.push_back(parse_list(R, row));
                    M = FPModule::cokernel(R, d.rank, std::move(rel));
                }
                b.modules.emplace(d.name, std::move(M));
                break;
            }
            case Decl::Kind::Amalgam: {
                AmalgamDatum datum;
                if (d.construction == "duplication") {
                    datum = duplication(b.rings.at(d.refs[0]), b.ideals.at(d.refs[1]));
                } else if (d.construction == "trivial_extension") {
                    datum = trivial_extension(b.rings.at(d.refs[0]), b.modules.at(d.refs[1]));
                } else {
                    datum.A = b.rings.at(d.refs[0]);
                    datum.B = b.rings.at(d.refs[1]);
                    datum.f = b.maps.at(d.refs[2]);
                    datum.J = b.ideals.at(d.refs[3]);
                    datum.subring_gens = parse_list(datum.B, d.gens);
                    if (d.refs.size() == 5) datum.j_module = b.modules.at(d.refs[4]);
                    datum.nilpotent = d.nilpotent;
                    datum.attested = d.attested;
                }
                GenerationStatus gen = verify_generation(datum);
                b.amalgams.emplace(d.name, BuiltInstance::BuiltAmalgam{build_amalgamation(datum), gen});
                break;
            }
            case Decl::Kind::Family: {
                const RingPtr& R = b.ring_of(d.refs[0]);
                IdealFamily F;
                if (d.family_form == "maximal_graded") {
                    F = IdealFamily::maximal_graded(R);
                } else if (d.family_form == "explicit") {
                    std::vector<IdealHandle> members;
                    for (std::size_t i = 1; i < d.refs.size(); ++i)
                        members.push_back(b.ideals.at(d.refs[i]));
                    F = IdealFamily::explicit_list(R, std::move(members));
                } else {
                    F = IdealFamily::monomial_sample(R, d.count, d.degree_bound, d.max_gens,
                                                     d.seed.value_or(opts.seed));
                }
                b.families.emplace(d.name, std::move(F));
                break;
            }
            case Decl::Kind::Check:
                break; // run_checks executes these
        }
    }
    return b;
}

RunReport run_checks(const InstanceFile& file, const RunOptions& opts) {
    RunReport rep;
    rep.instance = file.name;
    rep.tool_version = kToolVersion;
    rep.seed = opts.seed;
    rep.budget = opts.budget;

    stats::reset();
    BudgetScope scope(opts.budget);
    auto t0 = std::chrono::steady_clock::now();

    BuiltInstance b = build_objects(file, opts);

    for (const Decl& d : file.decls) {
        if (d.kind != Decl::Kind::Check) continue;
        CheckResult res;
        res.name = d.name;
        res.op = d.op;
        if (d.op == "cm") {
            res.cm = cm_in_sense_of(b.ring_of(d.refs[0]), b.families.at(d.refs[1]));
        } else if (d.op == "theorem_maximal") {
            const BuiltInstance::BuiltAmalgam& ba = b.amalgams.at(d.refs[0]);
            res.thm = check_theorem_maximal(ba.R, ba.gen);
        } else if (d.op == "theorem_nilpotent") {
            const BuiltInstance::BuiltAmalgam& ba = b.amalgams.at(d.refs[0]);
            res.thm = check_theorem_nilpotent(ba.R, b.families.at(d.refs[1]), ba.gen);
        } else if (d.op == "lemma_grade_min") {
            const BuiltInstance::BuiltAmalgam& ba = b.amalgams.at(d.refs[0]);
            res.thm = check_lemma_grade_min(ba.R, b.ideals.at(d.refs[1]), ba.gen);
        } else {
            const BuiltInstance::BuiltAmalgam& ba = b.amalgams.at(d.refs[0]);
            std::optional<std::vector<Polynomial>> basis;
            if (!d.basis.empty()) basis = parse_list(ba.R.datum().B, d.basis);
            res.thm = check_integral_flat_corollaries(ba.R, b.families.at(d.refs[1]), basis,
                                                      ba.gen);
        }
        rep.checks.push_back(std::move(res));
    }

    for (const auto& [check, verdict] : file.expects) {
        for (CheckResult& res : rep.checks) {
            if (res.name != check) continue;
            res.expected = verdict;
            res.matched = verdict_name(res.verdict()) == verdict;
        }
    }

    for (const CheckResult& res : rep.checks) {
        rep.all_matched = rep.all_matched && res.matched;
        rep.resource_hit = rep.resource_hit || res.resource_hit();
    }
    rep.spairs = stats::spairs();
    rep.max_coeff_bits = stats::max_coeff_bits();
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string report_json(const RunReport& r, bool with_timing) {
    json o;
    o["schema"] = 1;
    o["instance"] = r.instance;
    o["tool_version"] = r.tool_version;
    o["seed"] = r.seed;
    o["budget"] = r.budget;
    json checks = json::array();
    for (const CheckResult& c : r.checks) checks.push_back(check_json(c));
    o["checks"] = std::move(checks);
    o["stats"] = {{"spairs", r.spairs}, {"max_coeff_bits", r.max_coeff_bits}};
    o["all_matched"] = r.all_matched;
    o["resource_hit"] = r.resource_hit;
    if (with_timing) o["timing"] = {{"seconds", r.seconds}};
    return o.dump(2);
}

std::string report_text(const RunReport& r) {
    std::ostringstream o;
    o << r.instance << " (seed " << r.seed << ")\n";
    for (const CheckResult& c : r.checks) {
        o << "  " << c.name << ": " << c.op << " -> " << verdict_name(c.verdict());
        if (c.expected) o << (c.matched ? "  [as expected]" : "  [EXPECTED " + *c.expected + "]");
        if (c.resource_hit()) o << "  [budget hit]";
        o << "\n";
    }
    return o.str();
}

} // namespace amalgrade
