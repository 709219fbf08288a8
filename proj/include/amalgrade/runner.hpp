#pragma once

#include "amalgrade/budget.hpp"
#include "amalgrade/checkers.hpp"
#include "amalgrade/instance.hpp"

#include <map>

namespace amalgrade {

inline constexpr const char* kToolVersion = "0.1.0";

// Knobs the command line exposes. field_override: absent runs each ring over
// its declared field, 0 forces the rationals, p forces Fp(p). seed feeds
// sampled families that declare no seed of their own. budget bounds kernel
// steps for the whole run of one file.
struct RunOptions {
    std::optional<std::uint64_t> field_override;
    std::uint64_t seed = 42;
    long long budget = kDefaultBudget;
};

// One executed check; exactly one of cm / thm is set, matching the op.
struct CheckResult {
    std::string name;
    std::string op;
    std::optional<CMReport> cm;
    std::optional<TheoremReport> thm;
    std::optional<std::string> expected;
    bool matched = true; // false only when an expectation is present and differs

    Verdict verdict() const;
    bool resource_hit() const;
};

struct RunReport {
    std::string instance;
    std::string tool_version;
    std::uint64_t seed = 0;
    long long budget = 0;
    std::vector<CheckResult> checks;
    long long spairs = 0;    // S-pairs the kernel processed during the run
    long max_coeff_bits = 0; // largest basis coefficient seen, in bits
    double seconds = 0.0;
    bool resource_hit = false;
    bool all_matched = true;
};

// Every object a file declares, materialized, keyed by declared name.
// Amalgams carry the generation status computed once at build time.
struct BuiltInstance {
    struct BuiltAmalgam {
        AmalgamRing R;
        GenerationStatus gen;
    };

    std::map<std::string, RingPtr> rings;
    std::map<std::string, IdealHandle> ideals;
    std::map<std::string, RingMap> maps;
    std::map<std::string, FPModule> modules;
    std::map<std::string, BuiltAmalgam> amalgams;
    std::map<std::string, IdealFamily> families;

    // A declared ring or the underlying ring of a declared amalgam.
    const RingPtr& ring_of(const std::string& name) const;
};

// Materializes the declarations in order. Polynomial fragments are parsed
// against the built covers, which for amalgams is the authoritative naming
// of the tag variables. Malformed data throws (DomainError and friends);
// a blown budget throws ResourceError. No checks are executed.
BuiltInstance build_objects(const InstanceFile& file, const RunOptions& opts);

// Builds every declared object in order and executes the checks. Errors as
// for build_objects; a blown budget inside a checker only marks rows.
RunReport run_checks(const InstanceFile& file, const RunOptions& opts);

// JSON form of the report, schema 1. Grades and heights serialize as
// integers, "inf" when infinite, null when not computed. with_timing=false
// drops the timing block so two runs can be compared byte for byte.
std::string report_json(const RunReport& r, bool with_timing = true);

// One line per check: "name: op -> verdict [expected ...]".
std::string report_text(const RunReport& r);

} // namespace amalgrade
