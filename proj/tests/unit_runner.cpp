#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amalgrade/corpus.hpp"
#include "amalgrade/errors.hpp"
#include "amalgrade/runner.hpp"

using namespace amalgrade;

namespace {

const char* kDupLine = "instance dup;\n"
                       "ring A = QQ[x];\n"
                       "ideal I in A = (x);\n"
                       "amalgam R = duplication(A, I);\n"
                       "family F over R = maximal_graded;\n"
                       "check c = cm(R, F);\n"
                       "expect c = CM-over-family;\n";

RunReport run_text(const std::string& text, RunOptions opts = {}) {
    return run_checks(parse_instance(text), opts);
}

} // namespace

TEST_CASE("a run builds the declared objects and scores expectations") {
    RunReport rep = run_text(kDupLine);
    CHECK(rep.instance == "dup");
    CHECK(rep.seed == 42);
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].name == "c");
    CHECK(rep.checks[0].verdict() == Verdict::CMOverFamily);
    CHECK(rep.checks[0].expected == "CM-over-family");
    CHECK(rep.checks[0].matched);
    CHECK(rep.all_matched);
    CHECK_FALSE(rep.resource_hit);
    CHECK(rep.spairs > 0); // building the duplication runs the kernel
}

TEST_CASE("a wrong expectation flips matched, not the verdict") {
    std::string text(kDupLine);
    text.replace(text.find("CM-over-family"), 14, "counterexample");
    RunReport rep = run_text(text);
    CHECK(rep.checks[0].verdict() == Verdict::CMOverFamily);
    CHECK_FALSE(rep.checks[0].matched);
    CHECK_FALSE(rep.all_matched);
}

TEST_CASE("checks without expectations count as matched") {
    std::string text(kDupLine);
    text.resize(text.find("expect"));
    RunReport rep = run_text(text);
    CHECK_FALSE(rep.checks[0].expected.has_value());
    CHECK(rep.checks[0].matched);
    CHECK(rep.all_matched);
}

TEST_CASE("reports are identical across runs once timing is dropped") {
    for (const CorpusEntry& e : corpus_entries()) {
        CAPTURE(e.name);
        InstanceFile file = parse_instance(e.text);
        std::string a = report_json(run_checks(file, {}), false);
        std::string b = report_json(run_checks(file, {}), false);
        CHECK(a == b);
        CHECK(a.find("\"seconds\"") == std::string::npos);
        CHECK(report_json(run_checks(file, {})).find("\"seconds\"") != std::string::npos);
    }
}

TEST_CASE("the sampled family follows the run seed unless it has its own") {
    const char* text = "ring A = QQ[x, y];\n"
                       "family F over A = monomial_sample(count = 5);\n"
                       "check c = cm(A, F);\n";
    RunOptions a, b, c;
    a.seed = 1;
    b.seed = 2;
    c.seed = 1;
    // the seed field always reflects the options; compare the drawn ideals
    auto drawn = [](const RunReport& r) {
        std::vector<std::string> keys;
        for (const CMRow& row : r.checks[0].cm->rows) keys.push_back(row.ideal.to_string());
        return keys;
    };
    CHECK(drawn(run_text(text, a)) != drawn(run_text(text, b)));
    CHECK(report_json(run_text(text, a), false) == report_json(run_text(text, c), false));

    const char* pinned = "ring A = QQ[x, y];\n"
                         "family F over A = monomial_sample(count = 5, seed = 7);\n"
                         "check c = cm(A, F);\n";
    CHECK(drawn(run_text(pinned, a)) == drawn(run_text(pinned, b)));
}

TEST_CASE("the field override redirects every declared ring") {
    RunOptions fp;
    fp.field_override = 32003;
    RunReport rep = run_text(kDupLine, fp);
    CHECK(rep.checks[0].verdict() == Verdict::CMOverFamily);
    CHECK(rep.all_matched);
    CHECK(rep.max_coeff_bits <= 15); // no rational blowup in Fp
}

TEST_CASE("a starved budget throws out of the build") {
    RunOptions tiny;
    tiny.budget = 5;
    CHECK_THROWS_AS(run_text(kDupLine, tiny), ResourceError);
}

TEST_CASE("infinite grades serialize as the inf sentinel") {
    const char* text = "ring A = QQ[x];\n"
                       "ideal U in A = (1);\n"
                       "family F over A = explicit(U);\n"
                       "check c = cm(A, F);\n";
    RunReport rep = run_text(text);
    REQUIRE(rep.checks[0].cm.has_value());
    REQUIRE(rep.checks[0].cm->rows.size() == 1);
    CHECK(rep.checks[0].cm->rows[0].kgr == GradeValue::infinite());
    std::string json = report_json(rep);
    CHECK(json.find("\"kgr\": \"inf\"") != std::string::npos);
    CHECK(json.find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("ideals declared over an amalgam are parsed in the built cover") {
    const char* text = "ring A = QQ[x];\n"
                       "ideal I in A = (x);\n"
                       "amalgam R = duplication(A, I);\n"
                       "ideal E in R = (x - T);\n"
                       "family F over R = explicit(E);\n"
                       "check c = cm(R, F);\n";
    RunReport rep = run_text(text);
    REQUIRE(rep.checks[0].cm.has_value());
    const CMRow& row = rep.checks[0].cm->rows[0];
    // (x - T) cuts out one of the two glued lines: grade 0 against height 0
    CHECK(row.kgr == GradeValue::finite(0));
    CHECK(row.ht == HeightValue::finite(0));
}

TEST_CASE("every corpus expectation holds") {
    for (const CorpusEntry& e : corpus_entries()) {
        CAPTURE(e.name);
        RunReport rep = run_text(e.text);
        CHECK(rep.all_matched);
        CHECK_FALSE(rep.resource_hit);
        for (const CheckResult& c : rep.checks) {
            CAPTURE(c.name);
            CHECK(c.expected.has_value());
            CHECK(c.matched);
        }
    }
}
