#include "amalgrade/corpus.hpp"
#include "amalgrade/errors.hpp"
#include "amalgrade/instance.hpp"
#include "amalgrade/runner.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace amalgrade;

// Exit codes: 0 ok, 2 expectation mismatch, 3 budget exceeded, 4 parse
// error, 1 anything else. Across several instances the worst one wins.
constexpr int kOk = 0, kOther = 1, kMismatch = 2, kResource = 3, kParse = 4;

int worse(int a, int b) { return std::max(a, b); }

struct Job {
    std::string label; // file path or corpus entry name
    std::string text;
};

struct Outcome {
    std::string sort_key;
    std::string text_report;
    std::optional<nlohmann::json> json_report;
    int code = kOk;
};

Outcome run_one(const Job& job, const RunOptions& opts) {
    Outcome out;
    out.sort_key = job.label;
    try {
        InstanceFile file = parse_instance(job.text);
        if (!file.name.empty()) out.sort_key = file.name;
        RunReport rep = run_checks(file, opts);
        out.text_report = report_text(rep);
        out.json_report = nlohmann::json::parse(report_json(rep));
        if (rep.resource_hit)
            out.code = kResource;
        else if (!rep.all_matched)
            out.code = kMismatch;
    } catch (const ParseError& e) {
        out.text_report = job.label + ": parse error: " + e.what() + "\n";
        out.code = kParse;
    } catch (const ResourceError& e) {
        out.text_report = job.label + ": budget exceeded: " + e.what() + "\n";
        out.code = kResource;
    } catch (const Error& e) {
        out.text_report = job.label + ": error: " + e.what() + "\n";
        out.code = kOther;
    }
    return out;
}

int run_jobs(const std::vector<Job>& jobs, const RunOptions& opts, unsigned jobs_n,
             const std::string& json_path) {
    std::vector<Outcome> outcomes(jobs.size());
    if (jobs_n <= 1 || jobs.size() <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) outcomes[i] = run_one(jobs[i], opts);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                outcomes[i] = run_one(jobs[i], opts);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs_n, jobs.size()); ++t)
            pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::stable_sort(outcomes.begin(), outcomes.end(),
                     [](const Outcome& a, const Outcome& b) { return a.sort_key < b.sort_key; });

    int code = kOk;
    for (const Outcome& o : outcomes) {
        std::cout << o.text_report;
        code = worse(code, o.code);
    }

    if (!json_path.empty()) {
        nlohmann::json doc;
        doc["schema"] = 1;
        doc["runs"] = nlohmann::json::array();
        for (const Outcome& o : outcomes)
            if (o.json_report) doc["runs"].push_back(*o.json_report);
        std::ofstream f(json_path);
        if (!f) {
            std::cerr << "cannot write " << json_path << "\n";
            return worse(code, kOther);
        }
        f << doc.dump(2) << "\n";
    }
    return code;
}

long long default_budget() {
    if (const char* env = std::getenv("AMALGRADE_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "ignoring malformed AMALGRADE_BUDGET\n";
    }
    return kDefaultBudget;
}

bool parse_field(const std::string& s, std::optional<std::uint64_t>& out) {
    if (s.empty()) return true;
    if (s == "qq") {
        out = 0;
        return true;
    }
    if (s.rfind("fp:", 0) == 0) {
        char* end = nullptr;
        unsigned long long p = std::strtoull(s.c_str() + 3, &end, 10);
        if (end && *end == '\0' && p >= 2 && p < (1ULL << 31)) {
            out = p;
            return true;
        }
    }
    return false;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"amalgamated-algebra Cohen-Macaulayness checker"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    std::vector<std::string> paths;
    std::string field_str, json_path;
    RunOptions opts;
    opts.budget = default_budget();
    unsigned jobs_n = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--field", field_str, "coefficient field override: qq or fp:p");
        cmd->add_option("--seed", opts.seed, "seed for sampled families without one");
        cmd->add_option("--json", json_path, "write the reports to this file as JSON");
        cmd->add_option("--budget", opts.budget, "kernel step budget per instance");
        cmd->add_option("--jobs", jobs_n, "worker threads across instances");
    };

    CLI::App* run = app.add_subcommand("run", "run instance files");
    run->add_option("files", paths, "instance files (.amg)")->required();
    add_common(run);

    CLI::App* corpus = app.add_subcommand("corpus", "run the bundled corpus");
    add_common(corpus);

    CLI11_PARSE(app, argc, argv);

    if (!parse_field(field_str, opts.field_override)) {
        std::cerr << "bad --field (want qq or fp:p with p an odd prime below 2^31)\n";
        return kOther;
    }

    std::vector<Job> jobs;
    if (run->parsed()) {
        for (const std::string& p : paths) {
            std::ifstream f(p);
            if (!f) {
                std::cerr << "cannot read " << p << "\n";
                return kOther;
            }
            std::ostringstream ss;
            ss << f.rdbuf();
            jobs.push_back({p, ss.str()});
        }
    } else {
        for (const CorpusEntry& e : corpus_entries()) jobs.push_back({e.name, e.text});
    }

    return run_jobs(jobs, opts, jobs_n, json_path);
}
