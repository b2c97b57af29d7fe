// hallpi: Hall subgroup classification queries, sweeps and brute-force verification.
#include "hall/bruteforce.hpp"
#include "hall/classify.hpp"
#include "hall/extension.hpp"
#include "hall/report.hpp"
#include "hall/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

using namespace hall;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kParse = 2, kValidation = 3, kStrict = 4, kViolation = 5, kMismatch = 6 };

struct Output {
    std::string path;
    std::ostringstream buf;
    int flush() {
        if (path.empty()) {
            std::cout << buf.str();
            return kOk;
        }
        std::ofstream f(path);
        if (!f) {
            std::cerr << "error: cannot write " << path << "\n";
            return kParse;
        }
        f << buf.str();
        return kOk;
    }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, sep);)
        if (!item.empty()) out.push_back(item);
    return out;
}

// ------------------------------------------------------------------ classify

int cmd_classify(const std::string& group, const std::string& pi_text, const std::string& format, bool strict, Output& out) {
    GroupSpec spec;
    PrimeSet pi;
    try {
        spec = parse_group(group);
        pi = PrimeSet::parse(pi_text);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    }
    HallReport r;
    try {
        r = classify(validate(spec), pi);
    } catch (const GroupError& e) {
        std::cerr << "validation error [" << e.rule() << "]: " << e.what() << "\n";
        return kValidation;
    }
    if (format == "json")
        out.buf << render_json(r);
    else if (format == "csv")
        out.buf << csv_header() << "\n" << csv_row(r) << "\n";
    else
        out.buf << render_text(r);
    if (int rc = out.flush()) return rc;
    if (strict && (r.e_pi == Verdict::OutOfScope || !r.k_pi.is_exact())) {
        std::cerr << "out_of_scope: " << r.reason << "\n";
        return kStrict;
    }
    return kOk;
}

// --------------------------------------------------------------------- sweep

int cmd_sweep(SweepGrid grid, const std::string& format, bool strict, unsigned threads, Output& out) {
    SweepResult res;
    try {
        res = run_sweep(grid, threads);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    }
    std::size_t out_of_scope = 0;
    if (format == "json") {
        json rows = json::array();
        for (const SweepRow& row : res.rows) {
            json j = {{"group", row.group}, {"pi", row.pi.primes()}};
            if (row.report) {
                const HallReport& r = *row.report;
                j["regime"] = regime_name(r.regime);
                j["e_pi"] = verdict_name(r.e_pi);
                j["k_pi"] = r.k_pi.to_string();
                j["c_pi"] = verdict_name(r.c_pi);
                j["d_pi"] = verdict_name(r.d_pi);
                j["violations"] = row.violations;
            } else {
                j["skipped"] = row.skipped;
            }
            rows.push_back(j);
        }
        json summary = {{"cells", res.rows.size()},
                        {"classified", res.classified},
                        {"skipped", res.skipped},
                        {"violations", res.violations}};
        out.buf << json{{"schema", kSchemaVersion}, {"rows", rows}, {"summary", summary}}.dump(2) << "\n";
    } else {
        if (format == "csv") out.buf << csv_header() << "\n";
        for (const SweepRow& row : res.rows) {
            if (!row.report) continue;
            if (row.report->e_pi == Verdict::OutOfScope) ++out_of_scope;
            if (format == "csv")
                out.buf << csv_row(*row.report) << "\n";
            else
                out.buf << row.report->spec.name() << " {" << row.pi.to_string() << "} " << regime_name(row.report->regime)
                        << " e=" << verdict_name(row.report->e_pi) << " k=" << row.report->k_pi.to_string() << "\n";
        }
        if (format != "csv") out.buf << "# " << res.summary() << "\n";
    }
    if (int rc = out.flush()) return rc;
    std::cerr << res.summary() << "\n";
    for (const SweepRow& row : res.rows)
        for (const std::string& v : row.violations) std::cerr << "violation: " << v << "\n";
    if (res.violations) return kViolation;
    if (strict && out_of_scope) return kStrict;
    return kOk;
}

// -------------------------------------------------------------------- verify

struct Instance {
    std::string group;
    PrimeSet pi;
};

std::vector<Instance> default_instances() {
    std::vector<Instance> v;
    for (const PrimeSet& pi : {PrimeSet{2, 3}, PrimeSet{2, 3, 5}}) {
        for (unsigned long q : {5ul, 7ul, 11ul, 13ul})
            for (const char* k : {"PSL", "SL"}) v.push_back({std::string(k) + "(2," + std::to_string(q) + ")", pi});
        for (unsigned long n : {5ul, 6ul, 7ul})
            for (const char* k : {"Sym", "Alt"}) v.push_back({std::string(k) + "(" + std::to_string(n) + ")", pi});
    }
    return v;
}

int cmd_verify(const std::vector<std::string>& instance_texts, const std::string& expect_path, SearchBudget budget,
               const std::string& format, unsigned threads, Output& out) {
    std::vector<Instance> instances;
    std::optional<HallReport> expected;
    try {
        for (const std::string& t : instance_texts) {
            auto colon = t.rfind(':');
            if (colon == std::string::npos) throw ParseError("instance needs GROUP:PI, got '" + t + "'");
            instances.push_back({t.substr(0, colon), PrimeSet::parse(t.substr(colon + 1))});
        }
        if (!expect_path.empty()) {
            std::ifstream f(expect_path);
            if (!f) throw ParseError("cannot read " + expect_path);
            expected = report_from_json(json::parse(f));
            if (instances.empty()) instances.push_back({expected->spec.name(), expected->pi});
        }
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    }
    if (instances.empty()) instances = default_instances();

    struct Result {
        json j;
        bool pass = false;
        std::string error;
        int code = kOk;
    };
    std::vector<Result> results(instances.size());
    std::mutex m;
    std::size_t next = 0;
    auto work = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(m);
                if (next >= instances.size()) return;
                i = next++;
            }
            Result& res = results[i];
            try {
                auto [kind, param] = parse_concrete(instances[i].group);
                ConcreteGroup g = build_group(kind, param);
                auto spec = spec_of(kind, param);
                if (!spec) throw ParseError(instances[i].group + " has no symbolic counterpart");
                HallReport r = expected ? *expected : classify(validate(*spec), instances[i].pi);
                CensusReport census = find_hall_subgroups(g, instances[i].pi, budget);
                VerificationOutcome v = verify_report(g, r, census);
                res.pass = v.all_pass();
                res.j = {{"instance", instances[i].group + ":" + instances[i].pi.to_string()},
                         {"census", census_to_json(g, census)},
                         {"outcome", outcome_to_json(v)}};
            } catch (const ParseError& e) {
                res.error = e.what();
                res.code = kParse;
            } catch (const GroupError& e) {
                res.error = e.what();
                res.code = kValidation;
            } catch (const std::exception& e) {
                res.error = e.what();
                res.code = kParse;
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();

    bool all = true;
    json arr = json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
        const Result& res = results[i];
        if (res.code != kOk) {
            std::cerr << "error: " << instances[i].group << ": " << res.error << "\n";
            return res.code;
        }
        all = all && res.pass;
        if (format == "json") {
            arr.push_back(res.j);
        } else {
            const json& o = res.j["outcome"];
            out.buf << (res.pass ? "PASS " : "FAIL ") << res.j["instance"].get<std::string>() << "  hall_order "
                    << res.j["census"]["hall_order"].get<std::string>() << ", classes " << res.j["census"]["class_count"]
                    << (res.j["census"]["exhaustive"].get<bool>() ? "" : " (search truncated)") << "\n";
            for (const json& c : o["comparisons"])
                if (!c["pass"].get<bool>())
                    out.buf << "  " << c["field"].get<std::string>() << ": expected " << c["expected"].get<std::string>()
                            << ", census " << c["actual"].get<std::string>() << "\n";
        }
    }
    if (format == "json") out.buf << json{{"schema", kSchemaVersion}, {"results", arr}, {"pass", all}}.dump(2) << "\n";
    if (int rc = out.flush()) return rc;
    return all ? kOk : kMismatch;
}

// -------------------------------------------------------------------- wreath

int cmd_wreath(unsigned long k, unsigned long p, const std::string& format, Output& out) {
    if (!is_prime(p)) {
        std::cerr << "error: p = " << p << " is not prime\n";
        return kParse;
    }
    if (k == 0) {
        std::cerr << "error: k must be positive\n";
        return kParse;
    }
    BigInt v = kpi_wreath_cyclic(BigInt(k), p);
    std::optional<BigInt> check;
    if (p <= 7) check = burnside_orbits(BigInt(k), {cycle_perm(unsigned(p))});
    if (format == "json") {
        json j = {{"k", k}, {"p", p}, {"k_pi", v.get_str()}};
        if (check) j["burnside"] = check->get_str();
        out.buf << j.dump(2) << "\n";
    } else {
        out.buf << v;
        if (check) out.buf << " (cross-check: " << *check << ")";
        out.buf << "\n";
    }
    if (int rc = out.flush()) return rc;
    return check && *check != v ? kMismatch : kOk;
}

// ----------------------------------------------------------------- kpi-bound

int cmd_kpi_bound(const std::string& group, const std::string& pi_text, const std::string& outer_text,
                  const std::string& format, Output& out) {
    GroupSpec spec;
    PrimeSet pi;
    Outer outer;
    try {
        spec = parse_group(group);
        pi = PrimeSet::parse(pi_text);
        auto o = outer_from_name(outer_text);
        if (!o) throw ParseError("outer must be trivial, diagonal-and-field or any");
        outer = *o;
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    }
    KPiBound b;
    try {
        b = kpi_bound_almost_simple(validate(spec), pi, outer);
    } catch (const GroupError& e) {
        std::cerr << "validation error [" << e.rule() << "]: " << e.what() << "\n";
        return kValidation;
    }
    if (format == "json") {
        json j = {{"group", group}, {"pi", pi.primes()}, {"outer", outer_name(outer)}, {"values", b.values}, {"reason", b.reason}};
        j["exact"] = b.exact ? json(*b.exact) : json(nullptr);
        out.buf << j.dump(2) << "\n";
    } else {
        out.buf << "{";
        for (std::size_t i = 0; i < b.values.size(); ++i) out.buf << (i ? "," : "") << b.values[i];
        out.buf << "}";
        if (b.exact) out.buf << " exact " << *b.exact;
        out.buf << "  (" << b.reason << ")\n";
    }
    return out.flush();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hall subgroups of finite simple groups: existence, structure and class counts"};
    app.require_subcommand(1);

    std::string format = "text", out_path;
    bool strict = false;
    unsigned threads = 0;
    auto add_common = [&](CLI::App* c) {
        c->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        c->add_option("--out", out_path, "Write output to a file instead of stdout");
    };

    std::string group, pi_text;
    auto* classify_cmd = app.add_subcommand("classify", "Classify the pi-Hall subgroups of one group");
    classify_cmd->add_option("--group", group, "Group, e.g. PSL(2,7), Sp(10,7), O+(12,13), M23")->required();
    classify_cmd->add_option("--pi", pi_text, "Prime set, e.g. 2,3,5")->required();
    classify_cmd->add_flag("--strict", strict, "Exit 4 when the answer is out of scope");
    add_common(classify_cmd);

    SweepGrid grid = default_grid();
    std::string families, pi_list;
    auto* sweep_cmd = app.add_subcommand("sweep", "Classify a grid of groups and check the bound-set invariants");
    sweep_cmd->add_option("--families", families, "Comma list of: alt,sym,sporadic,linear,gl2,symplectic,orthogonal,exceptional; none for only --group");
    sweep_cmd->add_option("--q-max", grid.q_max, "Largest q");
    sweep_cmd->add_option("--n-max", grid.n_max, "Largest degree or dimension");
    sweep_cmd->add_option("--pi-list", pi_list, "Prime sets separated by ';' (default: all nonempty subsets of 2,3,5,7)");
    sweep_cmd->add_option("--group", grid.extra_groups, "Extra group, repeatable");
    sweep_cmd->add_flag("--strict", strict, "Exit 4 when any cell is out of scope");
    sweep_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
    add_common(sweep_cmd);

    std::vector<std::string> instances;
    std::string expect_path;
    SearchBudget budget;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check classify against brute-force Hall subgroup search");
    verify_cmd->add_option("--instance", instances, "GROUP:PI, e.g. PSL(2,11):2,3; repeatable");
    verify_cmd->add_option("--budget", budget.closure_steps, "Closure steps allowed per search");
    verify_cmd->add_option("--expect", expect_path, "Compare against this JSON report instead of a fresh classify");
    verify_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
    add_common(verify_cmd);

    unsigned long k = 0, p = 0;
    auto* wreath_cmd = app.add_subcommand("wreath", "Classes of Hall subgroups in X wr C_p");
    wreath_cmd->add_option("--k", k, "k_pi(X)")->required();
    wreath_cmd->add_option("--p", p, "Prime p")->required();
    add_common(wreath_cmd);

    std::string outer = "any";
    auto* bound_cmd = app.add_subcommand("kpi-bound", "Admissible k^G_pi(S) for almost simple G with socle S");
    bound_cmd->add_option("--group", group, "Simple group S")->required();
    bound_cmd->add_option("--pi", pi_text, "Prime set")->required();
    bound_cmd->add_option("--outer", outer, "trivial | diagonal-and-field | any");
    add_common(bound_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kParse;
    }

    Output out{out_path, {}};
    if (*classify_cmd) return cmd_classify(group, pi_text, format, strict, out);
    if (*sweep_cmd) {
        try {
            if (families == "none")
                grid.families.clear();
            else if (!families.empty())
                grid.families = split(families, ',');
            if (!pi_list.empty()) {
                grid.pi_list.clear();
                for (const std::string& s : split(pi_list, ';')) grid.pi_list.push_back(PrimeSet::parse(s));
            }
        } catch (const std::exception& e) {
            std::cerr << "parse error: " << e.what() << "\n";
            return kParse;
        }
        return cmd_sweep(grid, format, strict, threads, out);
    }
    if (*verify_cmd) return cmd_verify(instances, expect_path, budget, format, threads, out);
    if (*wreath_cmd) return cmd_wreath(k, p, format, out);
    if (*bound_cmd) return cmd_kpi_bound(group, pi_text, outer, format, out);
    return kParse;
}
