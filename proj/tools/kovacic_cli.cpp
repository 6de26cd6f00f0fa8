#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "kovacic.hpp"

using namespace kovacic;

namespace {

int exit_code(Status s) {
    switch (s) {
    case Status::Solved: return 0;
    case Status::NoLiouvillian: return 2;
    case Status::Unsupported: return 3;
    case Status::BudgetExceeded: return 4;
    case Status::Error: return 1;
    }
    return 1;
}

struct Options {
    std::string ode;
    std::optional<int> forced_case;
    std::optional<int> forced_n;
    bool json_out = false;
    bool no_verify = false;
    int max_d = 64;
    long budget = 10000;
    // batch
    std::string corpus;
    std::string out_path;
    std::string stats_path;
    unsigned jobs = 1;
    bool no_timing = false;
};

SolverConfig config_from(const Options& o) {
    SolverConfig cfg;
    cfg.forced_case = o.forced_case;
    cfg.forced_n = o.forced_n;
    cfg.max_d = o.max_d;
    cfg.verify = !o.no_verify;
    cfg.trial_budget = o.budget;
    return cfg;
}

int cmd_solve(const Options& o) {
    OdeInput ode;
    try {
        ode = parse_ode(o.ode);
    } catch (const SymbolicCoefficients& e) {
        if (o.json_out) std::cout << json{{"status", "unsupported"}, {"reason", e.what()}}.dump() << "\n";
        else std::cerr << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    SolveReport rep = solve(ode, config_from(o));
    if (o.json_out) std::cout << report_json(rep).dump() << "\n";
    else std::cout << report_text(rep);
    return exit_code(rep.status);
}

int cmd_analyze(const Options& o) {
    try {
        Analysis an = analyze(parse_ode(o.ode));
        if (o.json_out) {
            std::cout << analysis_json(an).dump() << "\n";
            return 0;
        }
        std::cout << "r: " << an.normal.r.to_string() << "\npoles:";
        if (an.poles.poles.empty()) std::cout << " none";
        for (const auto& p : an.poles.poles) std::cout << " " << p.location.to_string() << " (order " << p.order << ")";
        std::cout << "\noinf: " << (an.poles.order_at_infinity ? std::to_string(*an.poles.order_at_infinity) : "undefined")
                  << "\ncases: " << condition_key(an.cases.possible) << "\n";
        return 0;
    } catch (const SymbolicCoefficients& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const UnsupportedPoles& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

RecordResult run_record(const CorpusRecord& rec, const SolverConfig& cfg) {
    RecordResult res;
    res.id = rec.id;
    auto t0 = std::chrono::steady_clock::now();
    try {
        OdeInput ode = parse_ode(rec.ode);
        res.report = solve(ode, cfg);
        if (res.report.analysis) res.possible_cases = res.report.analysis->cases.possible;
    } catch (const SymbolicCoefficients& e) {
        res.report.status = Status::Unsupported;
        res.report.failure_reason = e.what();
    } catch (const Error& e) {
        res.report.status = Status::Error;
        res.parse_error = e.what();
    }
    res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

int cmd_batch(const Options& o) {
    std::ifstream in(o.corpus);
    if (!in) {
        std::cerr << "error: cannot open " << o.corpus << "\n";
        return 1;
    }
    std::vector<CorpusRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            records.push_back(parse_corpus_line(line));
        } catch (const std::exception& e) {
            std::cerr << "error: " << o.corpus << ":" << lineno << ": " << e.what() << "\n";
            return 1;
        }
    }
    SolverConfig cfg = config_from(o);
    std::vector<RecordResult> results(records.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < records.size();) results[i] = run_record(records[i], cfg);
    };
    unsigned jobs = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(std::max<std::size_t>(1, records.size()))));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::ofstream out_file;
    if (!o.out_path.empty()) out_file.open(o.out_path);
    std::ostream& out = o.out_path.empty() ? std::cout : out_file;
    bool all_ok = true;
    for (const auto& r : results) {
        out << record_json(r, !o.no_timing).dump() << "\n";
        all_ok = all_ok && r.report.solved() && r.report.verified;
    }
    StatsReport stats = compute_stats(results);
    if (!o.stats_path.empty()) {
        std::ofstream(o.stats_path) << stats.to_json().dump(2) << "\n";
    } else {
        std::cerr << "total " << stats.total << ", solved " << stats.solved << ", failed " << stats.failed
                  << ", unsupported " << stats.unsupported << "\n";
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Liouvillian solutions of second order linear ODEs"};
    app.require_subcommand(1);
    Options o;

    auto add_solver_flags = [&o](CLI::App* sub) {
        sub->add_option("--case", o.forced_case, "use only this case")->check(CLI::IsMember({1, 2, 3}));
        sub->add_option("--n", o.forced_n, "case 3 group size")->check(CLI::IsMember({4, 6, 12}));
        sub->add_flag("--no-verify", o.no_verify, "skip verification");
        sub->add_option("--max-d", o.max_d, "largest degree of p to try")->check(CLI::PositiveNumber);
        sub->add_option("--budget", o.budget, "candidate trial budget")->check(CLI::PositiveNumber);
    };

    auto* solve_cmd = app.add_subcommand("solve", "solve one ODE");
    solve_cmd->add_option("ode", o.ode, "e.g. \"(2*x+1)*y'' - 2*y' - (2*x+3)*y = 0\"")->required();
    solve_cmd->add_flag("--json", o.json_out, "single-line JSON output");
    add_solver_flags(solve_cmd);

    auto* analyze_cmd = app.add_subcommand("analyze", "normal form, poles and admissible cases");
    analyze_cmd->add_option("ode", o.ode)->required();
    analyze_cmd->add_flag("--json", o.json_out);

    auto* batch_cmd = app.add_subcommand("batch", "run a JSONL corpus");
    batch_cmd->add_option("corpus", o.corpus)->required();
    batch_cmd->add_option("--out", o.out_path, "results file (default stdout)");
    batch_cmd->add_option("--stats", o.stats_path, "statistics file");
    batch_cmd->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    batch_cmd->add_flag("--no-timing", o.no_timing, "omit time_ms so runs are byte-identical");
    add_solver_flags(batch_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    if (o.forced_n && o.forced_case.value_or(3) != 3) {
        std::cerr << "error: --n requires --case 3\n";
        return 1;
    }
    if (o.forced_n && !o.forced_case) o.forced_case = 3;
    if (*solve_cmd) return cmd_solve(o);
    if (*analyze_cmd) return cmd_analyze(o);
    return cmd_batch(o);
}
