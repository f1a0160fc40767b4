// Command-line front end: solve one instance, generate random instance sets,
// and run batch gap evaluations.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "faco/bench.hpp"
#include "faco/error.hpp"
#include "faco/instance.hpp"
#include "faco/solver.hpp"

namespace fs = std::filesystem;

namespace {

struct SolverFlags {
    faco::SolverConfig config;
    std::string heuristic = "inverse";
    std::string metric;
};

void add_solver_flags(CLI::App *cmd, SolverFlags &flags) {
    auto &c = flags.config;
    cmd->add_option("--heuristic", flags.heuristic, "'inverse' or a HEUR v1 file (bench: a directory of <name>.heur)")
        ->capture_default_str();
    cmd->add_option("--ants", c.ants, "Ants per iteration")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--iters", c.iterations, "Iterations")->capture_default_str()->check(CLI::NonNegativeNumber);
    cmd->add_option("--alpha", c.alpha, "Pheromone exponent")->capture_default_str();
    cmd->add_option("--beta", c.beta, "Heuristic exponent")->capture_default_str();
    cmd->add_option("--rho", c.rho, "Evaporation rate")->capture_default_str();
    cmd->add_option("--pg", c.p_g, "Probability of starting from the global best")->capture_default_str();
    cmd->add_option("--mne", c.mne, "New edges before an ant stops modifying")->capture_default_str();
    cmd->add_option("--cand", c.k, "Candidate list size")->capture_default_str();
    cmd->add_option("--backup", c.bkp, "Backup list size")->capture_default_str();
    cmd->add_option("--pbest", c.p_best, "p_best for the lower trail limit")->capture_default_str();
    cmd->add_option("--gb-period", c.gb_deposit_period, "Deposit from the global best every N iterations")
        ->capture_default_str();
    cmd->add_option("--threads", c.threads, "Worker threads (0 = all cores)")->capture_default_str();
    cmd->add_option("--metric", flags.metric, "Override the edge metric")->check(CLI::IsMember({"real", "rounded"}));
}

faco::Instance apply_metric(faco::Instance instance, const std::string &metric) {
    if (metric.empty()) {
        return instance;
    }
    return instance.with_metric(faco::parse_metric(metric));
}

int cmd_solve(const fs::path &instance_path, SolverFlags flags, std::optional<std::uint64_t> seed,
              std::optional<double> optimal, const std::string &trace_path, const std::string &tour_path) {
    const faco::Instance instance = apply_metric(faco::load_instance(instance_path), flags.metric);
    auto config = flags.config;
    if (seed) {
        config.seed = *seed;
    }
    if (flags.heuristic != "inverse") {
        config.heuristic_source = faco::HeuristicSource::file;
        config.heuristic_path = flags.heuristic;
    }
    const faco::RunResult result = faco::solve(instance, config);

    std::cout << std::setprecision(12);
    std::cout << "instance: " << instance.name() << '\n'
              << "n: " << instance.size() << '\n'
              << "metric: " << faco::metric_name(instance.metric()) << '\n'
              << "heuristic: " << flags.heuristic << '\n'
              << "seed: " << config.seed << '\n'
              << "seed_cost: " << result.seed_cost << '\n'
              << "best_cost: " << result.best_cost << '\n';
    if (optimal) {
        std::cout << "gap_percent: " << faco::gap_percent(result.best_cost, *optimal) << '\n';
    }
    std::cout << "iterations: " << result.iterations_run << '\n';
    std::cerr << "wall_time_s: " << std::fixed << std::setprecision(3) << result.wall_time << '\n';

    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out) {
            throw faco::Error("cannot write trace file " + trace_path);
        }
        faco::write_trace_csv(result, out);
    }
    if (!tour_path.empty()) {
        std::ofstream out(tour_path);
        if (!out) {
            throw faco::Error("cannot write tour file " + tour_path);
        }
        for (const faco::Node v : result.best_tour.order()) {
            out << v << '\n';
        }
    }
    return 0;
}

int cmd_gen(int n, int count, std::uint64_t seed, const fs::path &out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec || !fs::is_directory(out_dir)) {
        throw faco::Error("cannot create output directory " + out_dir.string());
    }
    for (int c = 0; c < count; ++c) {
        const faco::Instance instance = faco::generate_random(n, seed + static_cast<std::uint64_t>(c));
        faco::save_instance_dump(instance, out_dir / (instance.name() + ".inst"));
    }
    return 0;
}

int cmd_bench(const fs::path &dir, SolverFlags flags, const std::string &optima_path, int runs,
              const std::string &csv_path, bool no_time) {
    if (!fs::is_directory(dir)) {
        throw faco::Error("not a directory: " + dir.string());
    }
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(dir)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".tsp" || ext == ".inst")) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    const bool heur_dir = flags.heuristic != "inverse";
    if (heur_dir && !fs::is_directory(flags.heuristic)) {
        throw faco::Error("bench --heuristic must be 'inverse' or a directory of .heur files");
    }
    std::vector<faco::BenchEntry> entries;
    for (const auto &file : files) {
        faco::BenchEntry entry{apply_metric(faco::load_instance(file), flags.metric), {}};
        if (heur_dir) {
            entry.heuristic = fs::path(flags.heuristic) / (file.stem().string() + ".heur");
        }
        entries.push_back(std::move(entry));
    }

    const auto optima = optima_path.empty() ? std::map<std::string, double>{} : faco::load_optima_csv(optima_path);
    const faco::BenchReport report = faco::run_bench(entries, optima, runs, flags.config);
    std::cout << faco::format_bench_table(report, !no_time);
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) {
            throw faco::Error("cannot write csv file " + csv_path);
        }
        out << faco::format_bench_csv(report, !no_time);
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Focused ant colony TSP solver"};
    app.require_subcommand(1);

    SolverFlags solve_flags;
    std::string solve_instance;
    std::optional<std::uint64_t> solve_seed;
    std::optional<double> solve_optimal;
    std::string trace_path;
    std::string tour_path;
    auto *solve = app.add_subcommand("solve", "Solve one instance");
    solve->add_option("--instance", solve_instance, "TSPLIB or instance dump file")->required();
    solve->add_option("--seed", solve_seed, "Random seed (default 0)");
    solve->add_option("--optimal", solve_optimal, "Known optimal cost, enables the gap line");
    solve->add_option("--trace", trace_path, "Write the per-iteration trace as CSV");
    solve->add_option("--tour", tour_path, "Write the best tour, one node per line");
    add_solver_flags(solve, solve_flags);

    int gen_n = 0;
    int gen_count = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    auto *gen = app.add_subcommand("gen", "Generate random uniform instances");
    gen->add_option("--n", gen_n, "Nodes per instance")->required()->check(CLI::Range(3, 1 << 30));
    gen->add_option("--count", gen_count, "Number of instances")->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", gen_seed, "Seed of the first instance")->required();
    gen->add_option("--out", gen_out, "Output directory")->required();

    SolverFlags bench_flags;
    std::string bench_dir;
    std::string optima_path;
    std::string csv_path;
    int runs = 10;
    bool no_time = false;
    auto *bench = app.add_subcommand("bench", "Solve every instance in a directory and report gaps");
    bench->add_option("--dir", bench_dir, "Directory of .tsp / .inst files")->required();
    bench->add_option("--optima", optima_path, "CSV of name,optimal");
    bench->add_option("--runs", runs, "Runs per instance (seeds 0..runs-1)")->capture_default_str()->check(
        CLI::PositiveNumber);
    bench->add_option("--csv", csv_path, "Also write the report as CSV");
    bench->add_flag("--no-time", no_time, "Omit timing columns");
    add_solver_flags(bench, bench_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*solve) {
            return cmd_solve(solve_instance, solve_flags, solve_seed, solve_optimal, trace_path, tour_path);
        }
        if (*gen) {
            return cmd_gen(gen_n, gen_count, gen_seed, gen_out);
        }
        return cmd_bench(bench_dir, bench_flags, optima_path, runs, csv_path, no_time);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
