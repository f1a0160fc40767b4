#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "faco/instance.hpp"
#include "faco/solver.hpp"

namespace faco {

struct BenchRow {
    std::string name;
    int n = 0;
    double mean_cost = 0.0;
    std::optional<double> optimal;
    std::optional<double> gap;  // percent, present iff optimal is
    double mean_time = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::optional<double> mean_gap;  // over rows that have a gap
    double mean_time = 0.0;
    std::string metric;
    int runs = 0;
};

/// Fills the aggregate fields from rows.
void aggregate(BenchReport &report);

/// `name,optimal` rows; a non-numeric first row is treated as a header.
std::map<std::string, double> parse_optima_csv(std::string_view text);
std::map<std::string, double> load_optima_csv(const std::filesystem::path &path);

struct BenchEntry {
    Instance instance;
    /// Per-instance HEUR file; inverse distance when empty.
    std::filesystem::path heuristic;
};

/// Solves each entry `runs` times with seeds 0 .. runs-1 and averages.
BenchReport run_bench(std::span<const BenchEntry> entries, const std::map<std::string, double> &optima, int runs,
                      const SolverConfig &config);

std::string format_bench_table(const BenchReport &report, bool with_time);
std::string format_bench_csv(const BenchReport &report, bool with_time);

}  // namespace faco
