#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "faco/heuristic.hpp"
#include "faco/instance.hpp"
#include "faco/neighbors.hpp"
#include "faco/tour.hpp"

namespace faco {

enum class HeuristicSource { inverse_distance, file };

/// Defaults reproduce the reference configuration: 100 ants, 100
/// iterations, alpha = beta = 1, rho = 0.1, p_g = 0.01, MNE = 8, k = 20,
/// BKP = 64, p_best = 0.1.
struct SolverConfig {
    int ants = 100;
    int iterations = 100;
    double alpha = 1.0;
    double beta = 1.0;
    double rho = 0.1;
    double p_g = 0.01;
    int mne = 8;
    int k = 20;
    int bkp = 64;
    double p_best = 0.1;
    std::uint64_t seed = 0;
    HeuristicSource heuristic_source = HeuristicSource::inverse_distance;
    std::filesystem::path heuristic_path;
    /// Deposit from the global best every this many iterations, otherwise
    /// from the iteration best.
    int gb_deposit_period = 10;
    /// Worker threads for the ants; 0 picks the hardware concurrency.
    int threads = 0;

    void validate() const;
};

struct IterationRecord {
    int iteration = 0;
    double iteration_best = 0.0;
    double global_best = 0.0;

    friend bool operator==(const IterationRecord &, const IterationRecord &) = default;
};

struct RunResult {
    Tour best_tour;
    double best_cost = 0.0;
    /// Cost of the nearest-neighbor + 2-opt tour the colony starts from.
    double seed_cost = 0.0;
    std::vector<IterationRecord> trace;
    double wall_time = 0.0;  // seconds
    int iterations_run = 0;
};

/// Everything except wall time matches.
bool same_outcome(const RunResult &lhs, const RunResult &rhs);

/// Greedy nearest-neighbor tour from `start`, using the candidate and backup
/// lists before a full scan.
Tour nearest_neighbor_tour(const Instance &instance, const NeighborModel &nm, Node start = 0);

RunResult solve(const Instance &instance, const SolverConfig &config);

/// Same, with a prebuilt neighbor model and prior.
RunResult solve(const Instance &instance, const SolverConfig &config, const NeighborModel &nm,
                const HeuristicMatrix &h);

/// `iter,iter_best,global_best` with one row per iteration.
void write_trace_csv(const RunResult &result, std::ostream &out);

/// Classical ant system kept as a test oracle: every ant builds a tour from
/// scratch over all unvisited nodes with p ~ tau^alpha (1/d)^beta, then all
/// ants deposit 1/C on their edges after evaporation. Dense trails, no
/// bounds, no local search. Intended for small instances.
class ClassicalAntSystem {
public:
    ClassicalAntSystem(const Instance &instance, const SolverConfig &config);

    void step();

    int iteration() const { return iteration_; }
    double trail(Node i, Node j) const { return tau_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<Tour> &last_tours() const { return tours_; }
    const Tour &global_best() const { return global_best_; }
    const Tour &iteration_best() const { return iteration_best_; }

private:
    Tour build_tour(std::uint64_t ant);

    const Instance &instance_;
    SolverConfig config_;
    int n_;
    int iteration_ = 0;
    std::vector<double> tau_;
    std::vector<double> eta_pow_;
    std::vector<Tour> tours_;
    Tour global_best_;
    Tour iteration_best_;
};

RunResult classical_as_reference(const Instance &instance, const SolverConfig &config);

}  // namespace faco
