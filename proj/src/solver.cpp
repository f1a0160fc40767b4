#include "faco/solver.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <thread>

#include "faco/construction.hpp"
#include "faco/error.hpp"
#include "faco/local_search.hpp"
#include "faco/pheromone.hpp"
#include "faco/rng.hpp"

namespace faco {

void SolverConfig::validate() const {
    SamplerParams{alpha, beta, p_g, mne, ants}.validate();
    if (iterations < 0) {
        throw InvalidArgument("iterations must be non-negative");
    }
    if (!(rho > 0.0 && rho < 1.0)) {
        throw InvalidArgument("evaporation rate must lie in (0, 1) for bounded trails");
    }
    if (k < 2) {
        throw InvalidArgument("candidate list size must be at least 2");
    }
    if (bkp < 0) {
        throw InvalidArgument("backup list size must be non-negative");
    }
    if (!(p_best > 0.0 && p_best < 1.0)) {
        throw InvalidArgument("p_best must lie in (0, 1)");
    }
    if (gb_deposit_period < 1) {
        throw InvalidArgument("global-best deposit period must be at least 1");
    }
    if (threads < 0) {
        throw InvalidArgument("thread count must be non-negative");
    }
    if (heuristic_source == HeuristicSource::file && heuristic_path.empty()) {
        throw InvalidArgument("heuristic file source needs a path");
    }
}

bool same_outcome(const RunResult &lhs, const RunResult &rhs) {
    return lhs.best_tour == rhs.best_tour && lhs.best_cost == rhs.best_cost && lhs.seed_cost == rhs.seed_cost &&
           lhs.trace == rhs.trace && lhs.iterations_run == rhs.iterations_run;
}

Tour nearest_neighbor_tour(const Instance &instance, const NeighborModel &nm, Node start) {
    const int n = instance.size();
    std::vector<unsigned char> visited(n, 0);
    std::vector<Node> order;
    order.reserve(n);
    Node current = start;
    visited[current] = 1;
    order.push_back(current);
    while (static_cast<int>(order.size()) < n) {
        Node next = -1;
        for (const Node j : nm.candidates(current)) {
            if (!visited[j]) {
                next = j;
                break;
            }
        }
        if (next < 0) {
            for (const Node j : nm.backups(current)) {
                if (!visited[j]) {
                    next = j;
                    break;
                }
            }
        }
        if (next < 0) {
            double best = 0.0;
            for (Node j = 0; j < n; ++j) {
                if (!visited[j]) {
                    const double d = instance.distance(current, j);
                    if (next < 0 || d < best) {
                        best = d;
                        next = j;
                    }
                }
            }
        }
        visited[next] = 1;
        order.push_back(next);
        current = next;
    }
    return Tour(instance, std::move(order));
}

namespace {

// Runs body(ant) for ant in [0, count), fork-join over `threads` workers.
template <typename Body>
void for_each_ant(int count, int threads, Body &&body) {
    if (threads <= 1 || count <= 1) {
        for (int ant = 0; ant < count; ++ant) {
            body(ant);
        }
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        const int spawn = std::min(threads, count);
        workers.reserve(spawn);
        for (int w = 0; w < spawn; ++w) {
            workers.emplace_back([&] {
                for (int ant = next++; ant < count; ant = next++) {
                    try {
                        body(ant);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace

RunResult solve(const Instance &instance, const SolverConfig &config) {
    config.validate();
    const auto started = std::chrono::steady_clock::now();
    const NeighborModel nm = NeighborModel::build(instance, config.k, config.bkp);
    const HeuristicMatrix h = config.heuristic_source == HeuristicSource::file
                                  ? load_heur(config.heuristic_path, nm)
                                  : HeuristicMatrix::inverse_distance(instance, nm);
    RunResult result = solve(instance, config, nm, h);
    result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

RunResult solve(const Instance &instance, const SolverConfig &config, const NeighborModel &nm,
                const HeuristicMatrix &h) {
    config.validate();
    if (nm.node_count() != instance.size() || h.node_count() != nm.node_count() || h.k() != nm.k()) {
        throw ShapeMismatch("neighbor model and prior do not match the instance");
    }
    const auto started = std::chrono::steady_clock::now();
    const SamplerParams params{config.alpha, config.beta, config.p_g, config.mne, config.ants};
    const int threads =
        config.threads > 0 ? config.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    Tour global_best = nearest_neighbor_tour(instance, nm);
    two_opt_full(instance, global_best, nm);
    global_best = Tour(instance, {global_best.order().begin(), global_best.order().end()});
    Tour iteration_best = global_best;

    RunResult result;
    result.seed_cost = global_best.cost();

    const auto bounds = compute_bounds(global_best.cost(), config.rho, nm.k(), config.p_best);
    PheromoneState tau(nm, bounds.tau_max, config.rho, config.p_best);
    tau.set_bounds(bounds.tau_min, bounds.tau_max);

    std::vector<Tour> ant_tours(config.ants);
    for (int it = 0; it < config.iterations; ++it) {
        const TransitionWeights weights(tau, h, config.alpha, config.beta);

        for_each_ant(config.ants, threads, [&](int ant) {
            Rng rng(stream_seed(config.seed, static_cast<std::uint64_t>(it), static_cast<std::uint64_t>(ant)));
            const Tour &reference = choose_reference(global_best, iteration_best, config.p_g, rng);
            Construction built = construct(instance, nm, weights, reference, params, rng);
            two_opt_restricted(instance, built.tour, built.new_edges, nm);
            ant_tours[ant] = std::move(built.tour);
        });

        int best_ant = 0;
        for (int ant = 1; ant < config.ants; ++ant) {
            if (ant_tours[ant].cost() < ant_tours[best_ant].cost()) {
                best_ant = ant;
            }
        }
        // Re-summing from scratch keeps incremental drift out of the bests.
        iteration_best = Tour(instance, {ant_tours[best_ant].order().begin(), ant_tours[best_ant].order().end()});
        if (iteration_best.cost() < global_best.cost()) {
            global_best = iteration_best;
            tau.refresh_bounds(global_best.cost());
        }

        const Tour &depositor = (it + 1) % config.gb_deposit_period == 0 ? global_best : iteration_best;
        tau.update_best(depositor, 1.0 / depositor.cost());

        result.trace.push_back({it, iteration_best.cost(), global_best.cost()});
    }

    result.best_cost = global_best.cost();
    result.best_tour = std::move(global_best);
    result.iterations_run = config.iterations;
    result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

void write_trace_csv(const RunResult &result, std::ostream &out) {
    out << "iter,iter_best,global_best\n";
    out << std::setprecision(17);
    for (const auto &row : result.trace) {
        out << row.iteration << ',' << row.iteration_best << ',' << row.global_best << '\n';
    }
}

}  // namespace faco
