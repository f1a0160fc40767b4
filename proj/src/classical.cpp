#include <chrono>
#include <cmath>

#include "faco/error.hpp"
#include "faco/rng.hpp"
#include "faco/solver.hpp"

namespace faco {

ClassicalAntSystem::ClassicalAntSystem(const Instance &instance, const SolverConfig &config)
    : instance_(instance), config_(config), n_(instance.size()) {
    if (config.ants < 1) {
        throw InvalidArgument("at least one ant is required");
    }
    if (!(config.rho > 0.0 && config.rho <= 1.0)) {
        throw InvalidArgument("evaporation rate must lie in (0, 1]");
    }
    if (!(config.alpha >= 0.0 && config.beta >= 0.0)) {
        throw InvalidArgument("alpha and beta must be non-negative");
    }
    tau_.assign(static_cast<std::size_t>(n_) * n_, 1.0);
    eta_pow_.assign(tau_.size(), 0.0);
    for (Node i = 0; i < n_; ++i) {
        for (Node j = 0; j < n_; ++j) {
            if (i == j) {
                continue;
            }
            const double d = instance.distance(i, j);
            if (!(d > 0.0)) {
                throw DegenerateInstance("coincident points " + std::to_string(i) + " and " + std::to_string(j));
            }
            eta_pow_[static_cast<std::size_t>(i) * n_ + j] = std::pow(1.0 / d, config.beta);
        }
    }
}

Tour ClassicalAntSystem::build_tour(std::uint64_t ant) {
    Rng rng(stream_seed(config_.seed, static_cast<std::uint64_t>(iteration_), ant));
    std::vector<unsigned char> visited(n_, 0);
    std::vector<Node> order;
    order.reserve(n_);
    Node current = static_cast<Node>(rng.below(static_cast<std::uint64_t>(n_)));
    visited[current] = 1;
    order.push_back(current);
    std::vector<double> weight(n_);
    while (static_cast<int>(order.size()) < n_) {
        double total = 0.0;
        Node last_open = -1;
        for (Node j = 0; j < n_; ++j) {
            const std::size_t e = static_cast<std::size_t>(current) * n_ + j;
            weight[j] = visited[j] ? 0.0 : std::pow(tau_[e], config_.alpha) * eta_pow_[e];
            total += weight[j];
            if (!visited[j]) {
                last_open = j;
            }
        }
        Node next = last_open;
        if (total > 0.0) {
            const double target = rng.uniform() * total;
            double acc = 0.0;
            for (Node j = 0; j < n_; ++j) {
                if (!visited[j]) {
                    acc += weight[j];
                    if (target < acc) {
                        next = j;
                        break;
                    }
                }
            }
        }
        visited[next] = 1;
        order.push_back(next);
        current = next;
    }
    return Tour(instance_, std::move(order));
}

void ClassicalAntSystem::step() {
    tours_.clear();
    for (int ant = 0; ant < config_.ants; ++ant) {
        tours_.push_back(build_tour(static_cast<std::uint64_t>(ant)));
    }

    const double keep = 1.0 - config_.rho;
    for (auto &t : tau_) {
        t *= keep;
    }
    for (const auto &tour : tours_) {
        const double deposit = 1.0 / tour.cost();
        for (const auto &e : tour.edges()) {
            tau_[static_cast<std::size_t>(e.a) * n_ + e.b] += deposit;
            tau_[static_cast<std::size_t>(e.b) * n_ + e.a] += deposit;
        }
    }

    std::size_t best = 0;
    for (std::size_t a = 1; a < tours_.size(); ++a) {
        if (tours_[a].cost() < tours_[best].cost()) {
            best = a;
        }
    }
    iteration_best_ = tours_[best];
    if (iteration_ == 0 || iteration_best_.cost() < global_best_.cost()) {
        global_best_ = iteration_best_;
    }
    ++iteration_;
}

RunResult classical_as_reference(const Instance &instance, const SolverConfig &config) {
    const auto started = std::chrono::steady_clock::now();
    ClassicalAntSystem colony(instance, config);
    RunResult result;
    for (int it = 0; it < config.iterations; ++it) {
        colony.step();
        result.trace.push_back({it, colony.iteration_best().cost(), colony.global_best().cost()});
    }
    if (config.iterations > 0) {
        result.best_tour = colony.global_best();
        result.best_cost = result.best_tour.cost();
    }
    result.iterations_run = config.iterations;
    result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

}  // namespace faco
