#include "faco/pheromone.hpp"

#include <algorithm>
#include <cmath>

#include "faco/error.hpp"

namespace faco {

TrailBounds compute_bounds(double global_best_cost, double rho, int k, double p_best) {
    if (!(global_best_cost > 0.0)) {
        throw InvalidArgument("global-best cost must be positive");
    }
    if (!(rho > 0.0 && rho <= 1.0)) {
        throw InvalidArgument("evaporation rate must lie in (0, 1]");
    }
    if (k < 2) {
        throw InvalidArgument("trail bounds need a candidate list size of at least 2");
    }
    if (!(p_best > 0.0 && p_best < 1.0)) {
        throw InvalidArgument("p_best must lie in (0, 1)");
    }
    // rho = 1 gives tau_max = +inf; the clip still works in that case.
    const double tau_max = 1.0 / ((1.0 - rho) * global_best_cost);
    const double root = std::pow(p_best, 1.0 / k);
    const double tau_min = std::min(tau_max, tau_max * (1.0 - root) / ((k - 1) * root));
    return {tau_min, tau_max};
}

PheromoneState::PheromoneState(const NeighborModel &nm, double tau_max, double rho, double p_best)
    : nm_(&nm), n_(nm.node_count()), k_(nm.k()), rho_(rho), p_best_(p_best), tau_max_(tau_max) {
    if (!(tau_max > 0.0)) {
        throw InvalidArgument("tau_max must be positive");
    }
    if (!(rho > 0.0 && rho <= 1.0)) {
        throw InvalidArgument("evaporation rate must lie in (0, 1]");
    }
    tau_.assign(static_cast<std::size_t>(n_) * k_, tau_max);
}

void PheromoneState::set_bounds(double tau_min, double tau_max) {
    if (!(tau_min <= tau_max) || tau_min < 0.0) {
        throw BoundViolation("tau_min must satisfy 0 <= tau_min <= tau_max");
    }
    tau_min_ = tau_min;
    tau_max_ = tau_max;
    clip();
}

void PheromoneState::update_best(const Tour &best_tour, double deposit) {
    if (best_tour.size() != n_ || !best_tour.is_consistent()) {
        throw InvalidTour("pheromone deposit from an invalid tour");
    }
    if (!(deposit >= 0.0)) {
        throw InvalidArgument("deposit must be non-negative");
    }
    const double keep = 1.0 - rho_;
    for (auto &t : tau_) {
        t *= keep;
    }
    for (int t = 0; t < n_; ++t) {
        const Node a = best_tour.at(t);
        const Node b = best_tour.succ(a);
        if (const int r = nm_->rank(a, b); r != NeighborModel::absent) {
            tau_[static_cast<std::size_t>(a) * k_ + r] += deposit;
        }
        if (const int r = nm_->rank(b, a); r != NeighborModel::absent) {
            tau_[static_cast<std::size_t>(b) * k_ + r] += deposit;
        }
    }
    clip();
}

void PheromoneState::refresh_bounds(double global_best_cost) {
    const auto bounds = compute_bounds(global_best_cost, rho_, k_, p_best_);
    set_bounds(bounds.tau_min, bounds.tau_max);
}

void PheromoneState::clip() {
    for (auto &t : tau_) {
        t = std::clamp(t, tau_min_, tau_max_);
    }
}

}  // namespace faco
