#pragma once

#include <span>
#include <vector>

#include "faco/neighbors.hpp"
#include "faco/tour.hpp"

namespace faco {

struct TrailBounds {
    double tau_min = 0.0;
    double tau_max = 0.0;
};

/// MMAS trail limits for global-best cost g_b:
///   tau_max = 1 / ((1 - rho) g_b)
///   tau_min = min(tau_max, tau_max (1 - p_best^(1/k)) / ((k - 1) p_best^(1/k)))
TrailBounds compute_bounds(double global_best_cost, double rho, int k, double p_best);

/// MMAS trails over the directed candidate entries of a NeighborModel.
///
/// Deposits are applied symmetrically: tour edge {a, b} reinforces a->b when
/// b is a candidate of a and b->a when a is a candidate of b. Every mutation
/// ends with a clip to [tau_min, tau_max].
class PheromoneState {
public:
    /// All entries start at tau_max; tau_min is 0 until bounds are set.
    PheromoneState(const NeighborModel &nm, double tau_max, double rho, double p_best);

    int node_count() const { return n_; }
    int k() const { return k_; }
    double rho() const { return rho_; }
    double p_best() const { return p_best_; }
    double tau_min() const { return tau_min_; }
    double tau_max() const { return tau_max_; }

    double trail(Node i, int r) const { return tau_[static_cast<std::size_t>(i) * k_ + r]; }
    std::span<const double> trails() const { return tau_; }

    /// Throws BoundViolation when tau_min > tau_max.
    void set_bounds(double tau_min, double tau_max);

    /// Evaporate every entry, add `deposit` on the entries of best_tour's
    /// edges, clip.
    void update_best(const Tour &best_tour, double deposit);

    /// Recompute the bounds from a new global-best cost and re-clip.
    void refresh_bounds(double global_best_cost);

private:
    void clip();

    const NeighborModel *nm_;
    int n_;
    int k_;
    double rho_;
    double p_best_;
    double tau_min_ = 0.0;
    double tau_max_;
    std::vector<double> tau_;
};

}  // namespace faco
