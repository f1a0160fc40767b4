#pragma once

#include <span>

#include "faco/instance.hpp"
#include "faco/neighbors.hpp"
#include "faco/tour.hpp"

namespace faco {

/// Cost change of the 2-opt exchange replacing (a, succ a) and (b, succ b)
/// with (a, b) and (succ a, succ b).
double delta_2opt(const Instance &instance, const Tour &tour, Node a, Node b);

struct TwoOptStats {
    int moves = 0;
    int nodes_examined = 0;
};

/// First-improvement 2-opt restricted to moves around the endpoints of
/// `seeds` and to candidate-list partners. Nodes touched by an applied move
/// re-enter the queue. Every seed must be an edge of the tour.
TwoOptStats two_opt_restricted(const Instance &instance, Tour &tour, std::span<const Edge> seeds,
                               const NeighborModel &nm);

/// Same descent with every tour edge as a seed.
TwoOptStats two_opt_full(const Instance &instance, Tour &tour, const NeighborModel &nm);

}  // namespace faco
