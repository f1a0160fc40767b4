#pragma once

#include <span>
#include <vector>

#include "faco/heuristic.hpp"
#include "faco/instance.hpp"
#include "faco/neighbors.hpp"
#include "faco/pheromone.hpp"
#include "faco/rng.hpp"
#include "faco/tour.hpp"

namespace faco {

struct SamplerParams {
    double alpha = 1.0;  // pheromone exponent
    double beta = 1.0;   // heuristic exponent
    double p_g = 0.01;   // probability of starting from the global best
    int mne = 8;         // new edges after which an ant stops modifying
    int ants = 100;

    void validate() const;
};

/// Frozen tau^alpha * H^beta over candidate entries, built once per
/// iteration and shared read-only by all ants.
class TransitionWeights {
public:
    TransitionWeights(const PheromoneState &tau, const HeuristicMatrix &h, double alpha, double beta);

    int k() const { return k_; }
    std::span<const double> row(Node i) const {
        return {w_.data() + static_cast<std::size_t>(i) * k_, static_cast<std::size_t>(k_)};
    }

private:
    int k_;
    std::vector<double> w_;
};

const Tour &choose_reference(const Tour &global_best, const Tour &iteration_best, double p_g, Rng &rng);

/// Next node after i. Roulette over unvisited candidates weighted by
/// tau^alpha * H^beta; when none is left, the first unvisited backup
/// neighbor; failing that, the nearest unvisited node.
Node select_next(const Instance &instance, const NeighborModel &nm, const TransitionWeights &weights,
                 Node i, std::span<const unsigned char> visited, Rng &rng);

/// C(pi') - C(pi) for moving v to just after u, from the six incident edges:
///   -d(p,v) - d(v,s) - d(u,s_u) + d(p,s) + d(u,v) + d(v,s_u)
/// with p = pred(v), s = succ(v), s_u = succ(u).
double relocation_delta(const Instance &instance, const Tour &tour, Node u, Node v);

/// Applies the relocation and returns its cost change.
double apply_relocation(const Instance &instance, Tour &tour, Node u, Node v);

struct Construction {
    Tour tour;
    std::vector<Edge> new_edges;  // edges of tour absent from the reference
};

/// Focused construction: copy the reference, walk it from a random start,
/// and relocate each sampled node that differs from the reference successor
/// until params.mne new edges have been introduced.
Construction construct(const Instance &instance, const NeighborModel &nm, const TransitionWeights &weights,
                       const Tour &reference, const SamplerParams &params, Rng &rng);

/// Edges of tour that are not edges of reference (undirected).
std::vector<Edge> edge_difference(const Tour &tour, const Tour &reference);

}  // namespace faco
