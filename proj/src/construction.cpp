#include "faco/construction.hpp"

#include <cmath>
#include <limits>

#include "faco/error.hpp"

namespace faco {

void SamplerParams::validate() const {
    if (!(alpha >= 0.0) || !(beta >= 0.0)) {
        throw InvalidArgument("alpha and beta must be non-negative");
    }
    if (!(p_g >= 0.0 && p_g <= 1.0)) {
        throw InvalidArgument("p_g must lie in [0, 1]");
    }
    if (mne < 1) {
        throw InvalidArgument("mne must be at least 1");
    }
    if (ants < 1) {
        throw InvalidArgument("at least one ant is required");
    }
}

TransitionWeights::TransitionWeights(const PheromoneState &tau, const HeuristicMatrix &h, double alpha,
                                     double beta)
    : k_(tau.k()) {
    if (tau.node_count() != h.node_count() || tau.k() != h.k()) {
        throw ShapeMismatch("pheromone and heuristic matrices are not aligned");
    }
    const auto trails = tau.trails();
    const auto prior = h.values();
    w_.resize(trails.size());
    if (alpha == 1.0 && beta == 1.0) {
        for (std::size_t e = 0; e < w_.size(); ++e) {
            w_[e] = trails[e] * prior[e];
        }
    } else {
        for (std::size_t e = 0; e < w_.size(); ++e) {
            w_[e] = std::pow(trails[e], alpha) * std::pow(prior[e], beta);
        }
    }
}

const Tour &choose_reference(const Tour &global_best, const Tour &iteration_best, double p_g, Rng &rng) {
    return rng.bernoulli(p_g) ? global_best : iteration_best;
}

Node select_next(const Instance &instance, const NeighborModel &nm, const TransitionWeights &weights,
                 Node i, std::span<const unsigned char> visited, Rng &rng) {
    const auto cand = nm.candidates(i);
    const auto w = weights.row(i);

    double total = 0.0;
    int open = 0;
    for (std::size_t r = 0; r < cand.size(); ++r) {
        if (!visited[cand[r]]) {
            total += w[r];
            ++open;
        }
    }
    if (open > 0) {
        if (total > 0.0 && std::isfinite(total)) {
            const double target = rng.uniform() * total;
            double acc = 0.0;
            Node last = cand[0];
            for (std::size_t r = 0; r < cand.size(); ++r) {
                if (!visited[cand[r]]) {
                    acc += w[r];
                    last = cand[r];
                    if (target < acc) {
                        return cand[r];
                    }
                }
            }
            return last;  // rounding left target at the very top
        }
        // All weights vanished: fall back to a uniform pick.
        auto pick = static_cast<int>(rng.below(static_cast<std::uint64_t>(open)));
        for (const Node j : cand) {
            if (!visited[j] && pick-- == 0) {
                return j;
            }
        }
    }

    for (const Node j : nm.backups(i)) {
        if (!visited[j]) {
            return j;
        }
    }

    Node best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (Node j = 0; j < instance.size(); ++j) {
        if (j != i && !visited[j]) {
            const double d = instance.distance(i, j);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
    }
    if (best < 0) {
        throw NoFeasibleNode("every node has been visited");
    }
    return best;
}

namespace {

void check_relocation(const Tour &tour, Node u, Node v) {
    if (u == v || tour.succ(u) == v) {
        throw DegenerateMove("relocation requires u != v and v != succ(u)");
    }
}

}  // namespace

double relocation_delta(const Instance &instance, const Tour &tour, Node u, Node v) {
    check_relocation(tour, u, v);
    const Node p = tour.pred(v);
    const Node s = tour.succ(v);
    const Node su = tour.succ(u);
    return -instance.distance(p, v) - instance.distance(v, s) - instance.distance(u, su) +
           instance.distance(p, s) + instance.distance(u, v) + instance.distance(v, su);
}

double apply_relocation(const Instance &instance, Tour &tour, Node u, Node v) {
    const double delta = relocation_delta(instance, tour, u, v);
    tour.move_after(u, v, delta);
    return delta;
}

Construction construct(const Instance &instance, const NeighborModel &nm, const TransitionWeights &weights,
                       const Tour &reference, const SamplerParams &params, Rng &rng) {
    const int n = reference.size();
    Construction out{reference, {}};
    Tour &tour = out.tour;

    std::vector<unsigned char> visited(n, 0);
    Node current = static_cast<Node>(rng.below(static_cast<std::uint64_t>(n)));
    visited[current] = 1;
    int visited_count = 1;
    int introduced = 0;

    // Nodes behind `current` are exactly the visited ones, so a sampled node
    // is never current itself; the only no-op proposal is the successor.
    while (visited_count < n && introduced < params.mne) {
        const Node next = select_next(instance, nm, weights, current, visited, rng);
        const Node succ = tour.succ(current);
        if (next != succ) {
            const Node p = tour.pred(next);
            const Node s = tour.succ(next);
            apply_relocation(instance, tour, current, next);
            introduced += !reference.has_edge(current, next);
            introduced += !reference.has_edge(next, succ);
            introduced += !reference.has_edge(p, s);
        }
        visited[next] = 1;
        current = next;
        ++visited_count;
    }

    out.new_edges = edge_difference(tour, reference);
    return out;
}

std::vector<Edge> edge_difference(const Tour &tour, const Tour &reference) {
    std::vector<Edge> diff;
    for (int t = 0; t < tour.size(); ++t) {
        const Node a = tour.at(t);
        const Node b = tour.succ(a);
        if (!reference.has_edge(a, b)) {
            diff.push_back({a, b});
        }
    }
    return diff;
}

}  // namespace faco
