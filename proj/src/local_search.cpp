#include "faco/local_search.hpp"

#include <deque>
#include <vector>

#include "faco/error.hpp"

namespace faco {

namespace {

// Accepted moves must beat this; keeps float noise from cycling the queue.
constexpr double improvement_eps = 1e-10;

class NodeQueue {
public:
    explicit NodeQueue(int n) : queued_(n, 0) {}

    void push(Node v) {
        if (!queued_[v]) {
            queued_[v] = 1;
            fifo_.push_back(v);
        }
    }

    bool empty() const { return fifo_.empty(); }

    Node pop() {
        const Node v = fifo_.front();
        fifo_.pop_front();
        queued_[v] = 0;
        return v;
    }

private:
    std::vector<unsigned char> queued_;
    std::deque<Node> fifo_;
};

// Applies the exchange (a, sa), (b, sb) -> (a, b), (sa, sb).
void apply_2opt(Tour &tour, Node a, Node b, double delta) {
    tour.reverse_path(tour.succ(a), b, delta);
}

// Scans a's candidates for the first improving exchange in the successor
// direction, then the predecessor direction.
bool improve_from(const Instance &instance, Tour &tour, const NeighborModel &nm, Node a, NodeQueue &queue) {
    const auto cand = nm.candidates(a);

    {
        const Node sa = tour.succ(a);
        const double d_a_sa = instance.distance(a, sa);
        for (int r = 0; r < nm.k(); ++r) {
            const Node b = cand[r];
            const double d_ab = nm.candidate_distance(a, r);
            if (d_ab >= d_a_sa) {
                break;
            }
            const Node sb = tour.succ(b);
            if (b == sa || sb == a) {
                continue;
            }
            const double delta = d_ab + instance.distance(sa, sb) - d_a_sa - instance.distance(b, sb);
            if (delta < -improvement_eps) {
                apply_2opt(tour, a, b, delta);
                queue.push(a);
                queue.push(sa);
                queue.push(b);
                queue.push(sb);
                return true;
            }
        }
    }
    {
        const Node pa = tour.pred(a);
        const double d_a_pa = instance.distance(a, pa);
        for (int r = 0; r < nm.k(); ++r) {
            const Node b = cand[r];
            const double d_ab = nm.candidate_distance(a, r);
            if (d_ab >= d_a_pa) {
                break;
            }
            const Node pb = tour.pred(b);
            if (b == pa || pb == a) {
                continue;
            }
            // (pa, a), (pb, b) -> (pa, pb), (a, b): the successor move on (pa, pb).
            const double delta = d_ab + instance.distance(pa, pb) - d_a_pa - instance.distance(b, pb);
            if (delta < -improvement_eps) {
                apply_2opt(tour, pa, pb, delta);
                queue.push(a);
                queue.push(pa);
                queue.push(b);
                queue.push(pb);
                return true;
            }
        }
    }
    return false;
}

TwoOptStats descend(const Instance &instance, Tour &tour, const NeighborModel &nm, NodeQueue &queue) {
    TwoOptStats stats;
    while (!queue.empty()) {
        const Node a = queue.pop();
        ++stats.nodes_examined;
        if (improve_from(instance, tour, nm, a, queue)) {
            ++stats.moves;
        }
    }
    return stats;
}

}  // namespace

double delta_2opt(const Instance &instance, const Tour &tour, Node a, Node b) {
    const Node sa = tour.succ(a);
    const Node sb = tour.succ(b);
    if (a == b || b == sa || sb == a) {
        throw DegenerateMove("2-opt needs two distinct, non-adjacent nodes");
    }
    return instance.distance(a, b) + instance.distance(sa, sb) - instance.distance(a, sa) -
           instance.distance(b, sb);
}

TwoOptStats two_opt_restricted(const Instance &instance, Tour &tour, std::span<const Edge> seeds,
                               const NeighborModel &nm) {
    NodeQueue queue(tour.size());
    for (const auto &e : seeds) {
        if (e.a < 0 || e.a >= tour.size() || e.b < 0 || e.b >= tour.size() || !tour.has_edge(e.a, e.b)) {
            throw InvalidArgument("seed edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) +
                                  ") is not an edge of the tour");
        }
        queue.push(e.a);
        queue.push(e.b);
    }
    return descend(instance, tour, nm, queue);
}

TwoOptStats two_opt_full(const Instance &instance, Tour &tour, const NeighborModel &nm) {
    NodeQueue queue(tour.size());
    for (int t = 0; t < tour.size(); ++t) {
        queue.push(tour.at(t));
    }
    return descend(instance, tour, nm, queue);
}

}  // namespace faco
