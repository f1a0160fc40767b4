#include "faco/tour.hpp"

#include <algorithm>
#include <utility>

#include "faco/error.hpp"

namespace faco {

Tour::Tour(const Instance &instance, std::vector<Node> order)
    : order_(std::move(order)), position_(order_.size()) {
    cost_ = tour_cost(instance, order_);
    for (int t = 0; t < size(); ++t) {
        position_[order_[t]] = t;
    }
}

void Tour::move_after(Node u, Node v, double cost_delta) {
    const int n = size();
    const int pu = position_[u];
    const int pv = position_[v];
    const int forward = (pv - pu + n) % n;  // steps from u to v along the tour
    if (u == v || forward == 1) {
        throw DegenerateMove("relocation requires u != v and v != succ(u)");
    }
    if (forward - 1 <= n - forward) {
        // u a1 .. am v  ->  u v a1 .. am
        int p = pv;
        for (int step = 0; step < forward - 1; ++step) {
            const int q = p == 0 ? n - 1 : p - 1;
            order_[p] = order_[q];
            position_[order_[p]] = p;
            p = q;
        }
        order_[p] = v;
        position_[v] = p;
    } else {
        // v b1 .. bm u  ->  b1 .. bm u v
        int p = pv;
        for (int step = 0; step < n - forward; ++step) {
            const int q = p + 1 == n ? 0 : p + 1;
            order_[p] = order_[q];
            position_[order_[p]] = p;
            p = q;
        }
        order_[p] = v;
        position_[v] = p;
    }
    cost_ += cost_delta;
}

void Tour::reverse_path(Node first, Node last, double cost_delta) {
    const int n = size();
    int i = position_[first];
    int j = position_[last];
    int length = (j - i + n) % n + 1;
    if (2 * length > n) {
        const int old_i = i;
        i = j + 1 == n ? 0 : j + 1;
        j = old_i == 0 ? n - 1 : old_i - 1;
        length = n - length;
    }
    for (int s = 0; s < length / 2; ++s) {
        std::swap(order_[i], order_[j]);
        position_[order_[i]] = i;
        position_[order_[j]] = j;
        i = i + 1 == n ? 0 : i + 1;
        j = j == 0 ? n - 1 : j - 1;
    }
    cost_ += cost_delta;
}

bool Tour::is_consistent() const {
    if (position_.size() != order_.size() || !is_permutation_of_nodes(order_, size())) {
        return false;
    }
    for (int t = 0; t < size(); ++t) {
        if (position_[order_[t]] != t) {
            return false;
        }
    }
    return true;
}

std::vector<Edge> Tour::edges() const {
    std::vector<Edge> out;
    out.reserve(order_.size());
    for (int t = 0; t < size(); ++t) {
        out.push_back({order_[t], order_[t + 1 == size() ? 0 : t + 1]});
    }
    return out;
}

bool same_cycle(const Tour &lhs, const Tour &rhs) {
    if (lhs.size() != rhs.size()) {
        return false;
    }
    for (int t = 0; t < lhs.size(); ++t) {
        const Node v = lhs.at(t);
        if (!rhs.has_edge(v, lhs.succ(v))) {
            return false;
        }
    }
    return true;
}

}  // namespace faco
