#pragma once

#include <span>
#include <vector>

#include "faco/instance.hpp"

namespace faco {

struct Edge {
    Node a = 0;
    Node b = 0;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/// Hamiltonian cycle stored as an order array plus its inverse. The cached
/// cost is maintained by whoever mutates the structure: the structural
/// operations take the cost change as an argument.
class Tour {
public:
    Tour() = default;

    /// Validates the permutation and computes the cost from scratch.
    Tour(const Instance &instance, std::vector<Node> order);

    int size() const { return static_cast<int>(order_.size()); }
    double cost() const { return cost_; }
    std::span<const Node> order() const { return order_; }

    Node at(int position) const { return order_[position]; }
    int position(Node v) const { return position_[v]; }

    Node succ(Node v) const {
        const int p = position_[v] + 1;
        return order_[p == size() ? 0 : p];
    }
    Node pred(Node v) const {
        const int p = position_[v];
        return order_[p == 0 ? size() - 1 : p - 1];
    }

    /// Undirected adjacency.
    bool has_edge(Node a, Node b) const { return succ(a) == b || pred(a) == b; }

    /// Removes v and reinserts it immediately after u. Requires u != v and
    /// v != succ(u). Shifts whichever side of the cycle is shorter.
    void move_after(Node u, Node v, double cost_delta);

    /// Reverses the path first .. last walked in the successor direction.
    /// Reverses the complementary path instead when that is shorter; both
    /// yield the same undirected cycle.
    void reverse_path(Node first, Node last, double cost_delta);

    /// position_[order_[t]] == t for every t and order_ is a permutation.
    bool is_consistent() const;

    std::vector<Edge> edges() const;

    friend bool operator==(const Tour &lhs, const Tour &rhs) {
        return lhs.order_ == rhs.order_ && lhs.cost_ == rhs.cost_;
    }

private:
    std::vector<Node> order_;
    std::vector<int> position_;
    double cost_ = 0.0;
};

/// True when both tours describe the same undirected cycle.
bool same_cycle(const Tour &lhs, const Tour &rhs);

}  // namespace faco
