#pragma once

#include <span>
#include <vector>

#include "faco/instance.hpp"

namespace faco {

/// Per-node candidate list (k nearest) and backup list (the next bkp
/// nearest), both in ascending distance with ties broken by node index.
/// Immutable once built.
class NeighborModel {
public:
    static constexpr int absent = -1;

    /// Lists are truncated when k + bkp exceeds n - 1.
    static NeighborModel build(const Instance &instance, int k, int bkp);

    int node_count() const { return n_; }
    int k() const { return k_; }
    int backup_size() const { return bkp_; }

    std::span<const Node> candidates(Node i) const {
        return {cand_.data() + static_cast<std::size_t>(i) * k_, static_cast<std::size_t>(k_)};
    }
    std::span<const Node> backups(Node i) const {
        return {backup_.data() + static_cast<std::size_t>(i) * bkp_, static_cast<std::size_t>(bkp_)};
    }

    /// Distance from i to its rank-r candidate.
    double candidate_distance(Node i, int r) const { return cand_dist_[static_cast<std::size_t>(i) * k_ + r]; }

    /// Rank of j in i's candidate list, or `absent`.
    int rank(Node i, Node j) const {
        const auto row = candidates(i);
        for (int r = 0; r < k_; ++r) {
            if (row[r] == j) {
                return r;
            }
        }
        return absent;
    }

private:
    int n_ = 0;
    int k_ = 0;
    int bkp_ = 0;
    std::vector<Node> cand_;
    std::vector<double> cand_dist_;
    std::vector<Node> backup_;
};

}  // namespace faco
