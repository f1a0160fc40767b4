#include "faco/neighbors.hpp"

#include <algorithm>
#include <utility>

#include "faco/error.hpp"

namespace faco {

NeighborModel NeighborModel::build(const Instance &instance, int k, int bkp) {
    if (k < 1) {
        throw InvalidArgument("candidate list size must be at least 1");
    }
    if (bkp < 0) {
        throw InvalidArgument("backup list size must be non-negative");
    }
    const int n = instance.size();
    NeighborModel nm;
    nm.n_ = n;
    nm.k_ = std::min(k, n - 1);
    nm.bkp_ = std::min(bkp, n - 1 - nm.k_);
    const int wanted = nm.k_ + nm.bkp_;

    nm.cand_.resize(static_cast<std::size_t>(n) * nm.k_);
    nm.cand_dist_.resize(nm.cand_.size());
    nm.backup_.resize(static_cast<std::size_t>(n) * nm.bkp_);

    std::vector<std::pair<double, Node>> row;
    row.reserve(n - 1);
    for (Node i = 0; i < n; ++i) {
        row.clear();
        for (Node j = 0; j < n; ++j) {
            if (j != i) {
                row.emplace_back(instance.distance(i, j), j);
            }
        }
        // pair ordering = (distance, index), which is the tie-break rule.
        std::partial_sort(row.begin(), row.begin() + wanted, row.end());
        for (int r = 0; r < nm.k_; ++r) {
            nm.cand_[static_cast<std::size_t>(i) * nm.k_ + r] = row[r].second;
            nm.cand_dist_[static_cast<std::size_t>(i) * nm.k_ + r] = row[r].first;
        }
        for (int r = 0; r < nm.bkp_; ++r) {
            nm.backup_[static_cast<std::size_t>(i) * nm.bkp_ + r] = row[nm.k_ + r].second;
        }
    }
    return nm;
}

}  // namespace faco
