#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "faco/instance.hpp"
#include "faco/neighbors.hpp"

namespace faco {

/// Nonnegative prior H over candidate edges, aligned index-for-index with
/// NeighborModel::candidates. Every stored value is strictly positive.
class HeuristicMatrix {
public:
    /// Loaded values below this fraction of their row maximum are raised to it.
    static constexpr double floor_fraction = 1e-6;

    HeuristicMatrix(int n, int k, std::vector<double> values);

    /// H = 1/d on each candidate edge.
    static HeuristicMatrix inverse_distance(const Instance &instance, const NeighborModel &nm);

    int node_count() const { return n_; }
    int k() const { return k_; }
    double value(Node i, int r) const { return values_[static_cast<std::size_t>(i) * k_ + r]; }
    std::span<const double> row(Node i) const {
        return {values_.data() + static_cast<std::size_t>(i) * k_, static_cast<std::size_t>(k_)};
    }
    std::span<const double> values() const { return values_; }

private:
    int n_;
    int k_;
    std::vector<double> values_;
};

// HEUR v1 text format: `HEUR 1 <n> <k>` then n rows of k `<neighbor>:<value>`
// pairs. Rows may list neighbors in any order; the loader remaps them onto
// the candidate lists of nm and applies the row floor.
HeuristicMatrix parse_heur(std::string_view text, const NeighborModel &nm);
HeuristicMatrix load_heur(const std::filesystem::path &path, const NeighborModel &nm);

/// Writes raw values in candidate order.
std::string render_heur(const HeuristicMatrix &h, const NeighborModel &nm);
void save_heur(const HeuristicMatrix &h, const NeighborModel &nm, const std::filesystem::path &path);

}  // namespace faco
