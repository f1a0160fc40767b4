#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace faco {

using Node = int;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// euclid_real is the exact Euclidean distance; euclid_rounded is the TSPLIB
/// EUC_2D convention (nearest integer).
enum class EdgeMetric { euclid_real, euclid_rounded };

std::string_view metric_name(EdgeMetric metric);
EdgeMetric parse_metric(std::string_view token);

/// A symmetric 2D Euclidean TSP instance. Distances are computed on demand.
class Instance {
public:
    Instance(std::string name, std::vector<Point> coords, EdgeMetric metric);

    int size() const { return static_cast<int>(coords_.size()); }
    const std::string &name() const { return name_; }
    EdgeMetric metric() const { return metric_; }
    std::span<const Point> coords() const { return coords_; }
    const Point &point(Node i) const { return coords_[i]; }

    double distance(Node i, Node j) const {
        const double dx = coords_[i].x - coords_[j].x;
        const double dy = coords_[i].y - coords_[j].y;
        const double d = std::sqrt(dx * dx + dy * dy);
        return metric_ == EdgeMetric::euclid_rounded ? std::floor(d + 0.5) : d;
    }

    Instance with_metric(EdgeMetric metric) const { return Instance(name_, coords_, metric); }
    Instance with_name(std::string name) const { return Instance(std::move(name), coords_, metric_); }

private:
    std::string name_;
    std::vector<Point> coords_;
    EdgeMetric metric_;
};

/// Reads a TSPLIB instance with EDGE_WEIGHT_TYPE EUC_2D. The result uses the
/// rounded metric.
Instance parse_tsplib(std::string_view text);

/// Internal dump format: `TSP <n> <real|rounded>` followed by n lines `<x> <y>`.
Instance parse_instance_dump(std::string_view text, std::string name = "");
std::string render_instance_dump(const Instance &instance);

/// Loads either format; the dump format is recognised by its `TSP` header.
/// The instance name defaults to the file stem when the file carries none.
Instance load_instance(const std::filesystem::path &path);
void save_instance_dump(const Instance &instance, const std::filesystem::path &path);

/// n points i.i.d. uniform on the unit square; x then y per point, drawn from
/// Rng(seed). Uses the real metric.
Instance generate_random(int n, std::uint64_t seed);

/// Cyclic tour length. Throws InvalidTour if order is not a permutation.
double tour_cost(const Instance &instance, std::span<const Node> order);

bool is_permutation_of_nodes(std::span<const Node> order, int n);

/// (cost - optimal) / optimal * 100.
double gap_percent(double cost, double optimal);

}  // namespace faco
