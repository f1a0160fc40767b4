#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "faco/error.hpp"
#include "faco/heuristic.hpp"
#include "oracles.hpp"

using namespace faco;

namespace {

// HEUR text for nm with value(i, j) supplied by fn, rows in reversed
// neighbor order so the loader has to remap.
template <typename Fn>
std::string heur_text(const NeighborModel &nm, Fn fn) {
    std::ostringstream out;
    out.precision(17);
    out << "HEUR 1 " << nm.node_count() << ' ' << nm.k() << '\n';
    for (Node i = 0; i < nm.node_count(); ++i) {
        const auto cand = nm.candidates(i);
        for (int r = nm.k() - 1; r >= 0; --r) {
            out << cand[r] << ':' << fn(i, cand[r]) << (r ? " " : "\n");
        }
    }
    return out.str();
}

}  // namespace

TEST_CASE("inverse distance prior") {
    const Instance inst("pair", {{0, 0}, {2, 0}, {0, 5}}, EdgeMetric::euclid_real);
    const auto nm = NeighborModel::build(inst, 2, 0);
    const auto h = HeuristicMatrix::inverse_distance(inst, nm);
    CHECK(nm.candidates(0)[0] == 1);
    CHECK(h.value(0, 0) == 0.5);
    CHECK(h.value(0, 1) == doctest::Approx(0.2));
}

TEST_CASE("inverse distance rejects coincident candidate points") {
    const Instance inst("dup", {{0, 0}, {0, 0}, {1, 1}, {2, 2}}, EdgeMetric::euclid_real);
    const auto nm = NeighborModel::build(inst, 2, 0);
    CHECK_THROWS_AS(HeuristicMatrix::inverse_distance(inst, nm), DegenerateInstance);
}

TEST_CASE("inverse distance: each row peaks at the rank-0 candidate") {
    const Instance inst = generate_random(20, 3);
    const auto nm = NeighborModel::build(inst, 19, 0);
    const auto h = HeuristicMatrix::inverse_distance(inst, nm);
    for (Node i = 0; i < 20; ++i) {
        // Full scan for the nearest node, independent of the neighbor model.
        Node nearest = -1;
        for (Node j = 0; j < 20; ++j) {
            if (j != i && (nearest < 0 || oracle::dist(inst, i, j) < oracle::dist(inst, i, nearest))) {
                nearest = j;
            }
        }
        const auto row = h.row(i);
        CHECK(std::max_element(row.begin(), row.end()) == row.begin());
        CHECK(nm.candidates(i)[0] == nearest);
    }
}

TEST_CASE("HEUR load: uniform file, remapping and floor") {
    const Instance inst = generate_random(30, 8);
    const auto nm = NeighborModel::build(inst, 6, 0);

    const auto ones = parse_heur(heur_text(nm, [](Node, Node) { return 1.0; }), nm);
    for (const double v : ones.values()) {
        CHECK(v == 1.0);
    }

    // Value encodes the edge so the remap can be checked; node 0's row has a
    // zero that must be floored to 1e-6 of the row maximum.
    const auto h = parse_heur(heur_text(nm, [](Node i, Node j) { return i == 0 && j == 7 ? 0.0 : 1.0 + i + j * 1e-3; }),
                              nm);
    for (Node i = 0; i < 30; ++i) {
        const auto row = h.row(i);
        const double row_max = *std::max_element(row.begin(), row.end());
        for (int r = 0; r < nm.k(); ++r) {
            const Node j = nm.candidates(i)[r];
            if (i == 0 && j == 7) {
                CHECK(h.value(i, r) == doctest::Approx(1e-6 * row_max));
            } else {
                CHECK(h.value(i, r) == doctest::Approx(1.0 + i + j * 1e-3));
            }
            CHECK(h.value(i, r) > 0.0);
        }
    }
}

TEST_CASE("HEUR load errors") {
    const Instance inst = generate_random(12, 2);
    const auto nm = NeighborModel::build(inst, 4, 0);
    const std::string good = heur_text(nm, [](Node, Node) { return 2.0; });
    CHECK_NOTHROW(parse_heur(good, nm));

    SUBCASE("negative entry") {
        std::string bad = heur_text(nm, [](Node i, Node) { return i == 5 ? -1.0 : 2.0; });
        CHECK_THROWS_AS(parse_heur(bad, nm), CorruptFile);
    }
    SUBCASE("non-finite entry") {
        std::string bad = heur_text(nm, [](Node i, Node) { return i == 5 ? std::numeric_limits<double>::infinity() : 2.0; });
        CHECK_THROWS_AS(parse_heur(bad, nm), CorruptFile);
    }
    SUBCASE("shape mismatch") {
        const auto other = NeighborModel::build(inst, 5, 0);
        CHECK_THROWS_AS(parse_heur(good, other), ShapeMismatch);
        const auto smaller = NeighborModel::build(generate_random(11, 2), 4, 0);
        CHECK_THROWS_AS(parse_heur(good, smaller), ShapeMismatch);
    }
    SUBCASE("row names a non-candidate") {
        Node stranger = 0;
        while (stranger == 3 || nm.rank(3, stranger) != NeighborModel::absent) {
            ++stranger;
        }
        const std::string bad = heur_text(nm, [](Node, Node) { return 2.0; });
        std::istringstream lines(bad);
        std::string line;
        std::string rebuilt;
        int row = -1;
        while (std::getline(lines, line)) {
            if (row == 3) {
                line = line.substr(0, line.rfind(' ') + 1) + std::to_string(stranger) + ":2";
            }
            rebuilt += line + "\n";
            ++row;
        }
        CHECK_THROWS_AS(parse_heur(rebuilt, nm), ShapeMismatch);
    }
    SUBCASE("truncated and malformed") {
        CHECK_THROWS_AS(parse_heur(good.substr(0, good.size() / 2), nm), CorruptFile);
        CHECK_THROWS_AS(parse_heur("HEUR 2 12 4\n", nm), CorruptFile);
        CHECK_THROWS_AS(parse_heur("HEAT 1 12 4\n", nm), CorruptFile);
    }
    SUBCASE("all-zero row") {
        std::string bad = heur_text(nm, [](Node i, Node) { return i == 2 ? 0.0 : 2.0; });
        CHECK_THROWS_AS(parse_heur(bad, nm), CorruptFile);
    }
}

TEST_CASE("HEUR save/load round trip for an exported 200-node prior") {
    const Instance inst = generate_random(200, 11);
    const auto nm = NeighborModel::build(inst, 20, 64);
    // Stand-in for a trainer export: softplus-like positive values with a wide range.
    Rng rng(3);
    std::vector<double> values(static_cast<std::size_t>(200) * nm.k());
    for (auto &v : values) {
        v = std::log1p(std::exp(rng.uniform() * 20.0 - 10.0));
    }
    const HeuristicMatrix exported(200, nm.k(), values);
    const auto path = std::filesystem::temp_directory_path() / "faco_test_200.heur";
    save_heur(exported, nm, path);
    const auto loaded = load_heur(path, nm);
    for (Node i = 0; i < 200; ++i) {
        const auto row = loaded.row(i);
        CHECK(*std::max_element(row.begin(), row.end()) > 0.0);
        for (int r = 0; r < nm.k(); ++r) {
            CHECK(loaded.value(i, r) >= exported.value(i, r));
        }
    }
    CHECK(std::equal(values.begin(), values.end(), loaded.values().begin(),
                     [](double a, double b) { return a == b || b > a; }));
}
