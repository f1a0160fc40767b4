#include "doctest.h"

#include <sstream>

#include "faco/bench.hpp"
#include "faco/error.hpp"

using namespace faco;

TEST_CASE("optima CSV") {
    const auto with_header = parse_optima_csv("name,optimal\nrand200_0, 10.72\n\n tsp1000 ,23.12\n");
    REQUIRE(with_header.size() == 2);
    CHECK(with_header.at("rand200_0") == 10.72);
    CHECK(with_header.at("tsp1000") == 23.12);

    const auto bare = parse_optima_csv("a,1\r\nb,2.5\r\n");
    CHECK(bare.at("a") == 1.0);
    CHECK(bare.at("b") == 2.5);

    CHECK_THROWS_AS(parse_optima_csv("a,1\nb,oops\n"), MalformedInput);
    CHECK_THROWS_AS(parse_optima_csv("a 1\n"), MalformedInput);
}

TEST_CASE("aggregate averages gaps over rows that have one") {
    BenchReport report;
    report.rows.push_back({"a", 10, 11.0, 10.0, 10.0, 1.0});
    report.rows.push_back({"b", 10, 21.0, 20.0, 5.0, 3.0});
    report.rows.push_back({"c", 10, 7.0, std::nullopt, std::nullopt, 2.0});
    aggregate(report);
    REQUIRE(report.mean_gap.has_value());
    CHECK(*report.mean_gap == doctest::Approx(7.5));
    CHECK(report.mean_time == doctest::Approx(2.0));

    BenchReport empty;
    aggregate(empty);
    CHECK_FALSE(empty.mean_gap.has_value());
}

TEST_CASE("run_bench averages seeds 0..runs-1 and computes the gap from the mean cost") {
    SolverConfig config;
    config.ants = 8;
    config.iterations = 5;
    config.threads = 1;
    std::vector<BenchEntry> entries{{generate_random(40, 1), {}}, {generate_random(30, 2), {}}};
    const std::map<std::string, double> optima{{"rand40_1", 5.0}};
    const auto report = run_bench(entries, optima, 3, config);
    REQUIRE(report.rows.size() == 2);
    CHECK(report.metric == "real");
    CHECK(report.runs == 3);

    double sum = 0.0;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        config.seed = seed;
        sum += solve(entries[0].instance, config).best_cost;
    }
    CHECK(report.rows[0].mean_cost == doctest::Approx(sum / 3.0).epsilon(1e-15));
    REQUIRE(report.rows[0].gap.has_value());
    CHECK(*report.rows[0].gap == doctest::Approx(100.0 * (sum / 3.0 - 5.0) / 5.0));
    CHECK_FALSE(report.rows[1].gap.has_value());
    CHECK(*report.mean_gap == *report.rows[0].gap);

    const auto csv = format_bench_csv(report, false);
    CHECK(csv.rfind("name,n,cost,optimal,gap\n", 0) == 0);
    CHECK(csv.find("rand30_2,30,") != std::string::npos);
    const auto table = format_bench_table(report, false);
    CHECK(table.find("time") == std::string::npos);
    CHECK(table.find("mean gap(%)") != std::string::npos);
    CHECK_THROWS_AS(run_bench(entries, optima, 0, config), InvalidArgument);
}
