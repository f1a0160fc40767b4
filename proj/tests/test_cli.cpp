#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "faco/instance.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int status = -1;
    std::string out;
};

std::string slurp(const fs::path &path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

fs::path scratch() {
    const auto dir = fs::temp_directory_path() / "faco_cli_test";
    fs::create_directories(dir);
    return dir;
}

Outcome run(const std::string &args) {
    const auto out_path = scratch() / "stdout.txt";
    const std::string command =
        std::string(FACO_CLI_PATH) + " " + args + " > " + out_path.string() + " 2> " + (scratch() / "stderr.txt").string();
    const int raw = std::system(command.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out_path)};
}

std::string field(const std::string &text, const std::string &key) {
    const auto at = text.find(key + ": ");
    REQUIRE(at != std::string::npos);
    const auto start = at + key.size() + 2;
    return text.substr(start, text.find('\n', start) - start);
}

}  // namespace

TEST_CASE("solve on a 3-4-5 triangle reports cost 12") {
    const auto path = scratch() / "tri.tsp";
    {
        std::ofstream out(path);
        out << "NAME: tri\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n1 0 0\n2 3 0\n3 0 4\nEOF\n";
    }
    const auto result = run("solve --instance " + path.string() + " --ants 4 --iters 3 --optimal 12");
    REQUIRE(result.status == 0);
    CHECK(field(result.out, "best_cost") == "12");
    CHECK(field(result.out, "gap_percent") == "0");
    CHECK(field(result.out, "metric") == "rounded");
}

TEST_CASE("zero iterations report the seed cost, and fixed seeds repeat byte for byte") {
    const auto path = scratch() / "r60.inst";
    faco::save_instance_dump(faco::generate_random(60, 4), path);
    const auto zero = run("solve --instance " + path.string() + " --iters 0");
    REQUIRE(zero.status == 0);
    CHECK(field(zero.out, "best_cost") == field(zero.out, "seed_cost"));
    CHECK(field(zero.out, "iterations") == "0");

    const std::string args = "solve --instance " + path.string() + " --ants 10 --iters 10 --seed 3 --trace " +
                             (scratch() / "trace.csv").string();
    const auto first = run(args);
    const auto second = run(args);
    REQUIRE(first.status == 0);
    CHECK(first.out == second.out);
    CHECK(slurp(scratch() / "trace.csv").rfind("iter,iter_best,global_best\n", 0) == 0);
}

TEST_CASE("gen writes count files deterministically") {
    const auto dir = scratch() / "gen";
    fs::remove_all(dir);
    REQUIRE(run("gen --n 20 --count 128 --seed 0 --out " + dir.string()).status == 0);
    int files = 0;
    for ([[maybe_unused]] const auto &entry : fs::directory_iterator(dir)) {
        ++files;
    }
    CHECK(files == 128);
    const std::string first = slurp(dir / "rand20_0.inst");
    CHECK(slurp(dir / "rand20_127.inst").size() > 0);
    REQUIRE(run("gen --n 20 --count 1 --seed 0 --out " + dir.string()).status == 0);
    CHECK(slurp(dir / "rand20_0.inst") == first);

    const auto empty = scratch() / "gen_empty";
    fs::remove_all(empty);
    REQUIRE(run("gen --n 20 --count 0 --seed 0 --out " + empty.string()).status == 0);
    CHECK(fs::is_empty(empty));
}

TEST_CASE("bench with one run agrees with solve at seed 0") {
    const auto dir = scratch() / "bench";
    fs::remove_all(dir);
    fs::create_directories(dir);
    faco::save_instance_dump(faco::generate_random(50, 9), dir / "one.inst");
    {
        std::ofstream out(scratch() / "optima.csv");
        out << "name,optimal\none,5.0\n";
    }
    const std::string flags = " --ants 8 --iters 6";
    const auto bench = run("bench --dir " + dir.string() + " --runs 1 --no-time --optima " +
                           (scratch() / "optima.csv").string() + " --csv " + (scratch() / "bench.csv").string() +
                           flags);
    REQUIRE(bench.status == 0);
    const auto solo = run("solve --instance " + (dir / "one.inst").string() + " --seed 0" + flags);
    REQUIRE(solo.status == 0);
    const double solve_cost = std::stod(field(solo.out, "best_cost"));

    const std::string csv = slurp(scratch() / "bench.csv");
    const auto row = csv.find("one,50,");
    REQUIRE(row != std::string::npos);
    const auto cost_start = row + 7;
    const double bench_cost = std::stod(csv.substr(cost_start, csv.find(',', cost_start) - cost_start));
    CHECK(bench_cost == doctest::Approx(solve_cost).epsilon(1e-11));
    CHECK(bench.out.find("time") == std::string::npos);
}

TEST_CASE("bad arguments exit with status 2") {
    CHECK(run("solve").status == 2);
    CHECK(run("solve --instance /nonexistent/file.tsp").status == 2);
    CHECK(run("solve --instance x --metric manhattan").status == 2);
    CHECK(run("gen --n 2 --count 1 --seed 0 --out /tmp/x").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("--help").status == 0);
}
