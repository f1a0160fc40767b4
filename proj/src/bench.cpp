#include "faco/bench.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "faco/error.hpp"

namespace faco {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

std::string fixed(double value, int precision) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(precision) << value;
    return out.str();
}

}  // namespace

void aggregate(BenchReport &report) {
    double gap_sum = 0.0;
    int gap_count = 0;
    double time_sum = 0.0;
    for (const auto &row : report.rows) {
        if (row.gap) {
            gap_sum += *row.gap;
            ++gap_count;
        }
        time_sum += row.mean_time;
    }
    report.mean_gap = gap_count > 0 ? std::optional<double>(gap_sum / gap_count) : std::nullopt;
    report.mean_time = report.rows.empty() ? 0.0 : time_sum / static_cast<double>(report.rows.size());
}

std::map<std::string, double> parse_optima_csv(std::string_view text) {
    std::map<std::string, double> optima;
    std::size_t start = 0;
    bool first = true;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const auto line = trim(text.substr(start, end - start));
        start = end + 1;
        if (line.empty()) {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string_view::npos) {
            throw MalformedInput("optima line without a comma: '" + std::string(line) + "'");
        }
        const auto name = trim(line.substr(0, comma));
        const auto value = trim(line.substr(comma + 1));
        double optimal = 0.0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), optimal);
        if (ec != std::errc() || ptr != value.data() + value.size()) {
            if (first) {
                first = false;
                continue;
            }
            throw MalformedInput("bad optimal value for '" + std::string(name) + "'");
        }
        first = false;
        optima[std::string(name)] = optimal;
    }
    return optima;
}

std::map<std::string, double> load_optima_csv(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open optima file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_optima_csv(buffer.str());
}

BenchReport run_bench(std::span<const BenchEntry> entries, const std::map<std::string, double> &optima, int runs,
                      const SolverConfig &config) {
    if (runs < 1) {
        throw InvalidArgument("bench needs at least one run per instance");
    }
    BenchReport report;
    report.runs = runs;
    for (const auto &entry : entries) {
        const Instance &instance = entry.instance;
        if (report.metric.empty()) {
            report.metric = std::string(metric_name(instance.metric()));
        } else if (report.metric != metric_name(instance.metric())) {
            report.metric = "mixed";
        }

        SolverConfig run_config = config;
        if (!entry.heuristic.empty()) {
            run_config.heuristic_source = HeuristicSource::file;
            run_config.heuristic_path = entry.heuristic;
        }
        double cost_sum = 0.0;
        double time_sum = 0.0;
        for (int r = 0; r < runs; ++r) {
            run_config.seed = static_cast<std::uint64_t>(r);
            const RunResult result = solve(instance, run_config);
            cost_sum += result.best_cost;
            time_sum += result.wall_time;
        }

        BenchRow row;
        row.name = instance.name();
        row.n = instance.size();
        row.mean_cost = cost_sum / runs;
        row.mean_time = time_sum / runs;
        if (const auto it = optima.find(instance.name()); it != optima.end()) {
            row.optimal = it->second;
            row.gap = gap_percent(row.mean_cost, it->second);
        }
        report.rows.push_back(std::move(row));
    }
    aggregate(report);
    return report;
}

std::string format_bench_table(const BenchReport &report, bool with_time) {
    std::size_t name_width = 8;
    for (const auto &row : report.rows) {
        name_width = std::max(name_width, row.name.size());
    }
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(name_width)) << "instance" << std::right << std::setw(7) << "n"
        << std::setw(16) << "cost" << std::setw(16) << "optimal" << std::setw(10) << "gap(%)";
    if (with_time) {
        out << std::setw(11) << "time(s)";
    }
    out << '\n';
    for (const auto &row : report.rows) {
        out << std::left << std::setw(static_cast<int>(name_width)) << row.name << std::right << std::setw(7)
            << row.n << std::setw(16) << fixed(row.mean_cost, 4) << std::setw(16)
            << (row.optimal ? fixed(*row.optimal, 4) : "-") << std::setw(10)
            << (row.gap ? fixed(*row.gap, 3) : "n/a");
        if (with_time) {
            out << std::setw(11) << fixed(row.mean_time, 3);
        }
        out << '\n';
    }
    out << "instances: " << report.rows.size() << "  runs: " << report.runs << "  metric: " << report.metric
        << '\n';
    out << "mean gap(%): " << (report.mean_gap ? fixed(*report.mean_gap, 3) : "n/a") << '\n';
    if (with_time) {
        out << "mean time(s): " << fixed(report.mean_time, 3) << '\n';
    }
    return out.str();
}

std::string format_bench_csv(const BenchReport &report, bool with_time) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "name,n,cost,optimal,gap" << (with_time ? ",time" : "") << '\n';
    for (const auto &row : report.rows) {
        out << row.name << ',' << row.n << ',' << row.mean_cost << ',';
        if (row.optimal) {
            out << *row.optimal;
        }
        out << ',';
        if (row.gap) {
            out << *row.gap;
        }
        if (with_time) {
            out << ',' << row.mean_time;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace faco
