#include "faco/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "faco/error.hpp"
#include "faco/rng.hpp"

namespace faco {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
            ++j;
        }
        if (j > i) {
            tokens.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return tokens;
}

template <typename T>
bool parse_number(std::string_view token, T &out) {
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

void check_coords(const std::vector<Point> &coords) {
    for (const auto &p : coords) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw MalformedInput("non-finite coordinate");
        }
    }
}

}  // namespace

std::string_view metric_name(EdgeMetric metric) {
    return metric == EdgeMetric::euclid_rounded ? "rounded" : "real";
}

EdgeMetric parse_metric(std::string_view token) {
    if (token == "real") {
        return EdgeMetric::euclid_real;
    }
    if (token == "rounded") {
        return EdgeMetric::euclid_rounded;
    }
    throw InvalidArgument("unknown edge metric '" + std::string(token) + "'");
}

Instance::Instance(std::string name, std::vector<Point> coords, EdgeMetric metric)
    : name_(std::move(name)), coords_(std::move(coords)), metric_(metric) {
    if (coords_.size() < 3) {
        throw InvalidArgument("an instance needs at least 3 nodes");
    }
    check_coords(coords_);
}

Instance parse_tsplib(std::string_view text) {
    std::string name;
    long dimension = -1;
    bool euc_2d = false;
    bool weight_type_seen = false;
    std::vector<Point> coords;

    const auto lines = split_lines(text);
    std::size_t li = 0;
    for (; li < lines.size(); ++li) {
        const auto line = trim(lines[li]);
        if (line.empty()) {
            continue;
        }
        if (line.starts_with("NODE_COORD_SECTION")) {
            ++li;
            break;
        }
        if (line == "EOF") {
            break;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            // Section keywords other than the coordinates are not supported.
            throw UnsupportedFormat("unsupported TSPLIB section '" + std::string(line) + "'");
        }
        const auto key = trim(line.substr(0, colon));
        const auto value = trim(line.substr(colon + 1));
        if (key == "NAME") {
            name = std::string(value);
        } else if (key == "DIMENSION") {
            if (!parse_number(value, dimension) || dimension < 0) {
                throw MalformedInput("bad DIMENSION value '" + std::string(value) + "'");
            }
        } else if (key == "EDGE_WEIGHT_TYPE") {
            weight_type_seen = true;
            euc_2d = value == "EUC_2D";
        } else if (key == "TYPE") {
            if (value != "TSP") {
                throw UnsupportedFormat("unsupported problem TYPE '" + std::string(value) + "'");
            }
        }
    }
    if (!weight_type_seen) {
        throw UnsupportedFormat("missing EDGE_WEIGHT_TYPE");
    }
    if (!euc_2d) {
        throw UnsupportedFormat("only EDGE_WEIGHT_TYPE EUC_2D is supported");
    }
    if (dimension < 0) {
        throw MalformedInput("missing DIMENSION");
    }

    for (; li < lines.size(); ++li) {
        const auto line = trim(lines[li]);
        if (line.empty()) {
            continue;
        }
        if (line == "EOF") {
            break;
        }
        const auto tokens = split_ws(line);
        long id = 0;
        Point p;
        if (tokens.size() != 3 || !parse_number(tokens[0], id) || !parse_number(tokens[1], p.x) ||
            !parse_number(tokens[2], p.y)) {
            // A new keyword ends the section.
            if (line.find(':') != std::string_view::npos || line.ends_with("SECTION")) {
                break;
            }
            throw MalformedInput("bad coordinate line '" + std::string(line) + "'");
        }
        coords.push_back(p);
    }
    if (static_cast<long>(coords.size()) != dimension) {
        throw MalformedInput("DIMENSION " + std::to_string(dimension) + " but " +
                             std::to_string(coords.size()) + " coordinate lines");
    }
    return Instance(std::move(name), std::move(coords), EdgeMetric::euclid_rounded);
}

Instance parse_instance_dump(std::string_view text, std::string name) {
    const auto lines = split_lines(text);
    std::size_t li = 0;
    while (li < lines.size() && trim(lines[li]).empty()) {
        ++li;
    }
    if (li == lines.size()) {
        throw MalformedInput("empty instance file");
    }
    const auto header = split_ws(lines[li++]);
    long n = 0;
    if (header.size() != 3 || header[0] != "TSP" || !parse_number(header[1], n) || n < 0) {
        throw MalformedInput("bad instance header");
    }
    const EdgeMetric metric = parse_metric(header[2]);

    std::vector<Point> coords;
    coords.reserve(n);
    for (; li < lines.size(); ++li) {
        const auto tokens = split_ws(lines[li]);
        if (tokens.empty()) {
            continue;
        }
        Point p;
        if (tokens.size() != 2 || !parse_number(tokens[0], p.x) || !parse_number(tokens[1], p.y)) {
            throw MalformedInput("bad coordinate line '" + std::string(trim(lines[li])) + "'");
        }
        coords.push_back(p);
    }
    if (static_cast<long>(coords.size()) != n) {
        throw MalformedInput("header declares " + std::to_string(n) + " nodes but " +
                             std::to_string(coords.size()) + " coordinate lines follow");
    }
    return Instance(std::move(name), std::move(coords), metric);
}

std::string render_instance_dump(const Instance &instance) {
    std::string out = "TSP " + std::to_string(instance.size()) + " " +
                      std::string(metric_name(instance.metric())) + "\n";
    char buf[64];
    for (const auto &p : instance.coords()) {
        auto r = std::to_chars(buf, buf + sizeof buf, p.x);
        *r.ptr++ = ' ';
        r = std::to_chars(r.ptr, buf + sizeof buf, p.y);
        *r.ptr++ = '\n';
        out.append(buf, r.ptr);
    }
    return out;
}

Instance load_instance(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open instance file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    const auto first = split_ws(text.substr(0, text.find('\n')));
    if (!first.empty() && first[0] == "TSP") {
        return parse_instance_dump(text, path.stem().string());
    }
    Instance instance = parse_tsplib(text);
    if (instance.name().empty()) {
        return instance.with_name(path.stem().string());
    }
    return instance;
}

void save_instance_dump(const Instance &instance, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write instance file " + path.string());
    }
    out << render_instance_dump(instance);
    if (!out) {
        throw Error("write failed for " + path.string());
    }
}

Instance generate_random(int n, std::uint64_t seed) {
    if (n < 3) {
        throw InvalidArgument("random instances need n >= 3");
    }
    Rng rng(seed);
    std::vector<Point> coords(n);
    for (auto &p : coords) {
        p.x = rng.uniform();
        p.y = rng.uniform();
    }
    return Instance("rand" + std::to_string(n) + "_" + std::to_string(seed), std::move(coords),
                    EdgeMetric::euclid_real);
}

bool is_permutation_of_nodes(std::span<const Node> order, int n) {
    if (static_cast<int>(order.size()) != n) {
        return false;
    }
    std::vector<char> seen(n, 0);
    for (const Node v : order) {
        if (v < 0 || v >= n || seen[v]) {
            return false;
        }
        seen[v] = 1;
    }
    return true;
}

double tour_cost(const Instance &instance, std::span<const Node> order) {
    if (!is_permutation_of_nodes(order, instance.size())) {
        throw InvalidTour("order is not a permutation of the instance nodes");
    }
    double total = 0.0;
    Node prev = order.back();
    for (const Node v : order) {
        total += instance.distance(prev, v);
        prev = v;
    }
    return total;
}

double gap_percent(double cost, double optimal) {
    if (!(optimal > 0.0)) {
        throw InvalidArgument("optimal cost must be positive");
    }
    return (cost - optimal) / optimal * 100.0;
}

}  // namespace faco
