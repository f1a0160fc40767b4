#include "faco/heuristic.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "faco/error.hpp"

namespace faco {

namespace {

class Tokens {
public:
    explicit Tokens(std::string_view text) : text_(text) {}

    bool next(std::string_view &token) {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == text_.size()) {
            return false;
        }
        const auto start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        token = text_.substr(start, pos_ - start);
        return true;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

template <typename T>
bool parse_number(std::string_view token, T &out) {
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

HeuristicMatrix::HeuristicMatrix(int n, int k, std::vector<double> values)
    : n_(n), k_(k), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(n) * k) {
        throw ShapeMismatch("heuristic values do not match n x k");
    }
    for (const double v : values_) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw InvalidArgument("heuristic values must be finite and strictly positive");
        }
    }
}

HeuristicMatrix HeuristicMatrix::inverse_distance(const Instance &instance, const NeighborModel &nm) {
    const int n = nm.node_count();
    const int k = nm.k();
    std::vector<double> values(static_cast<std::size_t>(n) * k);
    for (Node i = 0; i < n; ++i) {
        for (int r = 0; r < k; ++r) {
            const double d = instance.distance(i, nm.candidates(i)[r]);
            if (!(d > 0.0)) {
                throw DegenerateInstance("coincident points " + std::to_string(i) + " and " +
                                         std::to_string(nm.candidates(i)[r]) + " on a candidate edge");
            }
            values[static_cast<std::size_t>(i) * k + r] = 1.0 / d;
        }
    }
    return HeuristicMatrix(n, k, std::move(values));
}

HeuristicMatrix parse_heur(std::string_view text, const NeighborModel &nm) {
    Tokens tokens(text);
    std::string_view tok;
    long version = 0;
    long n = 0;
    long k = 0;
    if (!tokens.next(tok) || tok != "HEUR" || !tokens.next(tok) || !parse_number(tok, version) ||
        !tokens.next(tok) || !parse_number(tok, n) || !tokens.next(tok) || !parse_number(tok, k)) {
        throw CorruptFile("bad HEUR header");
    }
    if (version != 1) {
        throw CorruptFile("unsupported HEUR version " + std::to_string(version));
    }
    if (n != nm.node_count() || k != nm.k()) {
        throw ShapeMismatch("HEUR file is " + std::to_string(n) + "x" + std::to_string(k) +
                            " but the neighbor model is " + std::to_string(nm.node_count()) + "x" +
                            std::to_string(nm.k()));
    }

    std::vector<double> values(static_cast<std::size_t>(n) * k);
    std::vector<char> filled(k);
    for (Node i = 0; i < n; ++i) {
        std::fill(filled.begin(), filled.end(), 0);
        double row_max = 0.0;
        for (long e = 0; e < k; ++e) {
            if (!tokens.next(tok)) {
                throw CorruptFile("HEUR file truncated at row " + std::to_string(i));
            }
            const auto colon = tok.find(':');
            long j = 0;
            double v = 0.0;
            if (colon == std::string_view::npos || !parse_number(tok.substr(0, colon), j) ||
                !parse_number(tok.substr(colon + 1), v)) {
                throw CorruptFile("bad HEUR entry '" + std::string(tok) + "'");
            }
            if (!std::isfinite(v) || v < 0.0) {
                throw CorruptFile("negative or non-finite HEUR value in row " + std::to_string(i));
            }
            const int r = (j >= 0 && j < n) ? nm.rank(i, static_cast<Node>(j)) : NeighborModel::absent;
            if (r == NeighborModel::absent) {
                throw ShapeMismatch("HEUR row " + std::to_string(i) + " lists " + std::to_string(j) +
                                    ", which is not a candidate neighbor");
            }
            if (filled[r]) {
                throw CorruptFile("duplicate neighbor " + std::to_string(j) + " in HEUR row " + std::to_string(i));
            }
            filled[r] = 1;
            values[static_cast<std::size_t>(i) * k + r] = v;
            row_max = std::max(row_max, v);
        }
        if (!(row_max > 0.0)) {
            throw CorruptFile("HEUR row " + std::to_string(i) + " has no positive value");
        }
        const double floor = HeuristicMatrix::floor_fraction * row_max;
        for (long r = 0; r < k; ++r) {
            auto &v = values[static_cast<std::size_t>(i) * k + r];
            v = std::max(v, floor);
        }
    }
    if (tokens.next(tok)) {
        throw CorruptFile("trailing data after HEUR rows");
    }
    return HeuristicMatrix(static_cast<int>(n), static_cast<int>(k), std::move(values));
}

HeuristicMatrix load_heur(const std::filesystem::path &path, const NeighborModel &nm) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open heuristic file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_heur(buffer.str(), nm);
}

std::string render_heur(const HeuristicMatrix &h, const NeighborModel &nm) {
    if (h.node_count() != nm.node_count() || h.k() != nm.k()) {
        throw ShapeMismatch("heuristic matrix does not match the neighbor model");
    }
    std::string out = "HEUR 1 " + std::to_string(h.node_count()) + " " + std::to_string(h.k()) + "\n";
    char buf[64];
    for (Node i = 0; i < h.node_count(); ++i) {
        const auto cand = nm.candidates(i);
        for (int r = 0; r < h.k(); ++r) {
            if (r > 0) {
                out += ' ';
            }
            out += std::to_string(cand[r]);
            out += ':';
            const auto res = std::to_chars(buf, buf + sizeof buf, h.value(i, r));
            out.append(buf, res.ptr);
        }
        out += '\n';
    }
    return out;
}

void save_heur(const HeuristicMatrix &h, const NeighborModel &nm, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write heuristic file " + path.string());
    }
    out << render_heur(h, nm);
}

}  // namespace faco
