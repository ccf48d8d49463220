#include "impsel/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace impsel {

namespace {

void validate_out_list(int n, int v, const std::vector<int>& targets) {
    int prev = 0;
    for (int u : targets) {
        if (u < 1 || u > n) {
            throw std::invalid_argument("vertex " + std::to_string(u) + " out of range 1.." +
                                        std::to_string(n));
        }
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
        }
        if (u <= prev) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(v) + "," +
                                        std::to_string(u) + ")");
        }
        prev = u;
    }
}

}  // namespace

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 1) {
        throw std::invalid_argument("vertex count must be positive");
    }
    n_ = n;
    out_.resize(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edge_list) {
        if (u < 1 || u > n || v < 1 || v > n) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range 1.." + std::to_string(n));
        }
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        }
        out_[static_cast<std::size_t>(u) - 1].push_back(v);
    }
    for (int v = 1; v <= n; ++v) {
        auto& row = out_[static_cast<std::size_t>(v) - 1];
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
            throw std::invalid_argument("duplicate edge leaving vertex " + std::to_string(v));
        }
    }
}

Digraph Digraph::from_out_lists(int n, std::vector<std::vector<int>> out) {
    if (n < 1) {
        throw std::invalid_argument("vertex count must be positive");
    }
    if (out.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("expected one adjacency list per vertex");
    }
    for (int v = 1; v <= n; ++v) {
        auto& row = out[static_cast<std::size_t>(v) - 1];
        std::sort(row.begin(), row.end());
        validate_out_list(n, v, row);
    }
    Digraph g;
    g.n_ = n;
    g.out_ = std::move(out);
    return g;
}

void Digraph::check_vertex(int v) const {
    if (v < 1 || v > n_) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(n_));
    }
}

const std::vector<int>& Digraph::out_neighbors(int v) const {
    check_vertex(v);
    return out_[static_cast<std::size_t>(v) - 1];
}

int Digraph::out_degree(int v) const {
    return static_cast<int>(out_neighbors(v).size());
}

bool Digraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& row = out_[static_cast<std::size_t>(u) - 1];
    return std::binary_search(row.begin(), row.end(), v);
}

long long Digraph::edge_count() const {
    long long total = 0;
    for (const auto& row : out_) {
        total += static_cast<long long>(row.size());
    }
    return total;
}

std::vector<std::pair<int, int>> Digraph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(static_cast<std::size_t>(edge_count()));
    for (int v = 1; v <= n_; ++v) {
        for (int u : out_[static_cast<std::size_t>(v) - 1]) {
            result.emplace_back(v, u);
        }
    }
    return result;
}

Digraph Digraph::replace_out_neighbors(int v, std::vector<int> targets) const {
    check_vertex(v);
    std::sort(targets.begin(), targets.end());
    validate_out_list(n_, v, targets);
    Digraph g = *this;
    g.out_[static_cast<std::size_t>(v) - 1] = std::move(targets);
    return g;
}

std::vector<int> Digraph::indegrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& row : out_) {
        for (int u : row) {
            ++deg[static_cast<std::size_t>(u) - 1];
        }
    }
    return deg;
}

std::uint64_t Digraph::edge_bits() const {
    if (n_ > 8) {
        throw std::invalid_argument("edge_bits requires at most 8 vertices");
    }
    std::uint64_t bits = 0;
    for (int v = 1; v <= n_; ++v) {
        for (int u : out_[static_cast<std::size_t>(v) - 1]) {
            bits |= std::uint64_t(1) << ((v - 1) * n_ + (u - 1));
        }
    }
    return bits;
}

int indegree(const Digraph& g, int v) {
    if (v < 1 || v > g.vertex_count()) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(g.vertex_count()));
    }
    int count = 0;
    for (int u = 1; u <= g.vertex_count(); ++u) {
        if (u != v && g.has_edge(u, v)) {
            ++count;
        }
    }
    return count;
}

int max_indegree(const Digraph& g) {
    const auto deg = g.indegrees();
    int best = 0;
    for (int d : deg) {
        best = std::max(best, d);
    }
    return best;
}

int top(const Digraph& g) {
    const auto deg = g.indegrees();
    LexKey best{-1, 0};
    for (int v = 1; v <= g.vertex_count(); ++v) {
        best = std::max(best, LexKey{deg[static_cast<std::size_t>(v) - 1], v});
    }
    return best.vertex;
}

}  // namespace impsel
