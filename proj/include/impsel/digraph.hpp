#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace impsel {

// (indegree, vertex) pair under lexicographic order; ties go to the greater
// index. All tie-breaking in the library runs through this comparison.
struct LexKey {
    int indegree = 0;
    int vertex = 0;
    friend auto operator<=>(const LexKey&, const LexKey&) = default;
};

// Loop-free directed graph on vertices 1..n. Adjacency lists are kept sorted
// and duplicate-free, so equality is structural. Immutable after
// construction; edits go through replace_out_neighbors, which returns a new
// graph.
class Digraph {
public:
    Digraph(int n, const std::vector<std::pair<int, int>>& edge_list);
    static Digraph from_out_lists(int n, std::vector<std::vector<int>> out);

    int vertex_count() const { return n_; }
    const std::vector<int>& out_neighbors(int v) const;
    int out_degree(int v) const;
    bool has_edge(int u, int v) const;
    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    // New graph with vertex v's out-neighborhood replaced by `targets`.
    Digraph replace_out_neighbors(int v, std::vector<int> targets) const;

    // indegrees()[v-1] is the indegree of vertex v.
    std::vector<int> indegrees() const;

    // Bit per ordered pair, usable as a hash key. Requires n <= 8.
    std::uint64_t edge_bits() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    Digraph() = default;
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::vector<int>> out_;  // out_[v-1], sorted, no duplicates
};

int indegree(const Digraph& g, int v);
int max_indegree(const Digraph& g);

// The greatest-index vertex among those of maximum indegree, i.e. the vertex
// maximizing LexKey.
int top(const Digraph& g);

}  // namespace impsel
