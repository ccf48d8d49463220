#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "impsel/digraph.hpp"

namespace impsel {

// A labeled graph class: all loop-free digraphs on n vertices, optionally
// restricted to maximum outdegree d.
struct GraphClassSpec {
    int n = 1;
    std::optional<int> d;

    void validate() const;
    int outdegree_cap() const { return d ? *d : n - 1; }
    bool bounded() const { return d.has_value() && *d < n - 1; }
};

// Number of graphs in the class, saturating at `cap`.
long long class_size_capped(const GraphClassSpec& spec, long long cap);

// Binomial coefficient, saturating at LLONG_MAX / 4.
long long binomial_capped(int n, int k);

// Streams the graphs obtained from `base` by replacing vertex v's
// out-neighborhood with every admissible subset of the other vertices.
// Subsets are emitted in increasing binary order, with the smallest target as
// the least significant bit; an outdegree cap keeps the stream inside
// G_n(d). The base graph itself is always among the results.
class DeviationStream {
public:
    DeviationStream(Digraph base, int v);
    DeviationStream(Digraph base, int v, int max_outdegree);

    std::optional<Digraph> next();
    long long total() const;

private:
    Digraph base_;
    int v_;
    int cap_;
    std::vector<int> targets_;
    std::uint64_t mask_ = 0;
    bool done_ = false;
};

// Streams every graph of the class exactly once. Order is deterministic:
// per-vertex subsets in increasing binary order, with vertex 1 as the most
// significant position (its subset advances last).
class ClassStream {
public:
    explicit ClassStream(const GraphClassSpec& spec);

    std::optional<Digraph> next();

private:
    Digraph build() const;

    int n_;
    int cap_;
    bool identity_masks_;                   // unbounded class: mask == index
    std::vector<std::uint64_t> admissible_; // bounded class: sorted mask list
    std::uint64_t per_vertex_count_;
    std::vector<std::uint64_t> index_;      // odometer, index_[v-1]
    bool done_ = false;
};

// Uniform draw from [0, bound) using the raw 64-bit engine output; rejection
// on masked bits keeps the draw exact and platform-independent.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Uniform draw over the labeled class: each vertex's out-neighborhood is
// drawn uniformly from the admissible subsets.
Digraph sample_graph(const GraphClassSpec& spec, std::mt19937_64& rng);

}  // namespace impsel
