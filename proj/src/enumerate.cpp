#include "impsel/enumerate.hpp"

#include <bit>
#include <climits>
#include <stdexcept>
#include <string>

namespace impsel {

namespace {

constexpr long long kSaturate = LLONG_MAX / 4;

std::vector<int> other_vertices(int n, int v) {
    std::vector<int> targets;
    targets.reserve(static_cast<std::size_t>(n) - 1);
    for (int u = 1; u <= n; ++u) {
        if (u != v) {
            targets.push_back(u);
        }
    }
    return targets;
}

std::vector<int> mask_to_targets(std::uint64_t mask, const std::vector<int>& targets) {
    std::vector<int> subset;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (mask & (std::uint64_t(1) << i)) {
            subset.push_back(targets[i]);
        }
    }
    return subset;
}

long long admissible_subset_count(int slots, int cap) {
    long long total = 0;
    for (int i = 0; i <= cap; ++i) {
        total += binomial_capped(slots, i);
        if (total >= kSaturate) {
            return kSaturate;
        }
    }
    return total;
}

}  // namespace

void GraphClassSpec::validate() const {
    if (n < 1) {
        throw std::invalid_argument("class vertex count must be positive");
    }
    if (d && (*d < 1 || *d > n - 1)) {
        throw std::invalid_argument("outdegree bound must lie in 1.." + std::to_string(n - 1));
    }
}

long long binomial_capped(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    long long result = 1;
    for (int i = 1; i <= k; ++i) {
        if (result > kSaturate / n) {
            return kSaturate;
        }
        result = result * (n - k + i) / i;
    }
    return std::min(result, kSaturate);
}

long long class_size_capped(const GraphClassSpec& spec, long long cap) {
    spec.validate();
    const long long per_vertex = admissible_subset_count(spec.n - 1, spec.outdegree_cap());
    long long total = 1;
    for (int v = 0; v < spec.n; ++v) {
        if (per_vertex != 0 && total > cap / per_vertex) {
            return cap;
        }
        total *= per_vertex;
    }
    return std::min(total, cap);
}

DeviationStream::DeviationStream(Digraph base, int v)
    : DeviationStream(std::move(base), v, 0) {
    cap_ = base_.vertex_count() - 1;
}

DeviationStream::DeviationStream(Digraph base, int v, int max_outdegree)
    : base_(std::move(base)), v_(v), cap_(max_outdegree) {
    const int n = base_.vertex_count();
    if (v < 1 || v > n) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(n));
    }
    if (n - 1 > 62) {
        throw std::invalid_argument("deviation streams support at most 63 vertices");
    }
    targets_ = other_vertices(n, v);
    done_ = false;
}

std::optional<Digraph> DeviationStream::next() {
    const std::uint64_t limit = std::uint64_t(1) << targets_.size();
    while (!done_ && mask_ < limit) {
        const std::uint64_t mask = mask_++;
        if (mask_ == limit) {
            done_ = true;
        }
        if (std::popcount(mask) > cap_) {
            continue;
        }
        return base_.replace_out_neighbors(v_, mask_to_targets(mask, targets_));
    }
    return std::nullopt;
}

long long DeviationStream::total() const {
    return admissible_subset_count(static_cast<int>(targets_.size()), cap_);
}

ClassStream::ClassStream(const GraphClassSpec& spec) : n_(spec.n), cap_(spec.outdegree_cap()) {
    spec.validate();
    const int slots = n_ - 1;
    identity_masks_ = !spec.bounded();
    if (identity_masks_) {
        if (slots > 62) {
            throw std::invalid_argument("class enumeration supports at most 63 vertices");
        }
        per_vertex_count_ = std::uint64_t(1) << slots;
    } else {
        if (slots > 25) {
            throw std::invalid_argument("bounded-class enumeration supports at most 26 vertices");
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << slots); ++mask) {
            if (std::popcount(mask) <= cap_) {
                admissible_.push_back(mask);
            }
        }
        per_vertex_count_ = admissible_.size();
    }
    index_.assign(static_cast<std::size_t>(n_), 0);
}

Digraph ClassStream::build() const {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (int v = 1; v <= n_; ++v) {
        const std::uint64_t idx = index_[static_cast<std::size_t>(v) - 1];
        const std::uint64_t mask = identity_masks_ ? idx : admissible_[idx];
        out.push_back(mask_to_targets(mask, other_vertices(n_, v)));
    }
    return Digraph::from_out_lists(n_, std::move(out));
}

std::optional<Digraph> ClassStream::next() {
    if (done_) {
        return std::nullopt;
    }
    Digraph g = build();
    // Advance the odometer; vertex n moves fastest, vertex 1 last.
    int v = n_ - 1;
    while (v >= 0) {
        if (++index_[static_cast<std::size_t>(v)] < per_vertex_count_) {
            break;
        }
        index_[static_cast<std::size_t>(v)] = 0;
        --v;
    }
    if (v < 0) {
        done_ = true;
    }
    return g;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) {
        return 0;
    }
    const std::uint64_t mask = std::bit_ceil(bound) - 1;
    std::uint64_t draw = rng() & mask;
    while (draw >= bound) {
        draw = rng() & mask;
    }
    return draw;
}

Digraph sample_graph(const GraphClassSpec& spec, std::mt19937_64& rng) {
    spec.validate();
    const int n = spec.n;
    const int slots = n - 1;
    const int cap = spec.outdegree_cap();
    if (slots > 62) {
        throw std::invalid_argument("sampling supports at most 63 vertices");
    }

    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(n));
    if (!spec.bounded()) {
        for (int v = 1; v <= n; ++v) {
            const std::uint64_t mask = rng() & ((std::uint64_t(1) << slots) - 1);
            out.push_back(mask_to_targets(mask, other_vertices(n, v)));
        }
        return Digraph::from_out_lists(n, std::move(out));
    }

    const long long total = admissible_subset_count(slots, cap);
    if (total >= kSaturate) {
        throw std::invalid_argument("class too large for exact uniform sampling");
    }
    for (int v = 1; v <= n; ++v) {
        long long rank = static_cast<long long>(uniform_below(rng, static_cast<std::uint64_t>(total)));
        // Decode the subset size, then unrank a lexicographic combination.
        int size = 0;
        while (rank >= binomial_capped(slots, size)) {
            rank -= binomial_capped(slots, size);
            ++size;
        }
        const auto targets = other_vertices(n, v);
        std::vector<int> subset;
        int next_slot = 0;
        for (int remaining = size; remaining > 0; --remaining) {
            for (;; ++next_slot) {
                const long long with_here = binomial_capped(slots - next_slot - 1, remaining - 1);
                if (rank < with_here) {
                    subset.push_back(targets[static_cast<std::size_t>(next_slot)]);
                    ++next_slot;
                    break;
                }
                rank -= with_here;
            }
        }
        out.push_back(std::move(subset));
    }
    return Digraph::from_out_lists(n, std::move(out));
}

}  // namespace impsel
