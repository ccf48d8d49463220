#include "impsel/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "impsel/graph_io.hpp"

namespace impsel {

namespace {

void validate_family(const GadgetFamily& family) {
    if (family.graphs.empty() || family.graphs.size() != family.names.size()) {
        throw std::logic_error("malformed gadget family");
    }
    const int n = family.graphs.front().vertex_count();
    for (const auto& g : family.graphs) {
        if (g.vertex_count() != n) {
            throw std::logic_error("gadget family mixes vertex counts");
        }
    }
    const int count = static_cast<int>(family.graphs.size());
    for (const auto& link : family.links) {
        if (link.from < 0 || link.from >= count || link.to < 0 || link.to >= count ||
            link.vertex < 1 || link.vertex > n) {
            throw std::logic_error("gadget link out of range");
        }
        const auto& a = family.graphs[static_cast<std::size_t>(link.from)];
        const auto& b = family.graphs[static_cast<std::size_t>(link.to)];
        for (int w = 1; w <= n; ++w) {
            if (w != link.vertex && a.out_neighbors(w) != b.out_neighbors(w)) {
                throw std::logic_error("gadget link is not a single-vertex deviation");
            }
        }
    }
}

std::vector<int> mask_to_selection(std::uint32_t mask, int n) {
    std::vector<int> selection;
    for (int v = 1; v <= n; ++v) {
        if (mask & (std::uint32_t(1) << (v - 1))) {
            selection.push_back(v);
        }
    }
    return selection;
}

}  // namespace

int GadgetFamily::vertex_count() const {
    if (graphs.empty()) {
        throw std::logic_error("empty gadget family");
    }
    return graphs.front().vertex_count();
}

GadgetFamily cycle_family(int n) {
    if (n < 3) {
        throw std::invalid_argument("cycle family needs at least 3 vertices");
    }
    GadgetFamily family;
    family.names = {"base", "dev1", "dev2", "dev3"};
    family.graphs = {
        Digraph(n, {{1, 2}, {2, 3}, {3, 1}}),
        Digraph(n, {{1, 3}, {2, 3}, {3, 1}}),
        Digraph(n, {{1, 2}, {2, 1}, {3, 1}}),
        Digraph(n, {{1, 2}, {2, 3}, {3, 2}}),
    };
    family.links = {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}};
    validate_family(family);
    return family;
}

namespace {

// Edges (u, w) for all u in D minus `dropped`, w in D, w != u.
std::vector<std::pair<int, int>> complete_minus_rows(const std::vector<int>& members,
                                                     const std::vector<int>& dropped) {
    std::vector<std::pair<int, int>> edges;
    for (int u : members) {
        if (std::find(dropped.begin(), dropped.end(), u) != dropped.end()) {
            continue;
        }
        for (int w : members) {
            if (w != u) {
                edges.emplace_back(u, w);
            }
        }
    }
    return edges;
}

}  // namespace

GadgetFamily k_family(int n, int d) {
    if (d < 2) {
        throw std::invalid_argument("k family needs outdegree bound at least 2; "
                                    "the unit-outdegree bound uses the cycle family");
    }
    if (d > n - 1) {
        throw std::invalid_argument("outdegree bound must lie in 2.." + std::to_string(n - 1));
    }
    std::vector<int> members(static_cast<std::size_t>(d) + 1);
    std::iota(members.begin(), members.end(), 1);

    GadgetFamily family;
    for (int v : members) {
        family.names.push_back("k" + std::to_string(v));
        family.graphs.emplace_back(n, complete_minus_rows(members, {v}));
    }
    // One graph per unordered pair; both single-removal graphs link to it.
    for (int u = 1; u <= d + 1; ++u) {
        for (int v = u + 1; v <= d + 1; ++v) {
            const int pair_index = static_cast<int>(family.graphs.size());
            family.names.push_back("k" + std::to_string(u) + "_" + std::to_string(v));
            family.graphs.emplace_back(n, complete_minus_rows(members, {u, v}));
            family.links.push_back({v - 1, pair_index, u});
            family.links.push_back({u - 1, pair_index, v});
        }
    }
    validate_family(family);
    return family;
}

GadgetFamily quartet_family() {
    const int n = 4;
    std::vector<std::vector<int>> supports;
    for (int out = 1; out <= n; ++out) {
        std::vector<int> support;
        for (int v = 1; v <= n; ++v) {
            if (v != out) {
                support.push_back(v);
            }
        }
        supports.push_back(std::move(support));
    }
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            supports.push_back({a, b});
        }
    }

    GadgetFamily family;
    for (const auto& support : supports) {
        std::string name = "s";
        std::vector<std::pair<int, int>> edges;
        for (int v : support) {
            name += std::to_string(v);
            for (int w = 1; w <= n; ++w) {
                if (w != v) {
                    edges.emplace_back(v, w);
                }
            }
        }
        family.names.push_back(std::move(name));
        family.graphs.emplace_back(n, edges);
    }

    auto index_of = [&](const std::vector<int>& support) {
        for (std::size_t i = 0; i < supports.size(); ++i) {
            if (supports[i] == support) {
                return static_cast<int>(i);
            }
        }
        throw std::logic_error("missing support set");
    };
    for (std::size_t i = 0; i < supports.size(); ++i) {
        if (supports[i].size() != 3) {
            continue;
        }
        for (int v : supports[i]) {
            std::vector<int> smaller;
            for (int w : supports[i]) {
                if (w != v) {
                    smaller.push_back(w);
                }
            }
            family.links.push_back({static_cast<int>(i), index_of(smaller), v});
        }
    }
    validate_family(family);
    return family;
}

GadgetFamily abstention_free_k_family(int n, int d) {
    if (d < 3) {
        throw std::invalid_argument("abstention-free family needs outdegree bound at least 3");
    }
    if (n < d + 1) {
        throw std::invalid_argument("abstention-free family needs at least " +
                                    std::to_string(d + 1) + " vertices");
    }
    std::vector<int> members(static_cast<std::size_t>(d));
    std::iota(members.begin(), members.end(), 1);
    const int feeder = d + 1;

    auto build = [&](const std::vector<int>& dropped) {
        auto edges = complete_minus_rows(members, dropped);
        for (int w : members) {
            edges.emplace_back(feeder, w);
        }
        for (int u : dropped) {
            edges.emplace_back(u, feeder);  // dropped vertices still nominate someone
        }
        // Remaining padding vertices chain through a cycle (or point at the
        // feeder when there is only one), so nobody abstains.
        if (n - feeder >= 2) {
            for (int w = feeder + 1; w < n; ++w) {
                edges.emplace_back(w, w + 1);
            }
            edges.emplace_back(n, feeder + 1);
        } else if (n - feeder == 1) {
            edges.emplace_back(n, feeder);
        }
        return Digraph(n, edges);
    };

    GadgetFamily family;
    for (int v : members) {
        family.names.push_back("a" + std::to_string(v));
        family.graphs.push_back(build({v}));
    }
    for (int u = 1; u <= d; ++u) {
        for (int v = u + 1; v <= d; ++v) {
            const int pair_index = static_cast<int>(family.graphs.size());
            family.names.push_back("a" + std::to_string(u) + "_" + std::to_string(v));
            family.graphs.push_back(build({u, v}));
            family.links.push_back({v - 1, pair_index, u});
            family.links.push_back({u - 1, pair_index, v});
        }
    }
    validate_family(family);
    return family;
}

namespace {

struct GraphContext {
    std::vector<int> indegrees;
    int delta = 0;
};

Rat mask_gap(const GraphContext& ctx, std::uint32_t mask, Aggregator sigma) {
    std::vector<long long> values;
    for (std::size_t i = 0; i < ctx.indegrees.size(); ++i) {
        if (mask & (std::uint32_t(1) << i)) {
            values.push_back(ctx.indegrees[i]);
        }
    }
    return Rat(ctx.delta) - aggregate(std::move(values), sigma);
}

void validate_query(const GadgetFamily& family, const ImpossibilityQuery& query) {
    validate_family(family);
    const int n = family.vertex_count();
    if (query.alpha < Rat(0)) {
        throw std::invalid_argument("alpha must be nonnegative");
    }
    if (query.k < 1 || query.k > n) {
        throw std::invalid_argument("selection budget k must lie in 1.." + std::to_string(n));
    }
}

std::vector<GraphContext> graph_contexts(const GadgetFamily& family) {
    std::vector<GraphContext> contexts;
    contexts.reserve(family.graphs.size());
    for (const auto& g : family.graphs) {
        contexts.push_back({g.indegrees(), max_indegree(g)});
    }
    return contexts;
}

// Admissible selections for one graph: size at most k, gap at most alpha.
// Under MIN only vertices within floor(alpha) of the maximum indegree can
// appear at all, so the enumeration walks submasks of that universe; under
// MEDIAN/MEAN every mask is screened and survivors are ordered by decreasing
// aggregate value.
std::vector<std::uint32_t> admissible_masks(const GraphContext& ctx,
                                            const ImpossibilityQuery& query) {
    const int n = static_cast<int>(ctx.indegrees.size());
    std::vector<std::uint32_t> masks;
    if (query.objective == Aggregator::min) {
        const long long slack = query.alpha.numerator() / query.alpha.denominator();
        std::uint32_t universe = 0;
        for (int i = 0; i < n; ++i) {
            if (ctx.indegrees[static_cast<std::size_t>(i)] >= ctx.delta - slack) {
                universe |= std::uint32_t(1) << i;
            }
        }
        if (Rat(ctx.delta) <= query.alpha) {
            masks.push_back(0);
        }
        std::uint32_t sub = 0;
        do {
            sub = (sub - universe) & universe;
            if (sub != 0 && std::popcount(sub) <= query.k) {
                masks.push_back(sub);
            }
        } while (sub != 0);
        std::sort(masks.begin(), masks.end());
        return masks;
    }

    std::vector<std::pair<Rat, std::uint32_t>> scored;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        if (std::popcount(mask) > query.k) {
            continue;
        }
        const Rat gap = mask_gap(ctx, mask, query.objective);
        if (gap <= query.alpha) {
            scored.emplace_back(gap, mask);
        }
    }
    std::sort(scored.begin(), scored.end());  // gap ascending = aggregate descending
    masks.reserve(scored.size());
    for (const auto& [gap, mask] : scored) {
        masks.push_back(mask);
    }
    return masks;
}

}  // namespace

ImpossibilityResult verify_impossibility(const GadgetFamily& family,
                                         const ImpossibilityQuery& query) {
    validate_query(family, query);
    const int n = family.vertex_count();
    const auto contexts = graph_contexts(family);
    const int count = static_cast<int>(family.graphs.size());

    ImpossibilityResult result;
    std::vector<std::vector<std::uint32_t>> candidates;
    candidates.reserve(static_cast<std::size_t>(count));
    for (const auto& ctx : contexts) {
        candidates.push_back(admissible_masks(ctx, query));
        result.candidate_counts.push_back(static_cast<long long>(candidates.back().size()));
    }

    result.search_order.resize(static_cast<std::size_t>(count));
    std::iota(result.search_order.begin(), result.search_order.end(), 0);
    std::sort(result.search_order.begin(), result.search_order.end(), [&](int a, int b) {
        const auto ca = candidates[static_cast<std::size_t>(a)].size();
        const auto cb = candidates[static_cast<std::size_t>(b)].size();
        return ca != cb ? ca < cb : a < b;
    });

    std::vector<std::vector<std::pair<int, int>>> links_of(static_cast<std::size_t>(count));
    for (const auto& link : family.links) {
        links_of[static_cast<std::size_t>(link.from)].emplace_back(link.to, link.vertex);
        links_of[static_cast<std::size_t>(link.to)].emplace_back(link.from, link.vertex);
    }

    std::vector<long long> assigned(static_cast<std::size_t>(count), -1);
    auto search = [&](auto&& self, int depth) -> bool {
        if (depth == count) {
            return true;
        }
        const int graph = result.search_order[static_cast<std::size_t>(depth)];
        for (const std::uint32_t mask : candidates[static_cast<std::size_t>(graph)]) {
            ++result.nodes_explored;
            bool consistent = true;
            for (const auto& [other, vertex] : links_of[static_cast<std::size_t>(graph)]) {
                const long long other_mask = assigned[static_cast<std::size_t>(other)];
                if (other_mask < 0) {
                    continue;
                }
                const std::uint32_t bit = std::uint32_t(1) << (vertex - 1);
                if ((mask & bit) != (static_cast<std::uint32_t>(other_mask) & bit)) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) {
                continue;
            }
            assigned[static_cast<std::size_t>(graph)] = mask;
            if (self(self, depth + 1)) {
                return true;
            }
            assigned[static_cast<std::size_t>(graph)] = -1;
        }
        return false;
    };

    result.sat = search(search, 0);
    if (result.sat) {
        result.witness.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) {
            result.witness.push_back(
                mask_to_selection(static_cast<std::uint32_t>(assigned[static_cast<std::size_t>(i)]), n));
        }
    }
    return result;
}

ImpossibilityResult verify_impossibility_exhaustive(const GadgetFamily& family,
                                                    const ImpossibilityQuery& query) {
    validate_query(family, query);
    const int n = family.vertex_count();
    const int count = static_cast<int>(family.graphs.size());
    if (count > 4 || n > 4) {
        throw std::invalid_argument(
            "the exhaustive impossibility oracle handles at most 4 graphs on 4 vertices");
    }
    const auto contexts = graph_contexts(family);

    std::vector<std::uint32_t> size_bounded;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        if (std::popcount(mask) <= query.k) {
            size_bounded.push_back(mask);
        }
    }

    ImpossibilityResult result;
    result.candidate_counts.assign(static_cast<std::size_t>(count),
                                   static_cast<long long>(size_bounded.size()));
    result.search_order.resize(static_cast<std::size_t>(count));
    std::iota(result.search_order.begin(), result.search_order.end(), 0);

    std::vector<std::size_t> odometer(static_cast<std::size_t>(count), 0);
    while (true) {
        ++result.nodes_explored;
        bool feasible = true;
        for (int i = 0; i < count && feasible; ++i) {
            const std::uint32_t mask = size_bounded[odometer[static_cast<std::size_t>(i)]];
            feasible = mask_gap(contexts[static_cast<std::size_t>(i)], mask, query.objective) <=
                       query.alpha;
        }
        for (const auto& link : family.links) {
            if (!feasible) {
                break;
            }
            const std::uint32_t a = size_bounded[odometer[static_cast<std::size_t>(link.from)]];
            const std::uint32_t b = size_bounded[odometer[static_cast<std::size_t>(link.to)]];
            const std::uint32_t bit = std::uint32_t(1) << (link.vertex - 1);
            feasible = (a & bit) == (b & bit);
        }
        if (feasible) {
            result.sat = true;
            for (int i = 0; i < count; ++i) {
                result.witness.push_back(
                    mask_to_selection(size_bounded[odometer[static_cast<std::size_t>(i)]], n));
            }
            return result;
        }
        int pos = count - 1;
        while (pos >= 0 && ++odometer[static_cast<std::size_t>(pos)] == size_bounded.size()) {
            odometer[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) {
            return result;
        }
    }
}

bool validate_witness(const GadgetFamily& family, const ImpossibilityQuery& query,
                      const std::vector<Selection>& witness) {
    validate_query(family, query);
    if (witness.size() != family.graphs.size()) {
        return false;
    }
    for (std::size_t i = 0; i < witness.size(); ++i) {
        const auto& selection = witness[i];
        if (static_cast<int>(selection.size()) > query.k) {
            return false;
        }
        if (!std::is_sorted(selection.begin(), selection.end()) ||
            std::adjacent_find(selection.begin(), selection.end()) != selection.end()) {
            return false;
        }
        if (!selection.empty() &&
            (selection.front() < 1 || selection.back() > family.graphs[i].vertex_count())) {
            return false;
        }
        if (additive_gap(family.graphs[i], selection, query.objective) > query.alpha) {
            return false;
        }
    }
    for (const auto& link : family.links) {
        const bool in_from =
            selection_contains(witness[static_cast<std::size_t>(link.from)], link.vertex);
        const bool in_to =
            selection_contains(witness[static_cast<std::size_t>(link.to)], link.vertex);
        if (in_from != in_to) {
            return false;
        }
    }
    return true;
}

std::vector<Selection> induced_assignment(const GadgetFamily& family, const SelectionFn& fn) {
    std::vector<Selection> assignment;
    assignment.reserve(family.graphs.size());
    for (const auto& g : family.graphs) {
        assignment.push_back(fn(g));
    }
    return assignment;
}

nlohmann::ordered_json family_to_json(const GadgetFamily& family) {
    nlohmann::ordered_json j;
    auto graphs = nlohmann::ordered_json::array();
    for (const auto& g : family.graphs) {
        graphs.push_back(graph_to_json(g));
    }
    j["graphs"] = std::move(graphs);
    auto links = nlohmann::ordered_json::array();
    for (const auto& link : family.links) {
        links.push_back({link.from, link.to, link.vertex});
    }
    j["links"] = std::move(links);
    return j;
}

nlohmann::ordered_json witness_to_json(const std::vector<Selection>& witness) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < witness.size(); ++i) {
        j[std::to_string(i)] = witness[i];
    }
    return j;
}

}  // namespace impsel
