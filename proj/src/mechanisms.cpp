#include "impsel/mechanisms.hpp"

#include <algorithm>
#include <stdexcept>

#include "impsel/enumerate.hpp"

namespace impsel {

bool selection_contains(const Selection& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

namespace {

Selection checked_nonempty(Selection s, const char* mechanism) {
    if (s.empty()) {
        throw std::logic_error(std::string(mechanism) + " produced an empty selection");
    }
    return s;
}

}  // namespace

Selection pwru(const Digraph& g) {
    const int n = g.vertex_count();
    for (int v = 1; v <= n; ++v) {
        if (g.out_degree(v) > 1) {
            throw std::domain_error("pwru is undefined here: vertex " + std::to_string(v) +
                                    " has outdegree " + std::to_string(g.out_degree(v)));
        }
    }
    const auto deg = g.indegrees();
    const int delta = max_indegree(g);
    Selection selected;
    for (int v = 1; v <= n; ++v) {
        if (deg[static_cast<std::size_t>(v) - 1] == delta) {
            selected.push_back(v);
        }
    }
    if (selected.size() == 1) {
        const int winner = selected.front();
        for (int u = 1; u <= n; ++u) {
            if (deg[static_cast<std::size_t>(u) - 1] == delta - 1 && g.has_edge(u, winner)) {
                selected.push_back(u);
            }
        }
        std::sort(selected.begin(), selected.end());
    }
    return checked_nonempty(std::move(selected), "pwru");
}

Selection apwru(const Digraph& g) {
    const int n = g.vertex_count();
    const auto deg = g.indegrees();
    Selection selected;
    for (int v = 1; v <= n; ++v) {
        // Tie-break winner of the graph with v's outgoing edges removed.
        LexKey best{-1, 0};
        for (int w = 1; w <= n; ++w) {
            const int d = deg[static_cast<std::size_t>(w) - 1] - (g.has_edge(v, w) ? 1 : 0);
            best = std::max(best, LexKey{d, w});
        }
        if (best.vertex == v) {
            selected.push_back(v);
        }
    }
    return checked_nonempty(std::move(selected), "apwru");
}

namespace {

Selection pivotal_impl(const Digraph& g, bool probe_candidates) {
    const Selection base = apwru(g);
    if (base.size() == 1) {
        return base;  // the unseating condition quantifies over an empty set
    }
    const int winner = top(g);
    Selection selected;
    for (int u : base) {
        bool pivotal_for_all = true;
        for (int v : base) {
            if (v == u) {
                continue;
            }
            bool found = false;
            if (probe_candidates) {
                // Constructive deviations: withdraw everything, point only at
                // the tie-break winner, or drop just the edge to it.
                std::vector<std::vector<int>> candidates;
                candidates.push_back({});
                if (winner != u) {
                    candidates.push_back({winner});
                }
                auto trimmed = g.out_neighbors(u);
                if (auto it = std::find(trimmed.begin(), trimmed.end(), winner);
                    it != trimmed.end()) {
                    trimmed.erase(it);
                    candidates.push_back(std::move(trimmed));
                }
                for (const auto& out : candidates) {
                    if (!selection_contains(apwru(g.replace_out_neighbors(u, out)), v)) {
                        found = true;
                        break;
                    }
                }
            }
            if (!found) {
                DeviationStream deviations(g, u);
                while (auto deviated = deviations.next()) {
                    if (!selection_contains(apwru(*deviated), v)) {
                        found = true;
                        break;
                    }
                }
            }
            if (!found) {
                pivotal_for_all = false;
                break;
            }
        }
        if (pivotal_for_all) {
            selected.push_back(u);
        }
    }
    return checked_nonempty(std::move(selected), "apwru_pivotal");
}

}  // namespace

Selection apwru_pivotal(const Digraph& g) {
    return pivotal_impl(g, true);
}

Selection apwru_pivotal_exhaustive(const Digraph& g) {
    return pivotal_impl(g, false);
}

int deletion_radius(int n, int k) {
    return (n - 2) / (k - 1);
}

Selection apwru_deletion(const Digraph& g, int k) {
    const int n = g.vertex_count();
    if (k < 2 || k > n) {
        throw std::invalid_argument("selection budget k=" + std::to_string(k) +
                                    " must lie in 2.." + std::to_string(n));
    }
    const int r = deletion_radius(n, k);
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int u = 1; u <= n; ++u) {
        std::vector<int> kept;
        for (int w : g.out_neighbors(u)) {
            if (w > u && w <= u + r) {
                continue;  // edge to an immediate index successor
            }
            kept.push_back(w);
        }
        out.push_back(std::move(kept));
    }
    return apwru(Digraph::from_out_lists(n, std::move(out)));
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::pwru:
            return "pwru";
        case Variant::apwru:
            return "apwru";
        case Variant::apwru_pivotal:
            return "apwru-pivotal";
        case Variant::apwru_deletion:
            return "apwru-deletion";
    }
    throw std::logic_error("unknown mechanism variant");
}

std::optional<Variant> variant_from_name(const std::string& name) {
    if (name == "pwru") {
        return Variant::pwru;
    }
    if (name == "apwru") {
        return Variant::apwru;
    }
    if (name == "apwru-pivotal") {
        return Variant::apwru_pivotal;
    }
    if (name == "apwru-deletion") {
        return Variant::apwru_deletion;
    }
    return std::nullopt;
}

Selection run(const MechanismId& mechanism, const Digraph& g) {
    switch (mechanism.variant) {
        case Variant::pwru:
            return pwru(g);
        case Variant::apwru:
            return apwru(g);
        case Variant::apwru_pivotal:
            return apwru_pivotal(g);
        case Variant::apwru_deletion:
            if (!mechanism.k) {
                throw std::invalid_argument("apwru-deletion requires a selection budget k");
            }
            return apwru_deletion(g, *mechanism.k);
    }
    throw std::logic_error("unknown mechanism variant");
}

}  // namespace impsel
