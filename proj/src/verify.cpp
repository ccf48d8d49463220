#include "impsel/verify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "impsel/graph_io.hpp"

namespace impsel {

Selection apwru_characterization(const Digraph& g) {
    const int n = g.vertex_count();
    const auto deg = g.indegrees();
    const int delta = max_indegree(g);
    int top_index = 0;
    for (int w = 1; w <= n; ++w) {
        if (deg[static_cast<std::size_t>(w) - 1] == delta) {
            top_index = w;  // ascending scan leaves the greatest index
        }
    }

    Selection selected;
    for (int v = 1; v <= n; ++v) {
        const int dv = deg[static_cast<std::size_t>(v) - 1];
        const bool level_ok = dv == delta || (dv == delta - 1 && v > top_index);
        if (!level_ok) {
            continue;
        }
        bool edges_ok = true;
        const LexKey key{dv, v};
        for (int w = 1; w <= n; ++w) {
            if (LexKey{deg[static_cast<std::size_t>(w) - 1], w} > key && !g.has_edge(v, w)) {
                edges_ok = false;
                break;
            }
        }
        if (edges_ok) {
            selected.push_back(v);
        }
    }
    return selected;
}

SelectionStrata strata(const Digraph& g) {
    const auto deg = g.indegrees();
    const int delta = max_indegree(g);
    const Selection chosen = apwru(g);
    SelectionStrata result;
    LexKey high{-1, 0};
    LexKey low{delta + 1, g.vertex_count() + 1};
    for (int v : chosen) {
        const int dv = deg[static_cast<std::size_t>(v) - 1];
        if (dv == delta) {
            result.s0.push_back(v);
        } else if (dv == delta - 1) {
            result.s1.push_back(v);
        } else {
            throw std::logic_error("selected vertex more than one below the maximum indegree");
        }
        high = std::max(high, LexKey{dv, v});
        low = std::min(low, LexKey{dv, v});
    }
    result.v_high = high.vertex;
    result.v_low = low.vertex;
    return result;
}

std::string aggregator_name(Aggregator a) {
    switch (a) {
        case Aggregator::min:
            return "min";
        case Aggregator::median:
            return "median";
        case Aggregator::mean:
            return "mean";
    }
    throw std::logic_error("unknown aggregator");
}

std::optional<Aggregator> aggregator_from_name(const std::string& name) {
    if (name == "min") {
        return Aggregator::min;
    }
    if (name == "median") {
        return Aggregator::median;
    }
    if (name == "mean") {
        return Aggregator::mean;
    }
    return std::nullopt;
}

Rat aggregate(std::vector<long long> values, Aggregator sigma) {
    if (values.empty()) {
        return Rat(0);
    }
    std::sort(values.begin(), values.end());
    switch (sigma) {
        case Aggregator::min:
            return Rat(values.front());
        case Aggregator::median: {
            const std::size_t mid = values.size() / 2;
            if (values.size() % 2 == 1) {
                return Rat(values[mid]);
            }
            return Rat(values[mid - 1] + values[mid], 2);
        }
        case Aggregator::mean: {
            const long long sum = std::accumulate(values.begin(), values.end(), 0LL);
            return Rat(sum, static_cast<long long>(values.size()));
        }
    }
    throw std::logic_error("unknown aggregator");
}

Rat additive_gap(const Digraph& g, const Selection& selection, Aggregator sigma) {
    const auto deg = g.indegrees();
    std::vector<long long> values;
    values.reserve(selection.size());
    for (int v : selection) {
        if (v < 1 || v > g.vertex_count()) {
            throw std::invalid_argument("selected vertex " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(g.vertex_count()));
        }
        values.push_back(deg[static_cast<std::size_t>(v) - 1]);
    }
    return Rat(max_indegree(g)) - aggregate(std::move(values), sigma);
}

namespace {

// Memoized evaluation keyed by the edge bitmask; falls back to direct calls
// when the graph is too large to key.
class SelectionCache {
public:
    SelectionCache(const SelectionFn& fn, int n) : fn_(fn), use_cache_(n <= 8) {}

    const Selection& eval(const Digraph& g) {
        if (!use_cache_) {
            scratch_ = fn_(g);
            return scratch_;
        }
        const std::uint64_t key = g.edge_bits();
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            it = cache_.emplace(key, fn_(g)).first;
        }
        return it->second;
    }

private:
    const SelectionFn& fn_;
    bool use_cache_;
    std::unordered_map<std::uint64_t, Selection> cache_;
    Selection scratch_;
};

}  // namespace

VerificationReport check_impartial_fn(const SelectionFn& fn, const GraphClassSpec& spec) {
    spec.validate();
    VerificationReport report;
    SelectionCache cache(fn, spec.n);
    const int cap = spec.outdegree_cap();
    ClassStream graphs(spec);
    while (auto g = graphs.next()) {
        ++report.graphs_checked;
        const Selection selected = cache.eval(*g);
        report.max_selection_size =
            std::max(report.max_selection_size, static_cast<int>(selected.size()));
        for (int v = 1; v <= spec.n; ++v) {
            const bool member = selection_contains(selected, v);
            DeviationStream deviations(*g, v, cap);
            while (auto deviated = deviations.next()) {
                if (selection_contains(cache.eval(*deviated), v) != member) {
                    report.impartiality_violations.push_back({*g, v, *deviated});
                }
            }
        }
    }
    return report;
}

VerificationReport measure_additive_fn(const SelectionFn& fn, const GraphClassSpec& spec,
                                       Aggregator sigma) {
    spec.validate();
    VerificationReport report;
    SelectionCache cache(fn, spec.n);
    ClassStream graphs(spec);
    while (auto g = graphs.next()) {
        ++report.graphs_checked;
        const Selection selected = cache.eval(*g);
        report.max_selection_size =
            std::max(report.max_selection_size, static_cast<int>(selected.size()));
        const Rat gap = additive_gap(*g, selected, sigma);
        if (!report.worst_gap_witness || gap > report.worst_gap) {
            report.worst_gap = gap;
            report.worst_gap_witness = *g;
        }
    }
    return report;
}

SelectionFn mechanism_on_class(const MechanismId& mechanism, const GraphClassSpec& spec) {
    spec.validate();
    if (mechanism.variant == Variant::pwru && spec.outdegree_cap() != 1) {
        throw std::invalid_argument("pwru is only defined on classes with outdegree bound 1");
    }
    if (mechanism.variant == Variant::apwru_deletion) {
        if (!mechanism.k) {
            throw std::invalid_argument("apwru-deletion requires a selection budget k");
        }
        if (*mechanism.k < 2 || *mechanism.k > spec.n) {
            throw std::invalid_argument("selection budget k=" + std::to_string(*mechanism.k) +
                                        " must lie in 2.." + std::to_string(spec.n));
        }
    }
    return [mechanism](const Digraph& g) { return run(mechanism, g); };
}

VerificationReport check_impartial(const MechanismId& mechanism, const GraphClassSpec& spec) {
    return check_impartial_fn(mechanism_on_class(mechanism, spec), spec);
}

VerificationReport measure_additive(const MechanismId& mechanism, const GraphClassSpec& spec,
                                    Aggregator sigma) {
    return measure_additive_fn(mechanism_on_class(mechanism, spec), spec, sigma);
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["graphs_checked"] = report.graphs_checked;
    auto violations = nlohmann::ordered_json::array();
    for (const auto& violation : report.impartiality_violations) {
        nlohmann::ordered_json entry;
        entry["graph"] = graph_to_json(violation.graph);
        entry["vertex"] = violation.vertex;
        entry["deviation"] = graph_to_json(violation.deviation);
        violations.push_back(std::move(entry));
    }
    j["impartiality_violations"] = std::move(violations);
    j["worst_gap"] = {{"num", report.worst_gap.numerator()},
                      {"den", report.worst_gap.denominator()}};
    if (report.worst_gap_witness) {
        j["worst_gap_witness"] = graph_to_json(*report.worst_gap_witness);
    } else {
        j["worst_gap_witness"] = nullptr;
    }
    j["max_selection_size"] = report.max_selection_size;
    return j;
}

}  // namespace impsel
