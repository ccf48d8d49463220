#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "impsel/digraph.hpp"
#include "impsel/enumerate.hpp"
#include "impsel/mechanisms.hpp"
#include "impsel/rat.hpp"

namespace impsel {

// Independent route to the apwru selection: checks the degree, tie-break and
// outgoing-edge conditions directly, without building any deviation graph.
// Agreement with apwru over whole graph classes is an executable statement of
// the characterization and is asserted by the harness.
Selection apwru_characterization(const Digraph& g);

// apwru's output split by indegree level, with its lexicographic extremes.
struct SelectionStrata {
    Selection s0;  // selected vertices of maximum indegree
    Selection s1;  // selected vertices one below the maximum
    int v_high = 0;
    int v_low = 0;
};

SelectionStrata strata(const Digraph& g);

enum class Aggregator { min, median, mean };

std::string aggregator_name(Aggregator a);
std::optional<Aggregator> aggregator_from_name(const std::string& name);

// min / median / mean of a multiset of nonnegative integers, exactly. The
// empty multiset aggregates to 0; an even-size median is the midpoint of the
// two middle order statistics.
Rat aggregate(std::vector<long long> values, Aggregator sigma);

// Max indegree minus the aggregated indegrees of the selection.
Rat additive_gap(const Digraph& g, const Selection& selection, Aggregator sigma);

struct Violation {
    Digraph graph;
    int vertex;
    Digraph deviation;
};

struct VerificationReport {
    long long graphs_checked = 0;
    std::vector<Violation> impartiality_violations;
    Rat worst_gap = Rat(0);
    std::optional<Digraph> worst_gap_witness;
    int max_selection_size = 0;
};

nlohmann::ordered_json report_to_json(const VerificationReport& report);

using SelectionFn = std::function<Selection(const Digraph&)>;

// Membership invariance of every vertex under every class-respecting
// deviation, for every graph of the class. An empty violation list means the
// rule is impartial on the class.
VerificationReport check_impartial(const MechanismId& mechanism, const GraphClassSpec& spec);
VerificationReport check_impartial_fn(const SelectionFn& fn, const GraphClassSpec& spec);

// Worst additive gap and largest selection over the whole class.
VerificationReport measure_additive(const MechanismId& mechanism, const GraphClassSpec& spec,
                                    Aggregator sigma);
VerificationReport measure_additive_fn(const SelectionFn& fn, const GraphClassSpec& spec,
                                       Aggregator sigma);

// Validates mechanism/class combinations (pwru needs d=1, deletion needs its
// budget) and returns the class-respecting selection function.
SelectionFn mechanism_on_class(const MechanismId& mechanism, const GraphClassSpec& spec);

}  // namespace impsel
