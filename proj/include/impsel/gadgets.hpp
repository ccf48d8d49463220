#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "impsel/digraph.hpp"
#include "impsel/mechanisms.hpp"
#include "impsel/rat.hpp"
#include "impsel/verify.hpp"

namespace impsel {

// One single-vertex deviation inside a family: graphs[to] differs from
// graphs[from] only in the outgoing edges of `vertex`.
struct DeviationLink {
    int from = 0;
    int to = 0;
    int vertex = 0;
};

// A finite set of graphs tied together by deviation links. Construction
// verifies that every link really is a single-vertex deviation.
struct GadgetFamily {
    std::vector<std::string> names;
    std::vector<Digraph> graphs;
    std::vector<DeviationLink> links;

    int vertex_count() const;
};

// The 3-cycle with each cycle vertex redirecting its edge to its predecessor,
// padded to n vertices with isolated ones. Lives in the unit-outdegree class.
GadgetFamily cycle_family(int n);

// Complete subgraph on d+1 vertices with one (K_v) or two (K_uv) vertices'
// outgoing edges removed; remaining vertices isolated. One graph per
// unordered pair, linked to both single-removal graphs.
GadgetFamily k_family(int n, int d);

// Family on 4 vertices indexed by the set T of vertices with full
// out-neighborhoods (everyone else abstains): all |T|=3 sets and all |T|=2
// sets, linked by emptying one full vertex. Closed under relabeling 1..3, so
// the search needs no symmetry reasoning.
GadgetFamily quartet_family();

// k_family on D = 1..d reworked so no vertex abstains: a feeder vertex d+1
// points at all of D, vertices of D without outgoing edges point at the
// feeder, and the remaining vertices form a cycle. Requires d >= 3.
GadgetFamily abstention_free_k_family(int n, int d);

struct ImpossibilityQuery {
    Aggregator objective = Aggregator::min;
    Rat alpha = Rat(0);
    int k = 1;
};

// SAT: some per-graph assignment of selections meets the additive bound on
// every graph and membership invariance across every link; UNSAT: none does.
// UNSAT rules out any impartial k-selection rule with that guarantee on a
// class containing the family, since a real rule induces an assignment. SAT
// is only family-level consistency, never an existence proof.
struct ImpossibilityResult {
    bool sat = false;
    std::vector<Selection> witness;           // per graph, only when sat
    std::vector<long long> candidate_counts;  // per graph, after filtering
    std::vector<int> search_order;            // graph indices, most constrained first
    long long nodes_explored = 0;
};

ImpossibilityResult verify_impossibility(const GadgetFamily& family,
                                         const ImpossibilityQuery& query);

// Unpruned oracle: full product over all size-bounded selections, constraints
// checked on complete assignments. Restricted to tiny families.
ImpossibilityResult verify_impossibility_exhaustive(const GadgetFamily& family,
                                                    const ImpossibilityQuery& query);

// Re-checks a witness against both constraint sets, independently of the
// search that produced it.
bool validate_witness(const GadgetFamily& family, const ImpossibilityQuery& query,
                      const std::vector<Selection>& witness);

// Assignment obtained by running a selection rule on every family graph.
std::vector<Selection> induced_assignment(const GadgetFamily& family, const SelectionFn& fn);

nlohmann::ordered_json family_to_json(const GadgetFamily& family);
nlohmann::ordered_json witness_to_json(const std::vector<Selection>& witness);

}  // namespace impsel
