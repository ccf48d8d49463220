#pragma once

#include <optional>
#include <string>
#include <vector>

#include "impsel/digraph.hpp"

namespace impsel {

// Sorted, duplicate-free list of selected vertices. Every mechanism here is
// provably nonempty, so an empty result is an internal error.
using Selection = std::vector<int>;

bool selection_contains(const Selection& s, int v);

// Plurality with runners-up. Defined only on graphs with all outdegrees at
// most one: selects every maximum-indegree vertex, and when that vertex is
// unique also every vertex one indegree below it that points at it.
Selection pwru(const Digraph& g);

// Asymmetric plurality with runners-up: v is selected iff v becomes the
// tie-break winner once its own outgoing edges are removed.
Selection apwru(const Digraph& g);

// Refinement of apwru keeping only vertices that can unseat every other
// selected vertex by rewiring their own outgoing edges. The default path
// probes a few constructive deviations before falling back to exhaustive
// enumeration; the exhaustive variant skips the probes and serves as ground
// truth in tests.
Selection apwru_pivotal(const Digraph& g);
Selection apwru_pivotal_exhaustive(const Digraph& g);

// Number of index-successor edges removed per vertex for a budget of k.
int deletion_radius(int n, int k);

// Asymmetric plurality with runners-up after deleting each vertex's edges to
// its deletion_radius immediate index successors. Selects at most k vertices.
Selection apwru_deletion(const Digraph& g, int k);

enum class Variant { pwru, apwru, apwru_pivotal, apwru_deletion };

struct MechanismId {
    Variant variant = Variant::apwru;
    std::optional<int> k;  // selection budget, used by apwru_deletion only
};

std::string variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

// Uniform dispatch for the harness and the CLI.
Selection run(const MechanismId& mechanism, const Digraph& g);

}  // namespace impsel
