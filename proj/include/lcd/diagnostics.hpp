#pragma once

#include <map>

#include "lcd/graph.hpp"

namespace lcd {

struct GraphDiagnostics {
    std::vector<UnshieldedCollider> colliders;      // with sepSize filled in
    std::map<NodeId, std::vector<int>> pocByParent; // parent of x -> collider indices
};

// Minimal separating-set size for (p, q) over subsets of V \ {p, q}, found by
// increasing-size search; -1 when no separating set exists (adjacent pair).
int sepSize(const DagGraph& g, NodeId p, NodeId q);

// For each unshielded collider of g: its sep size, and for each parent P of x
// the colliders that can orient P -> x (either a collider P -> x <- q, or one
// whose Meek propagation in the true skeleton orients P -> x).
GraphDiagnostics diagnostics(const DagGraph& g, NodeId x);

}  // namespace lcd
