#pragma once

#include "lcd/graph.hpp"

namespace lcd {

// True iff every path between a and b is blocked by s. Reachability-based
// (ancestors of s precomputed, then ball passing over (node, direction)
// states), O(|V| + |E|) per query.
bool dSeparated(const DagGraph& g, NodeId a, NodeId b, const NodeSet& s);

}  // namespace lcd
