#pragma once

#include "lcd/graph.hpp"

namespace lcd {

// All DAG extensions of a CPDAG: same skeleton, same unshielded colliders,
// directed edges preserved. Recursive orientation with acyclicity/collider
// pruning; guarded to small graphs (used as a ground-truth oracle only).
std::vector<DagGraph> enumerateMec(const PdagGraph& cpdag, int maxNodes = 12);

}  // namespace lcd
