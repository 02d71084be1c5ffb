#include "lcd/iamb.hpp"

namespace lcd {

NodeSet findMarkovBlanket(CiSource& src, NodeId x) {
    const int n = src.numNodes();
    NodeSet mb;

    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeId v = 0; v < n; ++v) {
            if (v == x || mb.count(v)) continue;
            if (!src.independent(v, x, mb)) {
                mb.insert(v);
                changed = true;
            }
        }
    }

    // Single backward pass over a snapshot; tests condition on the shrinking
    // blanket minus the candidate.
    std::vector<NodeId> snapshot(mb.begin(), mb.end());
    for (NodeId v : snapshot) {
        NodeSet rest = mb;
        rest.erase(v);
        if (src.independent(v, x, rest)) mb.erase(v);
    }
    return mb;
}

}  // namespace lcd
