#include "lcd/diagnostics.hpp"

#include "lcd/dsep.hpp"
#include "lcd/meek.hpp"

namespace lcd {

int sepSize(const DagGraph& g, NodeId p, NodeId q) {
    g.checkNode(p);
    g.checkNode(q);
    std::vector<NodeId> pool;
    for (NodeId v = 0; v < g.numNodes(); ++v) {
        if (v != p && v != q) pool.push_back(v);
    }
    int found = -1;
    forEachSubsetBySize(pool, static_cast<int>(pool.size()),
                        [&](const std::vector<NodeId>& s) {
                            if (dSeparated(g, p, q, NodeSet(s.begin(), s.end()))) {
                                found = static_cast<int>(s.size());
                                return false;
                            }
                            return true;
                        });
    return found;
}

GraphDiagnostics diagnostics(const DagGraph& g, NodeId x) {
    g.checkNode(x);
    GraphDiagnostics out;
    out.colliders = g.unshieldedColliders();
    for (auto& uc : out.colliders) uc.sepSize = sepSize(g, uc.p, uc.q);

    const PdagGraph skeleton = PdagGraph::skeletonOf(g);
    for (int i = 0; i < static_cast<int>(out.colliders.size()); ++i) {
        const auto& uc = out.colliders[i];
        // Orient only this collider in the true skeleton, close under Meek's
        // rules, and see which edges into x become directed.
        PdagGraph seeded = skeleton;
        seeded.orient(uc.p, uc.r);
        seeded.orient(uc.q, uc.r);
        PdagGraph closed = applyMeekRules(seeded);
        for (NodeId p : closed.directedParents(x)) {
            if (g.hasEdge(p, x)) out.pocByParent[p].push_back(i);
        }
    }
    return out;
}

}  // namespace lcd
