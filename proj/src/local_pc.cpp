#include "lcd/discovery.hpp"

namespace lcd {

NodeSet localPc(CiSource& src, PdagGraph& skeleton, NodeId v, SepSetMap& sepsets) {
    skeleton.checkNode(v);
    int s = 0;
    while (static_cast<int>(skeleton.neighbors(v).size()) > s) {
        auto snapshot = skeleton.neighbors(v);
        for (NodeId b : snapshot) {
            if (!skeleton.adjacent(v, b)) continue;
            std::vector<NodeId> pool;
            for (NodeId u : skeleton.neighbors(v)) {
                if (u != b) pool.push_back(u);
            }
            if (static_cast<int>(pool.size()) < s) continue;
            forEachCombination(pool, s, [&](const std::vector<NodeId>& cond) {
                if (src.independent(v, b, NodeSet(cond.begin(), cond.end()))) {
                    skeleton.removeEdge(v, b);
                    sepsets.record(v, b, NodeSet(cond.begin(), cond.end()));
                    return false;
                }
                return true;
            });
        }
        ++s;
    }
    NodeSet ne;
    for (NodeId u : skeleton.neighbors(v)) ne.insert(u);
    return ne;
}

void pcTestStream(CiSource& src, PdagGraph& skeleton,
                  const std::function<bool(NodeId, NodeId, const NodeSet&)>& onRemoval,
                  std::optional<NodeId> skip) {
    const int n = skeleton.numNodes();
    int s = 0;
    while (true) {
        // Any pair left to test at this level?
        bool eligible = false;
        for (NodeId a = 0; a < n && !eligible; ++a) {
            if (skip && a == *skip) continue;
            for (NodeId b : skeleton.neighbors(a)) {
                if (skip && b == *skip) continue;
                int pool = static_cast<int>(skeleton.neighbors(a).size()) - 1;
                if (pool >= s) {
                    eligible = true;
                    break;
                }
            }
        }
        if (!eligible) return;

        for (NodeId a = 0; a < n; ++a) {
            if (skip && a == *skip) continue;
            for (NodeId b = 0; b < n; ++b) {
                if (b == a || (skip && b == *skip)) continue;
                if (!skeleton.adjacent(a, b)) continue;
                std::vector<NodeId> pool;
                for (NodeId u : skeleton.neighbors(a)) {
                    if (u != b) pool.push_back(u);
                }
                if (static_cast<int>(pool.size()) < s) continue;
                bool keepGoing = true;
                forEachCombination(pool, s, [&](const std::vector<NodeId>& cond) {
                    NodeSet condSet(cond.begin(), cond.end());
                    if (src.independent(a, b, condSet)) {
                        skeleton.removeEdge(a, b);
                        keepGoing = onRemoval(a, b, condSet);
                        return false;
                    }
                    return true;
                });
                if (!keepGoing) return;
            }
        }
        ++s;
    }
}

}  // namespace lcd
