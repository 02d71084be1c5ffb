#include "lcd/dsep.hpp"

namespace lcd {

bool dSeparated(const DagGraph& g, NodeId a, NodeId b, const NodeSet& s) {
    g.checkNode(a);
    g.checkNode(b);
    if (a == b) throw LcdError("dSeparated: endpoints must differ");
    if (s.count(a) || s.count(b)) throw LcdError("dSeparated: endpoint inside conditioning set");
    for (NodeId v : s) g.checkNode(v);

    const int n = g.numNodes();

    // Nodes that are in s or have a descendant in s: conditioning on such a
    // node's descendant activates a collider at it.
    std::vector<bool> anc(n, false);
    {
        std::vector<NodeId> stack(s.begin(), s.end());
        for (NodeId v : s) anc[v] = true;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (NodeId p : g.parents(u)) {
                if (!anc[p]) {
                    anc[p] = true;
                    stack.push_back(p);
                }
            }
        }
    }

    std::vector<bool> inS(n, false);
    for (NodeId v : s) inS[v] = true;

    // State: (node, arrived-through). 0 = via edge pointing into the node
    // (we came from a parent), 1 = via edge leaving the node (from a child).
    std::vector<std::array<bool, 2>> seen(n, {false, false});
    std::vector<std::pair<NodeId, int>> stack;

    auto push = [&](NodeId v, int dir) {
        if (!seen[v][dir]) {
            seen[v][dir] = true;
            stack.emplace_back(v, dir);
        }
    };

    // Leaving the source counts as arriving "from a child" for the purpose of
    // the first hop: both parents and children of `a` are reachable.
    push(a, 1);
    while (!stack.empty()) {
        auto [v, dir] = stack.back();
        stack.pop_back();
        if (v == b) return false;

        if (dir == 1) {
            // Arrived from a child (tail side). If v not conditioned on,
            // continue to its parents (chain) and children (fork).
            if (!inS[v]) {
                for (NodeId p : g.parents(v)) push(p, 1);
                for (NodeId c : g.children(v)) push(c, 0);
            }
        } else {
            // Arrived from a parent (head side). If not conditioned on, pass
            // through to children. If v is a collider whose descendant set
            // meets s, bounce back up to parents.
            if (!inS[v]) {
                for (NodeId c : g.children(v)) push(c, 0);
            }
            if (anc[v]) {
                for (NodeId p : g.parents(v)) push(p, 1);
            }
        }
    }
    return true;
}

}  // namespace lcd
