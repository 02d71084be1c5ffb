#include "lcd/graph.hpp"

#include <queue>

namespace lcd {

DagGraph::DagGraph(std::vector<std::string> names) {
    for (auto& n : names) addNode(n);
}

NodeId DagGraph::addNode(const std::string& name) {
    for (const auto& n : names_) {
        if (n == name) throw LcdError("duplicate node name: " + name);
    }
    names_.push_back(name);
    parents_.emplace_back();
    children_.emplace_back();
    return static_cast<NodeId>(names_.size()) - 1;
}

NodeId DagGraph::indexOf(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<NodeId>(i);
    }
    throw LcdError("unknown node name: " + name);
}

bool DagGraph::hasNode(const std::string& name) const {
    for (const auto& n : names_) {
        if (n == name) return true;
    }
    return false;
}

void DagGraph::checkNode(NodeId v) const {
    if (v < 0 || v >= numNodes()) throw LcdError("node id out of range");
}

void DagGraph::checkAcyclicFrom(NodeId parent, NodeId child) const {
    // Adding parent -> child creates a cycle iff parent is reachable from child.
    std::vector<bool> seen(numNodes(), false);
    std::vector<NodeId> stack{child};
    seen[child] = true;
    while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        if (u == parent) throw LcdError("edge would create a cycle");
        for (NodeId c : children_[u]) {
            if (!seen[c]) {
                seen[c] = true;
                stack.push_back(c);
            }
        }
    }
}

void DagGraph::addEdge(NodeId parent, NodeId child) {
    checkNode(parent);
    checkNode(child);
    if (parent == child) throw LcdError("self loop");
    if (hasEdge(parent, child)) throw LcdError("duplicate edge");
    if (hasEdge(child, parent)) throw LcdError("antiparallel edge");
    checkAcyclicFrom(parent, child);
    children_[parent].push_back(child);
    parents_[child].push_back(parent);
    std::sort(children_[parent].begin(), children_[parent].end());
    std::sort(parents_[child].begin(), parents_[child].end());
    ++numEdges_;
}

void DagGraph::addEdge(const std::string& parent, const std::string& child) {
    addEdge(indexOf(parent), indexOf(child));
}

bool DagGraph::hasEdge(NodeId parent, NodeId child) const {
    checkNode(parent);
    checkNode(child);
    const auto& ch = children_[parent];
    return std::binary_search(ch.begin(), ch.end(), child);
}

std::vector<NodeId> DagGraph::neighbors(NodeId v) const {
    checkNode(v);
    std::vector<NodeId> out = parents_[v];
    out.insert(out.end(), children_[v].begin(), children_[v].end());
    std::sort(out.begin(), out.end());
    return out;
}

NodeSet DagGraph::parentSet(NodeId v) const {
    checkNode(v);
    return NodeSet(parents_[v].begin(), parents_[v].end());
}

NodeSet DagGraph::descendants(NodeId v) const {
    checkNode(v);
    NodeSet out;
    std::vector<NodeId> stack{v};
    while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        for (NodeId c : children_[u]) {
            if (out.insert(c).second) stack.push_back(c);
        }
    }
    return out;
}

NodeSet DagGraph::ancestors(NodeId v) const {
    checkNode(v);
    NodeSet out;
    std::vector<NodeId> stack{v};
    while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        for (NodeId p : parents_[u]) {
            if (out.insert(p).second) stack.push_back(p);
        }
    }
    return out;
}

NodeSet DagGraph::markovBlanket(NodeId v) const {
    checkNode(v);
    NodeSet out(parents_[v].begin(), parents_[v].end());
    for (NodeId c : children_[v]) {
        out.insert(c);
        for (NodeId s : parents_[c]) {
            if (s != v) out.insert(s);
        }
    }
    return out;
}

std::vector<NodeId> DagGraph::topologicalOrder() const {
    std::vector<int> indeg(numNodes(), 0);
    for (NodeId v = 0; v < numNodes(); ++v) indeg[v] = static_cast<int>(parents_[v].size());
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
    for (NodeId v = 0; v < numNodes(); ++v) {
        if (indeg[v] == 0) ready.push(v);
    }
    std::vector<NodeId> order;
    order.reserve(numNodes());
    while (!ready.empty()) {
        NodeId u = ready.top();
        ready.pop();
        order.push_back(u);
        for (NodeId c : children_[u]) {
            if (--indeg[c] == 0) ready.push(c);
        }
    }
    if (static_cast<int>(order.size()) != numNodes()) throw LcdError("graph has a cycle");
    return order;
}

std::vector<std::pair<NodeId, NodeId>> DagGraph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(numEdges_);
    for (NodeId p = 0; p < numNodes(); ++p) {
        for (NodeId c : children_[p]) out.emplace_back(p, c);
    }
    return out;
}

std::vector<UnshieldedCollider> DagGraph::unshieldedColliders() const {
    std::vector<UnshieldedCollider> out;
    for (NodeId r = 0; r < numNodes(); ++r) {
        const auto& pa = parents_[r];
        for (size_t i = 0; i < pa.size(); ++i) {
            for (size_t j = i + 1; j < pa.size(); ++j) {
                if (!adjacent(pa[i], pa[j])) out.emplace_back(pa[i], r, pa[j]);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- PdagGraph

PdagGraph::PdagGraph(std::vector<std::string> names) {
    for (auto& n : names) addNode(n);
}

PdagGraph PdagGraph::complete(std::vector<std::string> names) {
    PdagGraph g(std::move(names));
    for (NodeId a = 0; a < g.numNodes(); ++a) {
        for (NodeId b = a + 1; b < g.numNodes(); ++b) g.addUndirected(a, b);
    }
    return g;
}

PdagGraph PdagGraph::skeletonOf(const DagGraph& g) {
    PdagGraph out(g.names());
    for (auto [p, c] : g.edges()) out.addUndirected(p, c);
    return out;
}

PdagGraph PdagGraph::fromDag(const DagGraph& g) {
    PdagGraph out(g.names());
    for (auto [p, c] : g.edges()) out.addDirected(p, c);
    return out;
}

NodeId PdagGraph::addNode(const std::string& name) {
    for (const auto& n : names_) {
        if (n == name) throw LcdError("duplicate node name: " + name);
    }
    names_.push_back(name);
    for (auto& row : mark_) row.push_back(0);
    mark_.emplace_back(names_.size(), 0);
    return static_cast<NodeId>(names_.size()) - 1;
}

NodeId PdagGraph::indexOf(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<NodeId>(i);
    }
    throw LcdError("unknown node name: " + name);
}

void PdagGraph::checkNode(NodeId v) const {
    if (v < 0 || v >= numNodes()) throw LcdError("node id out of range");
}

void PdagGraph::addUndirected(NodeId a, NodeId b) {
    checkNode(a);
    checkNode(b);
    if (a == b) throw LcdError("self loop");
    if (adjacent(a, b)) throw LcdError("duplicate edge");
    mark_[a][b] = mark_[b][a] = 1;
}

void PdagGraph::addDirected(NodeId from, NodeId to) {
    checkNode(from);
    checkNode(to);
    if (from == to) throw LcdError("self loop");
    if (adjacent(from, to)) throw LcdError("duplicate edge");
    mark_[from][to] = 2;
}

void PdagGraph::removeEdge(NodeId a, NodeId b) {
    checkNode(a);
    checkNode(b);
    mark_[a][b] = mark_[b][a] = 0;
}

bool PdagGraph::orient(NodeId from, NodeId to) {
    checkNode(from);
    checkNode(to);
    if (mark_[from][to] != 1 || mark_[to][from] != 1) return false;
    mark_[from][to] = 2;
    mark_[to][from] = 0;
    return true;
}

bool PdagGraph::adjacent(NodeId a, NodeId b) const {
    checkNode(a);
    checkNode(b);
    return mark_[a][b] != 0 || mark_[b][a] != 0;
}

bool PdagGraph::hasDirected(NodeId from, NodeId to) const {
    checkNode(from);
    checkNode(to);
    return mark_[from][to] == 2;
}

bool PdagGraph::hasUndirected(NodeId a, NodeId b) const {
    checkNode(a);
    checkNode(b);
    return mark_[a][b] == 1;
}

std::vector<NodeId> PdagGraph::neighbors(NodeId v) const {
    checkNode(v);
    std::vector<NodeId> out;
    for (NodeId u = 0; u < numNodes(); ++u) {
        if (u != v && adjacent(v, u)) out.push_back(u);
    }
    return out;
}

std::vector<NodeId> PdagGraph::undirectedNeighbors(NodeId v) const {
    checkNode(v);
    std::vector<NodeId> out;
    for (NodeId u = 0; u < numNodes(); ++u) {
        if (u != v && mark_[v][u] == 1) out.push_back(u);
    }
    return out;
}

std::vector<NodeId> PdagGraph::directedParents(NodeId v) const {
    checkNode(v);
    std::vector<NodeId> out;
    for (NodeId u = 0; u < numNodes(); ++u) {
        if (u != v && mark_[u][v] == 2) out.push_back(u);
    }
    return out;
}

std::vector<NodeId> PdagGraph::directedChildren(NodeId v) const {
    checkNode(v);
    std::vector<NodeId> out;
    for (NodeId u = 0; u < numNodes(); ++u) {
        if (u != v && mark_[v][u] == 2) out.push_back(u);
    }
    return out;
}

int PdagGraph::numEdges() const {
    int n = 0;
    for (NodeId a = 0; a < numNodes(); ++a) {
        for (NodeId b = a + 1; b < numNodes(); ++b) {
            if (adjacent(a, b)) ++n;
        }
    }
    return n;
}

std::vector<std::tuple<NodeId, NodeId, EdgeMark>> PdagGraph::edges() const {
    std::vector<std::tuple<NodeId, NodeId, EdgeMark>> out;
    for (NodeId a = 0; a < numNodes(); ++a) {
        for (NodeId b = 0; b < numNodes(); ++b) {
            if (a == b) continue;
            if (mark_[a][b] == 2) out.emplace_back(a, b, EdgeMark::Directed);
            if (a < b && mark_[a][b] == 1) out.emplace_back(a, b, EdgeMark::Undirected);
        }
    }
    return out;
}

std::vector<UnshieldedCollider> PdagGraph::detectedColliders() const {
    std::vector<UnshieldedCollider> out;
    for (NodeId r = 0; r < numNodes(); ++r) {
        auto pa = directedParents(r);
        for (size_t i = 0; i < pa.size(); ++i) {
            for (size_t j = i + 1; j < pa.size(); ++j) {
                if (!adjacent(pa[i], pa[j])) out.emplace_back(pa[i], r, pa[j]);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool PdagGraph::directedPartAcyclic() const {
    std::vector<int> state(numNodes(), 0);  // 0 new, 1 on stack, 2 done
    std::function<bool(NodeId)> visit = [&](NodeId v) {
        state[v] = 1;
        for (NodeId u = 0; u < numNodes(); ++u) {
            if (u == v || mark_[v][u] != 2) continue;
            if (state[u] == 1) return false;
            if (state[u] == 0 && !visit(u)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (NodeId v = 0; v < numNodes(); ++v) {
        if (state[v] == 0 && !visit(v)) return false;
    }
    return true;
}

bool PdagGraph::fullyDirected() const {
    for (NodeId a = 0; a < numNodes(); ++a) {
        for (NodeId b = a + 1; b < numNodes(); ++b) {
            if (mark_[a][b] == 1) return false;
        }
    }
    return true;
}

DagGraph PdagGraph::toDag() const {
    if (!fullyDirected()) throw LcdError("pdag has undirected edges");
    DagGraph out(names_);
    for (NodeId a = 0; a < numNodes(); ++a) {
        for (NodeId b = 0; b < numNodes(); ++b) {
            if (a != b && mark_[a][b] == 2) out.addEdge(a, b);
        }
    }
    return out;
}

PdagGraph PdagGraph::inducedSubgraph(const NodeSet& keep) const {
    // Keeps node ids/names; drops every edge with an endpoint outside `keep`.
    PdagGraph out(names_);
    for (NodeId a : keep) {
        for (NodeId b : keep) {
            if (a >= b) continue;
            if (mark_[a][b] == 1) out.addUndirected(a, b);
            else if (mark_[a][b] == 2) out.addDirected(a, b);
            else if (mark_[b][a] == 2) out.addDirected(b, a);
        }
    }
    return out;
}

// ------------------------------------------------------------- combinations

bool forEachCombination(const std::vector<NodeId>& pool, int k,
                        const std::function<bool(const std::vector<NodeId>&)>& fn) {
    const int n = static_cast<int>(pool.size());
    if (k < 0 || k > n) return true;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<NodeId> subset(k);
    while (true) {
        for (int i = 0; i < k; ++i) subset[i] = pool[idx[i]];
        if (!fn(subset)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool forEachSubsetBySize(const std::vector<NodeId>& pool, int maxSize,
                         const std::function<bool(const std::vector<NodeId>&)>& fn) {
    const int n = static_cast<int>(pool.size());
    const int cap = std::min(maxSize, n);
    for (int k = 0; k <= cap; ++k) {
        if (!forEachCombination(pool, k, fn)) return false;
    }
    return true;
}

}  // namespace lcd
