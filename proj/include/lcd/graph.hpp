#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcd {

using NodeId = int;
using NodeSet = std::set<NodeId>;

struct LcdError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An unshielded collider p -> r <- q with p, q non-adjacent.
// Canonical form keeps p < q. sepSize is min |S| with p ⟂ q | S, or -1 if unset.
struct UnshieldedCollider {
    NodeId p = -1;
    NodeId r = -1;
    NodeId q = -1;
    int sepSize = -1;

    UnshieldedCollider() = default;
    UnshieldedCollider(NodeId a, NodeId center, NodeId b)
        : p(std::min(a, b)), r(center), q(std::max(a, b)) {}

    bool operator==(const UnshieldedCollider& o) const {
        return p == o.p && r == o.r && q == o.q;
    }
    bool operator<(const UnshieldedCollider& o) const {
        if (r != o.r) return r < o.r;
        if (p != o.p) return p < o.p;
        return q < o.q;
    }
};

// Directed acyclic graph over densely indexed, uniquely named nodes.
// Node order is insertion order; all deterministic iteration uses it.
class DagGraph {
public:
    DagGraph() = default;
    explicit DagGraph(std::vector<std::string> names);

    NodeId addNode(const std::string& name);
    void addEdge(NodeId parent, NodeId child);
    void addEdge(const std::string& parent, const std::string& child);

    int numNodes() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(NodeId v) const { return names_.at(v); }
    NodeId indexOf(const std::string& name) const;
    bool hasNode(const std::string& name) const;

    bool hasEdge(NodeId parent, NodeId child) const;
    bool adjacent(NodeId a, NodeId b) const { return hasEdge(a, b) || hasEdge(b, a); }
    int numEdges() const { return numEdges_; }

    const std::vector<NodeId>& parents(NodeId v) const { return parents_.at(v); }
    const std::vector<NodeId>& children(NodeId v) const { return children_.at(v); }
    std::vector<NodeId> neighbors(NodeId v) const;

    NodeSet parentSet(NodeId v) const;
    NodeSet descendants(NodeId v) const;  // excludes v itself
    NodeSet ancestors(NodeId v) const;    // excludes v itself
    NodeSet markovBlanket(NodeId v) const;

    // Deterministic topological order (Kahn, smallest index first).
    std::vector<NodeId> topologicalOrder() const;

    // Edge list in canonical order: sorted by (parent, child).
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    std::vector<UnshieldedCollider> unshieldedColliders() const;

    void checkNode(NodeId v) const;

private:
    void checkAcyclicFrom(NodeId parent, NodeId child) const;

    std::vector<std::string> names_;
    std::vector<std::vector<NodeId>> parents_;
    std::vector<std::vector<NodeId>> children_;
    int numEdges_ = 0;
};

enum class EdgeMark { Undirected, Directed };

// Partially directed graph: at most one edge per unordered pair, each either
// directed or undirected. The directed part must stay acyclic.
class PdagGraph {
public:
    PdagGraph() = default;
    explicit PdagGraph(std::vector<std::string> names);
    static PdagGraph complete(std::vector<std::string> names);
    static PdagGraph skeletonOf(const DagGraph& g);
    static PdagGraph fromDag(const DagGraph& g);

    NodeId addNode(const std::string& name);
    int numNodes() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(NodeId v) const { return names_.at(v); }
    NodeId indexOf(const std::string& name) const;

    void addUndirected(NodeId a, NodeId b);
    void addDirected(NodeId from, NodeId to);
    void removeEdge(NodeId a, NodeId b);
    // Turns an existing edge into from -> to. Returns false if the edge is
    // already directed (either way) or absent.
    bool orient(NodeId from, NodeId to);

    bool adjacent(NodeId a, NodeId b) const;
    bool hasDirected(NodeId from, NodeId to) const;
    bool hasUndirected(NodeId a, NodeId b) const;

    std::vector<NodeId> neighbors(NodeId v) const;           // any edge
    std::vector<NodeId> undirectedNeighbors(NodeId v) const;
    std::vector<NodeId> directedParents(NodeId v) const;
    std::vector<NodeId> directedChildren(NodeId v) const;

    int numEdges() const;
    std::vector<std::tuple<NodeId, NodeId, EdgeMark>> edges() const;

    // Unshielded triples a - c - b (a, b nonadjacent), any marks.
    std::vector<UnshieldedCollider> detectedColliders() const;

    bool directedPartAcyclic() const;
    bool fullyDirected() const;
    // Interprets all edges as directed (requires fullyDirected()).
    DagGraph toDag() const;

    PdagGraph inducedSubgraph(const NodeSet& keep) const;

    void checkNode(NodeId v) const;

private:
    // mark_[a][b]: 0 none, 1 undirected, 2 directed a->b
    std::vector<std::string> names_;
    std::vector<std::vector<uint8_t>> mark_;
};

// Subsets of `pool` enumerated by increasing size, lexicographic within a
// size (pool must be sorted). Calls fn(subset); stops early if fn returns false.
bool forEachSubsetBySize(const std::vector<NodeId>& pool, int maxSize,
                         const std::function<bool(const std::vector<NodeId>&)>& fn);

// Fixed-size combinations in lexicographic order.
bool forEachCombination(const std::vector<NodeId>& pool, int k,
                        const std::function<bool(const std::vector<NodeId>&)>& fn);

}  // namespace lcd
