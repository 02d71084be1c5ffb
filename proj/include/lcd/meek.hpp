#pragma once

#include <map>
#include <optional>

#include "lcd/graph.hpp"

namespace lcd {

// Map from unordered node pair to the separating set recorded when the edge
// was removed.
class SepSetMap {
public:
    void record(NodeId a, NodeId b, NodeSet s) {
        map_[key(a, b)] = std::move(s);
    }
    bool contains(NodeId a, NodeId b) const { return map_.count(key(a, b)) > 0; }
    const NodeSet& at(NodeId a, NodeId b) const {
        auto it = map_.find(key(a, b));
        if (it == map_.end()) throw LcdError("missing separating set entry");
        return it->second;
    }
    const NodeSet* find(NodeId a, NodeId b) const {
        auto it = map_.find(key(a, b));
        return it == map_.end() ? nullptr : &it->second;
    }
    size_t size() const { return map_.size(); }
    const std::map<std::pair<NodeId, NodeId>, NodeSet>& entries() const { return map_; }

private:
    static std::pair<NodeId, NodeId> key(NodeId a, NodeId b) {
        return {std::min(a, b), std::max(a, b)};
    }
    std::map<std::pair<NodeId, NodeId>, NodeSet> map_;
};

// Which source colliders each directed edge's orientation traces back to.
// Keyed by (from, to); values are indices into the collider list that seeded
// the orientation pass.
using OrientationProvenance = std::map<std::pair<NodeId, NodeId>, std::set<int>>;

// Closes g under Meek's four orientation rules. Only undirected edges become
// directed; idempotent. When `provenance` is given it must already hold the
// seed attribution for every directed edge in g; propagated edges accumulate
// the union of the premises' attributions.
PdagGraph applyMeekRules(const PdagGraph& g, OrientationProvenance* provenance = nullptr);

struct CpdagOptions {
    // error out when an unshielded triple has no recorded separating set;
    // lenient mode skips such triples (used on partially tested skeletons).
    bool strictSepsets = true;
};

struct CpdagResult {
    PdagGraph graph;
    std::vector<UnshieldedCollider> colliders;  // oriented seed colliders
    OrientationProvenance provenance;           // directed edge -> collider indices
};

// Orients every unshielded triple a - c - b with c outside the recorded
// separating set of (a, b) as a -> c <- b, then applies Meek's rules.
CpdagResult getCpdag(const PdagGraph& skeleton, const SepSetMap& sepsets,
                     const CpdagOptions& opts = {});

// CPDAG of the MEC containing g: skeleton + colliders of g + Meek closure.
PdagGraph dagToCpdag(const DagGraph& g);

}  // namespace lcd
