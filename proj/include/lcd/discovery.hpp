#pragma once

#include <functional>
#include <optional>

#include "lcd/ci.hpp"
#include "lcd/meek.hpp"

namespace lcd {

// Output of a local discovery run around the treatment x.
struct LocalStructure {
    NodeId x = -1;
    NodeSet parents;
    NodeSet children;
    NodeSet unoriented;
    // Pairs (a, b) marked "a - x - b is a non-collider".
    std::set<std::pair<NodeId, NodeId>> nonColliders;
    SepSetMap sepsets;
    long testsUsed = 0;
    bool capped = false;

    void markNonCollider(NodeId a, NodeId b) {
        nonColliders.insert({std::min(a, b), std::max(a, b)});
    }
    bool isNonCollider(NodeId a, NodeId b) const {
        return nonColliders.count({std::min(a, b), std::max(a, b)}) > 0;
    }
    NodeSet neighborhood() const {
        NodeSet out = parents;
        out.insert(children.begin(), children.end());
        out.insert(unoriented.begin(), unoriented.end());
        return out;
    }
};

struct MnsResult {
    std::optional<NodeSet> set;  // subset of Ne(x); empty optional = not found
    bool found() const { return set.has_value(); }
};

// One fired eager collider check: the removal (a ⟂ b | s) whose probe
// a ⟂̸ b | s u {x} came back dependent, and the parents it marked.
struct EccRecord {
    NodeId a;
    NodeId b;
    NodeSet s;
    NodeSet firedParents;
};

// ------------------------------------------------------------- subroutines

// Prunes edges v - b (b in Ne(v)) when v ⟂ b | s for some s within the
// current neighborhood of v, sizes increasing from zero. Mutates skeleton and
// sepsets; returns the remaining neighborhood of v.
NodeSet localPc(CiSource& src, PdagGraph& skeleton, NodeId v, SepSetMap& sepsets);

// Level-wise PC skeleton search. Removal events are streamed to onRemoval in
// deterministic order (levels ascending, ordered pairs canonical within a
// level, conditioning sets from Ne(a) \ {b} lexicographic). Return false from
// the callback to stop. Pairs involving `skip` are never tested.
void pcTestStream(CiSource& src, PdagGraph& skeleton,
                  const std::function<bool(NodeId, NodeId, const NodeSet&)>& onRemoval,
                  std::optional<NodeId> skip = std::nullopt);

// First subset of neX (by size, then lexicographic) separating v from x.
MnsResult getMns(CiSource& src, NodeId x, const NodeSet& neX, NodeId v);

// Parents implied by a fired ECC on (a, b): each endpoint itself when it is a
// neighbor of x, otherwise its minimal neighbor separator. With check=true
// and both endpoints outside Ne(x), the shared MNS is required.
// `beforeMns` runs before each MNS search (faithfulness-tester hook); a false
// return suppresses that search.
NodeSet eccParents(CiSource& src, NodeId x, const NodeSet& neX, NodeId a, NodeId b,
                   bool check, const DagGraph* validateAgainst = nullptr,
                   const std::function<bool(NodeId)>& beforeMns = nullptr);

// Children of x in colliders x -> c <- d with a spouse d: c in
// Ne(x) \ DSep(d, x) dependent on d given DSep(d, x).
NodeSet ucChildren(CiSource& src, NodeId x, const NodeSet& mbX, const NodeSet& neX,
                   const SepSetMap& dsep);

// Parents / children / unoriented neighbors of x as oriented in g.
void nbrs(const PdagGraph& g, NodeId x, NodeSet& parents, NodeSet& children,
          NodeSet& unoriented);

// --------------------------------------------------------------- algorithms

struct PcRunResult {
    PdagGraph cpdag;
    SepSetMap sepsets;
    LocalStructure local;  // view of the CPDAG around x (when x given)
    long testsUsed = 0;
    bool capped = false;
};

// Full PC: skeleton by level-wise tests, then collider orientation and
// Meek's rules. When x >= 0 the result also carries the local view around x.
PcRunResult runPc(CiSource& src, NodeId x = -1);

struct SdRunResult {
    LocalStructure local;
    // Colliders detected in the final orientation pass, plus the parents of x
    // each one's propagation oriented (from the orientation provenance, not
    // the true graph).
    std::vector<UnshieldedCollider> detectedUcs;
    std::map<int, NodeSet> pocParents;  // collider index -> oriented parents
    PdagGraph orientedSubgraph;
};

// Sequential discovery: LocalPC per node outward from x, re-orienting the
// processed subgraph after each step. mbVariant additionally prunes each
// node's candidate set to its IAMB Markov blanket first (MB-by-MB).
SdRunResult runSd(CiSource& src, NodeId x, bool mbVariant = false);

struct LdeccOptions {
    bool check = false;  // ECCParents check mode
    // Validate the ECC contract (endpoints non-descendants, MNS within the
    // true parents) against this graph; exact-oracle runs only.
    const DagGraph* validateAgainst = nullptr;
    // Runs before each MNS search inside an ECC; returning false suppresses
    // the search (used by the MFF-tester integration).
    std::function<bool(NodeId)> beforeMns;
};

struct LdeccRunResult {
    LocalStructure local;
    std::vector<EccRecord> eccs;
    NodeSet mb;
};

LdeccRunResult runLdecc(CiSource& src, NodeId x, const LdeccOptions& opts = {});

}  // namespace lcd
