#include "lcd/discovery.hpp"

#include "lcd/iamb.hpp"

namespace lcd {

void nbrs(const PdagGraph& g, NodeId x, NodeSet& parents, NodeSet& children,
          NodeSet& unoriented) {
    parents.clear();
    children.clear();
    unoriented.clear();
    for (NodeId v : g.neighbors(x)) {
        if (g.hasDirected(v, x)) parents.insert(v);
        else if (g.hasDirected(x, v)) children.insert(v);
        else unoriented.insert(v);
    }
}

namespace {

// Non-collider marks for the local view: unshielded pairs through x whose
// recorded separating set contains x.
void fillNonColliders(const PdagGraph& skeleton, NodeId x, const SepSetMap& sepsets,
                      LocalStructure& ls) {
    auto ne = skeleton.neighbors(x);
    for (size_t i = 0; i < ne.size(); ++i) {
        for (size_t j = i + 1; j < ne.size(); ++j) {
            if (skeleton.adjacent(ne[i], ne[j])) continue;
            const NodeSet* s = sepsets.find(ne[i], ne[j]);
            if (s && s->count(x)) ls.markNonCollider(ne[i], ne[j]);
        }
    }
}

}  // namespace

PcRunResult runPc(CiSource& src, NodeId x) {
    PcRunResult res;
    PdagGraph skeleton = PdagGraph::complete(src.names());
    long before = src.testsUsed();
    try {
        pcTestStream(src, skeleton,
                     [&](NodeId a, NodeId b, const NodeSet& s) {
                         res.sepsets.record(a, b, s);
                         return true;
                     });
        res.cpdag = getCpdag(skeleton, res.sepsets).graph;
    } catch (const CiCapExceeded&) {
        res.capped = true;
        // Orient what the partial skeleton supports.
        res.cpdag = getCpdag(skeleton, res.sepsets, {.strictSepsets = false}).graph;
    }
    res.testsUsed = src.testsUsed() - before;

    if (x >= 0) {
        res.local.x = x;
        nbrs(res.cpdag, x, res.local.parents, res.local.children, res.local.unoriented);
        fillNonColliders(res.cpdag, x, res.sepsets, res.local);
        res.local.sepsets = res.sepsets;
        res.local.testsUsed = res.testsUsed;
        res.local.capped = res.capped;
    }
    return res;
}

SdRunResult runSd(CiSource& src, NodeId x, bool mbVariant) {
    SdRunResult res;
    res.local.x = x;
    const int n = src.numNodes();
    PdagGraph skeleton = PdagGraph::complete(src.names());
    SepSetMap sepsets;
    long before = src.testsUsed();

    std::vector<NodeId> queue{x};
    std::vector<bool> queued(n, false), done(n, false);
    queued[x] = true;
    NodeSet doneSet;

    CpdagResult oriented;
    auto orientDone = [&]() {
        oriented = getCpdag(skeleton.inducedSubgraph(doneSet), sepsets,
                            {.strictSepsets = false});
        nbrs(oriented.graph, x, res.local.parents, res.local.children,
             res.local.unoriented);
        // Unprocessed neighbors of x count as unoriented.
        for (NodeId u : skeleton.neighbors(x)) {
            if (!res.local.parents.count(u) && !res.local.children.count(u)) {
                res.local.unoriented.insert(u);
            }
        }
    };

    try {
        while (!queue.empty()) {
            NodeId v = queue.front();
            queue.erase(queue.begin());

            if (mbVariant) {
                // Prune v's candidate edges to its Markov blanket before the
                // local skeleton search; the blanket separates v from the rest.
                NodeSet mb = findMarkovBlanket(src, v);
                for (NodeId u : skeleton.neighbors(v)) {
                    if (!mb.count(u)) {
                        skeleton.removeEdge(v, u);
                        if (!sepsets.contains(v, u)) sepsets.record(v, u, mb);
                    }
                }
            }

            localPc(src, skeleton, v, sepsets);
            done[v] = true;
            doneSet.insert(v);
            for (NodeId u : skeleton.neighbors(v)) {
                if (!done[u] && !queued[u]) {
                    queued[u] = true;
                    queue.push_back(u);
                }
            }
            orientDone();
            if (res.local.unoriented.empty()) break;
        }
    } catch (const CiCapExceeded&) {
        res.local.capped = true;
        orientDone();
    }

    res.local.testsUsed = src.testsUsed() - before;
    res.local.sepsets = sepsets;
    // Non-collider marks from the final working skeleton.
    {
        auto ne = skeleton.neighbors(x);
        for (size_t i = 0; i < ne.size(); ++i) {
            for (size_t j = i + 1; j < ne.size(); ++j) {
                if (skeleton.adjacent(ne[i], ne[j])) continue;
                const NodeSet* s = sepsets.find(ne[i], ne[j]);
                if (s && s->count(x)) res.local.markNonCollider(ne[i], ne[j]);
            }
        }
    }

    res.detectedUcs = oriented.colliders;
    res.orientedSubgraph = oriented.graph;
    for (NodeId p : res.local.parents) {
        auto it = oriented.provenance.find({p, x});
        if (it == oriented.provenance.end()) continue;
        for (int idx : it->second) res.pocParents[idx].insert(p);
    }
    return res;
}

}  // namespace lcd
