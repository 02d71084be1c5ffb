#include "lcd/meek.hpp"

namespace lcd {

namespace {

std::set<int> provOf(const OrientationProvenance* prov, NodeId a, NodeId b) {
    if (!prov) return {};
    auto it = prov->find({a, b});
    return it == prov->end() ? std::set<int>{} : it->second;
}

void mergeProv(OrientationProvenance* prov, NodeId a, NodeId b, const std::set<int>& src) {
    if (!prov) return;
    auto& dst = (*prov)[{a, b}];
    dst.insert(src.begin(), src.end());
}

}  // namespace

PdagGraph applyMeekRules(const PdagGraph& g, OrientationProvenance* prov) {
    PdagGraph out = g;
    const int n = out.numNodes();
    bool changed = true;
    while (changed) {
        changed = false;

        // Rule 1: a -> b, b - c, a and c nonadjacent  =>  b -> c
        for (NodeId b = 0; b < n; ++b) {
            for (NodeId a : out.directedParents(b)) {
                for (NodeId c : out.undirectedNeighbors(b)) {
                    if (c == a || out.adjacent(a, c)) continue;
                    if (out.orient(b, c)) {
                        mergeProv(prov, b, c, provOf(prov, a, b));
                        changed = true;
                    }
                }
            }
        }

        // Rule 2: a -> b -> c, a - c  =>  a -> c
        for (NodeId a = 0; a < n; ++a) {
            for (NodeId c : out.undirectedNeighbors(a)) {
                for (NodeId b : out.directedChildren(a)) {
                    if (b == c || !out.hasDirected(b, c)) continue;
                    if (out.orient(a, c)) {
                        auto p = provOf(prov, a, b);
                        auto q = provOf(prov, b, c);
                        p.insert(q.begin(), q.end());
                        mergeProv(prov, a, c, p);
                        changed = true;
                    }
                    break;
                }
            }
        }

        // Rule 3: a - b, a - c, a - d, c -> b, d -> b, c and d nonadjacent  =>  a -> b
        for (NodeId a = 0; a < n; ++a) {
            auto und = out.undirectedNeighbors(a);
            for (NodeId b : und) {
                auto pa = out.directedParents(b);
                bool done = false;
                for (size_t i = 0; i < pa.size() && !done; ++i) {
                    for (size_t j = i + 1; j < pa.size() && !done; ++j) {
                        NodeId c = pa[i], d = pa[j];
                        if (out.adjacent(c, d)) continue;
                        if (!out.hasUndirected(a, c) || !out.hasUndirected(a, d)) continue;
                        if (out.orient(a, b)) {
                            auto p = provOf(prov, c, b);
                            auto q = provOf(prov, d, b);
                            p.insert(q.begin(), q.end());
                            mergeProv(prov, a, b, p);
                            changed = true;
                            done = true;
                        }
                    }
                }
            }
        }

        // Rule 4: a - b, a - c, c -> d, d -> b, c and b nonadjacent  =>  a -> b
        for (NodeId a = 0; a < n; ++a) {
            auto und = out.undirectedNeighbors(a);
            for (NodeId b : und) {
                bool done = false;
                for (NodeId c : out.undirectedNeighbors(a)) {
                    if (done || c == b || out.adjacent(c, b)) continue;
                    for (NodeId d : out.directedChildren(c)) {
                        if (d == a || d == b) continue;
                        if (!out.hasDirected(d, b)) continue;
                        if (out.orient(a, b)) {
                            auto p = provOf(prov, c, d);
                            auto q = provOf(prov, d, b);
                            p.insert(q.begin(), q.end());
                            mergeProv(prov, a, b, p);
                            changed = true;
                            done = true;
                        }
                        break;
                    }
                }
            }
        }
    }
    return out;
}

CpdagResult getCpdag(const PdagGraph& skeleton, const SepSetMap& sepsets,
                     const CpdagOptions& opts) {
    CpdagResult res;
    res.graph = skeleton;
    const int n = res.graph.numNodes();

    // Collider orientation pass over unshielded triples, canonical order.
    // First orientation wins on conflicting triples.
    for (NodeId c = 0; c < n; ++c) {
        auto ne = res.graph.neighbors(c);
        for (size_t i = 0; i < ne.size(); ++i) {
            for (size_t j = i + 1; j < ne.size(); ++j) {
                NodeId a = ne[i], b = ne[j];
                if (res.graph.adjacent(a, b)) continue;
                const NodeSet* s = sepsets.find(a, b);
                if (!s) {
                    if (opts.strictSepsets) {
                        throw LcdError("no separating set recorded for nonadjacent pair " +
                                       res.graph.name(a) + "," + res.graph.name(b));
                    }
                    continue;
                }
                if (s->count(c)) continue;
                int idx = static_cast<int>(res.colliders.size());
                res.colliders.emplace_back(a, c, b);
                bool oa = res.graph.orient(a, c);
                bool ob = res.graph.orient(b, c);
                if (oa || res.graph.hasDirected(a, c)) res.provenance[{a, c}].insert(idx);
                if (ob || res.graph.hasDirected(b, c)) res.provenance[{b, c}].insert(idx);
            }
        }
    }

    res.graph = applyMeekRules(res.graph, &res.provenance);
    return res;
}

PdagGraph dagToCpdag(const DagGraph& g) {
    PdagGraph p = PdagGraph::skeletonOf(g);
    for (const auto& uc : g.unshieldedColliders()) {
        p.orient(uc.p, uc.r);
        p.orient(uc.q, uc.r);
    }
    return applyMeekRules(p);
}

}  // namespace lcd
