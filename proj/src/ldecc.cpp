#include "lcd/discovery.hpp"

#include "lcd/dsep.hpp"
#include "lcd/iamb.hpp"

namespace lcd {

MnsResult getMns(CiSource& src, NodeId x, const NodeSet& neX, NodeId v) {
    if (v == x || neX.count(v)) throw LcdError("getMns: node is in Ne+(x)");
    std::vector<NodeId> pool(neX.begin(), neX.end());
    MnsResult res;
    forEachSubsetBySize(pool, static_cast<int>(pool.size()),
                        [&](const std::vector<NodeId>& s) {
                            if (src.independent(v, x, NodeSet(s.begin(), s.end()))) {
                                res.set = NodeSet(s.begin(), s.end());
                                return false;
                            }
                            return true;
                        });
    return res;
}

NodeSet eccParents(CiSource& src, NodeId x, const NodeSet& neX, NodeId a, NodeId b,
                   bool check, const DagGraph* validateAgainst,
                   const std::function<bool(NodeId)>& beforeMns) {
    auto mnsOf = [&](NodeId v) -> MnsResult {
        if (beforeMns && !beforeMns(v)) return MnsResult{};
        MnsResult m = getMns(src, x, neX, v);
        if (validateAgainst) {
            // ECC contract on the exact oracle: both endpoints outside
            // Desc(x), MNS defined and inside Pa(x).
            if (validateAgainst->descendants(x).count(v)) {
                throw LcdError("ECC fired for a descendant of x");
            }
            if (!m.found()) throw LcdError("ECC endpoint has no minimal neighbor separator");
            for (NodeId p : *m.set) {
                if (!validateAgainst->hasEdge(p, x)) {
                    throw LcdError("MNS member is not a parent of x");
                }
            }
        }
        return m;
    };

    if (check && !neX.count(a) && !neX.count(b)) {
        MnsResult ma = mnsOf(a);
        MnsResult mb = mnsOf(b);
        if (ma.found() && mb.found() && *ma.set == *mb.set) return *ma.set;
        return {};
    }

    NodeSet parents;
    for (NodeId v : {a, b}) {
        if (neX.count(v)) {
            parents.insert(v);
        } else {
            MnsResult m = mnsOf(v);
            if (m.found()) parents.insert(m.set->begin(), m.set->end());
        }
    }
    return parents;
}

NodeSet ucChildren(CiSource& src, NodeId x, const NodeSet& mbX, const NodeSet& neX,
                   const SepSetMap& dsep) {
    NodeSet children;
    for (NodeId d : mbX) {
        if (neX.count(d)) continue;  // spouses only
        const NodeSet* s = dsep.find(d, x);
        if (!s) throw LcdError("ucChildren: missing separating set for spouse");
        for (NodeId c : neX) {
            if (s->count(c)) continue;
            if (!src.independent(c, d, *s)) children.insert(c);
        }
    }
    return children;
}

LdeccRunResult runLdecc(CiSource& src, NodeId x, const LdeccOptions& opts) {
    LdeccRunResult res;
    LocalStructure& ls = res.local;
    ls.x = x;
    long before = src.testsUsed();

    try {
        res.mb = findMarkovBlanket(src, x);

        // LocalPC within MB+(x) to prune the blanket down to Ne(x).
        PdagGraph mbSkeleton(src.names());
        {
            std::vector<NodeId> mbp(res.mb.begin(), res.mb.end());
            mbp.push_back(x);
            std::sort(mbp.begin(), mbp.end());
            for (size_t i = 0; i < mbp.size(); ++i) {
                for (size_t j = i + 1; j < mbp.size(); ++j) {
                    mbSkeleton.addUndirected(mbp[i], mbp[j]);
                }
            }
        }
        NodeSet neX = localPc(src, mbSkeleton, x, ls.sepsets);

        ls.children = ucChildren(src, x, res.mb, neX, ls.sepsets);
        ls.unoriented = neX;
        for (NodeId c : ls.children) ls.unoriented.erase(c);

        if (!ls.unoriented.empty()) {
            PdagGraph working = PdagGraph::complete(src.names());
            auto onRemoval = [&](NodeId a, NodeId b, const NodeSet& s) {
                ls.sepsets.record(a, b, s);
                const bool aNe = neX.count(a) > 0;
                const bool bNe = neX.count(b) > 0;
                const bool xInS = s.count(x) > 0;
                if (aNe && bNe && !xInS) {
                    // Unshielded collider at x.
                    ls.parents.insert(a);
                    ls.parents.insert(b);
                    for (NodeId v : s) {
                        if (neX.count(v)) ls.parents.insert(v);
                    }
                } else if (aNe && bNe && xInS) {
                    ls.markNonCollider(a, b);
                    for (NodeId v : neX) {
                        if (v == a || v == b || s.count(v)) continue;
                        NodeSet probe = s;
                        probe.insert(v);
                        if (!src.independent(a, b, probe)) ls.children.insert(v);
                    }
                } else if (!xInS) {
                    // Eager collider check.
                    NodeSet probe = s;
                    probe.insert(x);
                    if (!src.independent(a, b, probe)) {
                        NodeSet fired = eccParents(src, x, neX, a, b, opts.check,
                                                   opts.validateAgainst, opts.beforeMns);
                        ls.parents.insert(fired.begin(), fired.end());
                        res.eccs.push_back({a, b, s, fired});
                    }
                }
                for (NodeId p : ls.parents) {
                    for (NodeId c : ls.unoriented) {
                        if (c != p && ls.isNonCollider(p, c)) ls.children.insert(c);
                    }
                }
                ls.unoriented = neX;
                for (NodeId v : ls.parents) ls.unoriented.erase(v);
                for (NodeId v : ls.children) ls.unoriented.erase(v);
                return !ls.unoriented.empty();
            };
            pcTestStream(src, working, onRemoval, x);
        }
    } catch (const CiCapExceeded&) {
        ls.capped = true;
    }

    ls.testsUsed = src.testsUsed() - before;
    return res;
}

}  // namespace lcd
