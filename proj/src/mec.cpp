#include "lcd/mec.hpp"

#include "lcd/meek.hpp"

namespace lcd {

namespace {

// A collider in `candidate` is new if it is not a collider of the input pdag.
bool sameColliders(const PdagGraph& candidate, const std::vector<UnshieldedCollider>& want) {
    auto got = candidate.detectedColliders();
    if (got.size() != want.size()) return false;
    for (size_t i = 0; i < got.size(); ++i) {
        if (!(got[i] == want[i])) return false;
    }
    return true;
}

}  // namespace

std::vector<DagGraph> enumerateMec(const PdagGraph& cpdag, int maxNodes) {
    if (cpdag.numNodes() > maxNodes) {
        throw LcdError("enumerateMec: graph exceeds the node guard");
    }

    std::vector<std::pair<NodeId, NodeId>> undirected;
    for (auto [a, b, mark] : cpdag.edges()) {
        if (mark == EdgeMark::Undirected) undirected.emplace_back(a, b);
    }

    const auto wantColliders = cpdag.detectedColliders();

    std::vector<DagGraph> out;
    std::function<void(PdagGraph&, size_t)> rec = [&](PdagGraph& g, size_t i) {
        if (i == undirected.size()) {
            if (!g.directedPartAcyclic()) return;
            if (!sameColliders(g, wantColliders)) return;
            out.push_back(g.toDag());
            return;
        }
        auto [a, b] = undirected[i];
        for (int dir = 0; dir < 2; ++dir) {
            NodeId from = dir == 0 ? a : b;
            NodeId to = dir == 0 ? b : a;
            PdagGraph next = g;
            next.orient(from, to);
            if (!next.directedPartAcyclic()) continue;
            rec(next, i + 1);
        }
    };

    PdagGraph start = cpdag;
    rec(start, 0);
    if (out.empty()) throw LcdError("enumerateMec: no consistent extension");
    return out;
}

}  // namespace lcd
