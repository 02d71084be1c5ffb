#pragma once

#include <Eigen/Dense>
#include <map>

#include "lcd/graph.hpp"

namespace lcd {

// Linear Gaussian structural equation model: v := b_V^T pa(v) + eps_V with
// eps_V ~ N(0, sigma2_V). Weight/noise maps may be empty for structure-only
// graphs.
struct SemModel {
    DagGraph graph;
    std::map<std::pair<NodeId, NodeId>, double> weights;  // (parent, child)
    std::map<NodeId, double> noiseVar;

    bool hasParameters() const {
        return static_cast<int>(noiseVar.size()) == graph.numNodes() &&
               weights.size() == static_cast<size_t>(graph.numEdges());
    }

    double weight(NodeId parent, NodeId child) const {
        auto it = weights.find({parent, child});
        if (it == weights.end()) throw LcdError("missing edge weight");
        return it->second;
    }

    // Weighted adjacency with B(parent, child) = weight, zero elsewhere.
    Eigen::MatrixXd weightMatrix() const {
        const int n = graph.numNodes();
        Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
        for (auto& [key, w] : weights) b(key.first, key.second) = w;
        return b;
    }

    // Implied covariance (I - B)^-T D (I - B)^-1 aligned to node order.
    Eigen::MatrixXd impliedCovariance() const {
        if (!hasParameters()) throw LcdError("SEM parameters incomplete");
        const int n = graph.numNodes();
        Eigen::MatrixXd b = weightMatrix();
        Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
        for (auto& [v, s2] : noiseVar) d(v, v) = s2;
        Eigen::MatrixXd m = (Eigen::MatrixXd::Identity(n, n) - b).inverse();
        return m.transpose() * d * m;
    }
};

}  // namespace lcd
