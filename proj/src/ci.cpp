#include "lcd/ci.hpp"

#include <cmath>

#include "lcd/dsep.hpp"

namespace lcd {

namespace {
constexpr double kCorrClamp = 1.0 - 1e-12;
}

CiQuery::CiQuery(NodeId x, NodeId y, NodeSet cond)
    : CiQuery(x, y, std::vector<NodeId>(cond.begin(), cond.end())) {}

CiQuery::CiQuery(NodeId x, NodeId y, std::vector<NodeId> cond)
    : a(std::min(x, y)), b(std::max(x, y)), s(std::move(cond)) {
    if (x == y) throw LcdError("CiQuery: endpoints must differ");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (NodeId v : s) {
        if (v == a || v == b) throw LcdError("CiQuery: endpoint inside conditioning set");
    }
}

CiVerdict fisherZTest(const Dataset& d, const CiQuery& q, double significance) {
    if (significance <= 0.0 || significance >= 1.0) {
        throw LcdError("fisherZTest: significance must lie in (0, 1)");
    }
    const int n = d.numRows();
    const int k = static_cast<int>(q.s.size());
    if (n - k - 3 < 1) {
        throw DegenerateTestError("fisherZTest: insufficient samples for |S| = " +
                                  std::to_string(k));
    }

    std::vector<int> idx{q.a, q.b};
    idx.insert(idx.end(), q.s.begin(), q.s.end());
    const int m = static_cast<int>(idx.size());
    const Eigen::MatrixXd& corr = d.sampleCorrelation();
    Eigen::MatrixXd sub(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) sub(i, j) = corr(idx[i], idx[j]);
    }

    Eigen::FullPivLU<Eigen::MatrixXd> lu(sub);
    if (!lu.isInvertible()) {
        std::string cols;
        for (int i : idx) cols += (cols.empty() ? "" : ",") + d.columnNames()[i];
        throw LcdError("fisherZTest: singular correlation submatrix over {" + cols + "}");
    }
    Eigen::MatrixXd prec = lu.inverse();
    double r = -prec(0, 1) / std::sqrt(prec(0, 0) * prec(1, 1));
    r = std::clamp(r, -kCorrClamp, kCorrClamp);

    double z = 0.5 * std::log((1.0 + r) / (1.0 - r));
    double stat = std::sqrt(static_cast<double>(n - k - 3)) * std::abs(z);
    double p = std::erfc(stat / std::sqrt(2.0));

    CiVerdict v;
    v.statistic = stat;
    v.pValue = p;
    v.independent = p >= significance;  // stat <= two-sided critical value
    return v;
}

CiSource CiSource::oracle(const DagGraph& truth) {
    CiSource src(Kind::Oracle);
    src.truth_ = &truth;
    return src;
}

CiSource CiSource::fisherZ(const Dataset& data, double significance) {
    if (significance <= 0.0 || significance >= 1.0) {
        throw LcdError("CiSource: significance must lie in (0, 1)");
    }
    CiSource src(Kind::FisherZ);
    src.data_ = &data;
    src.significance_ = significance;
    return src;
}

CiSource CiSource::scripted(const DagGraph& truth, std::map<CiQuery, bool> overrides) {
    CiSource src(Kind::Scripted);
    src.truth_ = &truth;
    src.overrides_ = std::move(overrides);
    return src;
}

int CiSource::numNodes() const {
    return truth_ ? truth_->numNodes() : data_->numCols();
}

const std::vector<std::string>& CiSource::names() const {
    return truth_ ? truth_->names() : data_->columnNames();
}

CiVerdict CiSource::evaluate(const CiQuery& q) const {
    switch (kind_) {
        case Kind::Oracle: {
            CiVerdict v;
            v.independent = dSeparated(*truth_, q.a, q.b, q.condSet());
            return v;
        }
        case Kind::FisherZ:
            return fisherZTest(*data_, q, significance_);
        case Kind::Scripted: {
            auto it = overrides_.find(q);
            CiVerdict v;
            if (it != overrides_.end()) {
                v.independent = it->second;
            } else {
                v.independent = dSeparated(*truth_, q.a, q.b, q.condSet());
            }
            return v;
        }
    }
    throw LcdError("unreachable");
}

CiVerdict CiSource::query(const CiQuery& q) {
    std::lock_guard<std::mutex> lock(*mutex_);
    ++stats_.queriesSeen;
    if (cacheEnabled_) {
        auto it = cache_.find(q);
        if (it != cache_.end()) return it->second;
    }
    if (cap_ && stats_.evaluations >= *cap_) throw CiCapExceeded();
    if (hook_) hook_();
    CiVerdict v = evaluate(q);
    ++stats_.evaluations;
    if (cacheEnabled_) cache_.emplace(q, v);
    if (traceEnabled_) trace_.emplace_back(q, v);
    return v;
}

long CiSource::testsUsed() const {
    std::lock_guard<std::mutex> lock(*mutex_);
    return stats_.evaluations;
}

long CiSource::queriesSeen() const {
    std::lock_guard<std::mutex> lock(*mutex_);
    return stats_.queriesSeen;
}

void CiSource::resetCounters() {
    std::lock_guard<std::mutex> lock(*mutex_);
    stats_ = CiStats{};
    cache_.clear();
    trace_.clear();
}

}  // namespace lcd
