#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "lcd/dataset.hpp"
#include "lcd/graph.hpp"

namespace lcd {

// One conditional independence question, canonical: a < b, neither in s.
struct CiQuery {
    NodeId a;
    NodeId b;
    std::vector<NodeId> s;  // sorted

    CiQuery(NodeId x, NodeId y, NodeSet cond);
    CiQuery(NodeId x, NodeId y, std::vector<NodeId> cond);

    NodeSet condSet() const { return NodeSet(s.begin(), s.end()); }
    bool operator<(const CiQuery& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return s < o.s;
    }
    bool operator==(const CiQuery& o) const { return a == o.a && b == o.b && s == o.s; }
};

struct CiVerdict {
    bool independent = false;
    std::optional<double> statistic;
    std::optional<double> pValue;
};

struct CiCapExceeded : LcdError {
    CiCapExceeded() : LcdError("CI test cap exceeded") {}
};

struct DegenerateTestError : LcdError {
    using LcdError::LcdError;
};

// Fisher-z conditional independence test: partial correlation of (a, b)
// given s from the precision matrix of the correlation submatrix over
// {a, b} u s; statistic sqrt(n - |s| - 3) * |atanh(r)|.
CiVerdict fisherZTest(const Dataset& d, const CiQuery& q, double significance);

struct CiStats {
    long evaluations = 0;    // engine invocations (cache misses when caching)
    long queriesSeen = 0;    // including cache hits
};

// Uniform CI query interface over one of three engines, with caching, test
// counting, an optional test cap, and an optional trace.
class CiSource {
public:
    static CiSource oracle(const DagGraph& truth);
    static CiSource fisherZ(const Dataset& data, double significance);
    // Exact oracle plus exact-match verdict overrides.
    static CiSource scripted(const DagGraph& truth, std::map<CiQuery, bool> overrides);

    CiVerdict query(const CiQuery& q);
    CiVerdict query(NodeId a, NodeId b, const NodeSet& s) { return query(CiQuery(a, b, s)); }
    bool independent(NodeId a, NodeId b, const NodeSet& s) { return query(a, b, s).independent; }

    int numNodes() const;
    const std::vector<std::string>& names() const;

    void setCacheEnabled(bool on) { cacheEnabled_ = on; }
    void setCap(std::optional<long> cap) { cap_ = cap; }
    void setTraceEnabled(bool on) { traceEnabled_ = on; }
    // Runs immediately before every engine evaluation (cache misses only);
    // used by the combined runner to hand out evaluations one at a time.
    void setEvaluationHook(std::function<void()> hook) { hook_ = std::move(hook); }

    long testsUsed() const;
    long queriesSeen() const;
    void resetCounters();
    const std::vector<std::pair<CiQuery, CiVerdict>>& trace() const { return trace_; }

    // True for the exact (unscripted) oracle; discovery runs validate the
    // eager-collider-check contract only in that mode.
    bool isExactOracle() const { return kind_ == Kind::Oracle; }
    const DagGraph* truthGraph() const { return truth_; }

private:
    enum class Kind { Oracle, FisherZ, Scripted };
    CiSource(Kind kind) : kind_(kind), mutex_(std::make_unique<std::mutex>()) {}
    CiVerdict evaluate(const CiQuery& q) const;

    Kind kind_;
    const DagGraph* truth_ = nullptr;
    const Dataset* data_ = nullptr;
    double significance_ = 0.05;
    std::map<CiQuery, bool> overrides_;

    bool cacheEnabled_ = true;
    bool traceEnabled_ = false;
    std::function<void()> hook_;
    std::optional<long> cap_;
    std::unique_ptr<std::mutex> mutex_;
    std::map<CiQuery, CiVerdict> cache_;
    CiStats stats_;
    std::vector<std::pair<CiQuery, CiVerdict>> trace_;
};

}  // namespace lcd
