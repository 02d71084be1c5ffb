#include "lcd/combined.hpp"

#include <condition_variable>
#include <thread>

namespace lcd {

namespace {

struct AbortRun {};

// Hands CI evaluations from an algorithm thread to the orchestrator one at a
// time. Ticket counters avoid stale-flag races between grant and pickup.
class TurnGate {
public:
    // Algorithm side: called right before every engine evaluation.
    void awaitTurn() {
        std::unique_lock<std::mutex> lock(m_);
        ++requested_;
        cv_.notify_all();
        cv_.wait(lock, [&] { return granted_ >= requested_ || aborted_; });
        if (aborted_) throw AbortRun{};
    }
    void finish() {
        std::lock_guard<std::mutex> lock(m_);
        finished_ = true;
        cv_.notify_all();
    }

    // Orchestrator side.
    enum class Event { Request, Finished };
    Event waitEvent() {
        std::unique_lock<std::mutex> lock(m_);
        cv_.wait(lock, [&] { return requested_ > granted_ || finished_; });
        return requested_ > granted_ ? Event::Request : Event::Finished;
    }
    void grant() {
        std::lock_guard<std::mutex> lock(m_);
        ++granted_;
        cv_.notify_all();
    }
    void abort() {
        std::lock_guard<std::mutex> lock(m_);
        aborted_ = true;
        cv_.notify_all();
    }

private:
    std::mutex m_;
    std::condition_variable cv_;
    long requested_ = 0;
    long granted_ = 0;
    bool finished_ = false;
    bool aborted_ = false;
};

}  // namespace

CombinedRunResult runCombined(const std::function<CiSource()>& srcFactory, NodeId x,
                              bool ldeccCheck) {
    CombinedRunResult res;

    TurnGate gates[2];
    CiSource sources[2] = {srcFactory(), srcFactory()};
    for (int i = 0; i < 2; ++i) {
        sources[i].setEvaluationHook([&gates, i] { gates[i].awaitTurn(); });
    }

    struct Slot {
        LocalStructure local;
        bool capped = false;
        bool aborted = false;
    };
    Slot slots[2];

    std::thread threads[2];
    for (int i = 0; i < 2; ++i) {
        threads[i] = std::thread([&, i] {
            try {
                if (i == 0) {
                    slots[i].local = runSd(sources[i], x, false).local;
                } else {
                    LdeccOptions opts;
                    opts.check = ldeccCheck;
                    slots[i].local = runLdecc(sources[i], x, opts).local;
                }
                slots[i].capped = slots[i].local.capped;
            } catch (const AbortRun&) {
                slots[i].aborted = true;
            }
            gates[i].finish();
        });
    }

    // Strict alternation, SD first. A side that finishes at its cap stops
    // consuming turns but does not win while the other is still running.
    bool done[2] = {false, false};
    int winner = -1;
    int turn = 0;
    while (winner < 0) {
        if (done[0] && done[1]) {
            // Both capped (a clean finish would have decided the winner).
            res.capped = true;
            long p0 = -static_cast<long>(slots[0].local.unoriented.size());
            long p1 = -static_cast<long>(slots[1].local.unoriented.size());
            winner = p1 >= p0 ? 1 : 0;
            break;
        }
        if (done[turn]) {
            turn = 1 - turn;
            continue;
        }
        auto ev = gates[turn].waitEvent();
        if (ev == TurnGate::Event::Finished) {
            done[turn] = true;
            if (slots[turn].capped) continue;  // let the other side keep going
            int other = 1 - turn;
            if (!done[other]) {
                // The other side, being deterministic, either asks for one
                // more evaluation or finishes too; resolve the tie case.
                auto ev2 = gates[other].waitEvent();
                if (ev2 == TurnGate::Event::Finished) done[other] = true;
            }
            if (done[other] && !slots[other].capped) {
                winner = 1;  // tie on the same turn: report LDECC
            } else {
                winner = turn;
            }
            break;
        }
        gates[turn].grant();
        turn = 1 - turn;
    }

    gates[0].abort();
    gates[1].abort();
    threads[0].join();
    threads[1].join();

    res.sdTests = sources[0].testsUsed();
    res.ldeccTests = sources[1].testsUsed();
    res.totalTests = res.sdTests + res.ldeccTests;
    res.winner = winner == 0 ? CombinedWinner::Sd : CombinedWinner::Ldecc;
    res.local = slots[winner].local;
    return res;
}

}  // namespace lcd
