#pragma once

#include "lcd/discovery.hpp"

namespace lcd {

enum class CombinedWinner { Sd, Ldecc };

struct CombinedRunResult {
    LocalStructure local;          // the winner's structure
    CombinedWinner winner = CombinedWinner::Ldecc;
    long totalTests = 0;           // evaluations across both sources
    long sdTests = 0;
    long ldeccTests = 0;
    bool capped = false;           // both runs capped
};

// Runs SD and LDECC cooperatively, answering one CI query per turn in strict
// alternation (SD first), and stops when either finishes. A finished run that
// hit its cap does not win unless the other caps too, in which case the
// further-progressed partial result is reported. Ties go to LDECC.
//
// The factory must yield two independent counting sources over the same
// distribution; any per-source caps apply individually.
CombinedRunResult runCombined(const std::function<CiSource()>& srcFactory, NodeId x,
                              bool ldeccCheck = false);

}  // namespace lcd
