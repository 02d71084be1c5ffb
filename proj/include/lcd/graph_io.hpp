#pragma once

#include <string>

#include "lcd/ci.hpp"
#include "lcd/sem.hpp"

namespace lcd {

// Shared graph JSON:
//   {"nodes":["A",...], "edges":[{"from":"A","to":"W","weight":0.5}],
//    "noise_var":{"A":0.15,...}}
// weight/noise_var are optional for structure-only use.
SemModel parseGraphJson(const std::string& text);
std::string graphToJson(const SemModel& model, int indent = 2);

// Plain text edge list, one edge per line: "A -> W 0.5" (weight optional).
// Nodes appear in first-mention order.
SemModel parseEdgeList(const std::string& text);

SemModel loadGraphFile(const std::string& path);
void saveGraphFile(const SemModel& model, const std::string& path);

// Scripted-engine override file: JSON list of
//   {"a":"W","b":"D","s":["M"],"independent":true}
std::map<CiQuery, bool> parseOverrides(const std::string& text, const DagGraph& g);
std::map<CiQuery, bool> loadOverrides(const std::string& path, const DagGraph& g);

}  // namespace lcd
