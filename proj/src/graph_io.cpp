#include "lcd/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lcd {

using nlohmann::json;

SemModel parseGraphJson(const std::string& text) {
    json j = json::parse(text);
    SemModel model;
    if (!j.contains("nodes") || !j["nodes"].is_array()) {
        throw LcdError("graph json: missing nodes array");
    }
    for (const auto& n : j["nodes"]) model.graph.addNode(n.get<std::string>());
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            NodeId from = model.graph.indexOf(e.at("from").get<std::string>());
            NodeId to = model.graph.indexOf(e.at("to").get<std::string>());
            model.graph.addEdge(from, to);
            if (e.contains("weight")) {
                model.weights[{from, to}] = e["weight"].get<double>();
            }
        }
    }
    if (j.contains("noise_var")) {
        for (auto& [name, v] : j["noise_var"].items()) {
            model.noiseVar[model.graph.indexOf(name)] = v.get<double>();
        }
    }
    return model;
}

std::string graphToJson(const SemModel& model, int indent) {
    json j;
    j["nodes"] = model.graph.names();
    j["edges"] = json::array();
    for (auto [p, c] : model.graph.edges()) {
        json e;
        e["from"] = model.graph.name(p);
        e["to"] = model.graph.name(c);
        auto it = model.weights.find({p, c});
        if (it != model.weights.end()) e["weight"] = it->second;
        j["edges"].push_back(e);
    }
    if (!model.noiseVar.empty()) {
        json nv = json::object();
        for (auto& [v, s2] : model.noiseVar) nv[model.graph.name(v)] = s2;
        j["noise_var"] = nv;
    }
    return j.dump(indent) + "\n";
}

SemModel parseEdgeList(const std::string& text) {
    SemModel model;
    auto nodeOf = [&](const std::string& name) {
        if (model.graph.hasNode(name)) return model.graph.indexOf(name);
        return model.graph.addNode(name);
    };
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string from, arrow, to;
        if (!(ls >> from)) continue;  // blank line
        if (from[0] == '#') continue;
        if (!(ls >> arrow >> to) || arrow != "->") {
            throw LcdError("edge list: expected 'A -> B [weight]': " + line);
        }
        NodeId f = nodeOf(from);
        NodeId t = nodeOf(to);
        model.graph.addEdge(f, t);
        double w;
        if (ls >> w) model.weights[{f, t}] = w;
    }
    return model;
}

SemModel loadGraphFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LcdError("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto firstNonSpace = text.find_first_not_of(" \t\r\n");
    if (firstNonSpace != std::string::npos && text[firstNonSpace] == '{') {
        return parseGraphJson(text);
    }
    return parseEdgeList(text);
}

void saveGraphFile(const SemModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw LcdError("cannot write graph file: " + path);
    out << graphToJson(model);
}

std::map<CiQuery, bool> parseOverrides(const std::string& text, const DagGraph& g) {
    json j = json::parse(text);
    if (!j.is_array()) throw LcdError("overrides: expected a json array");
    std::map<CiQuery, bool> out;
    for (const auto& e : j) {
        NodeId a = g.indexOf(e.at("a").get<std::string>());
        NodeId b = g.indexOf(e.at("b").get<std::string>());
        NodeSet s;
        for (const auto& n : e.at("s")) s.insert(g.indexOf(n.get<std::string>()));
        out[CiQuery(a, b, s)] = e.at("independent").get<bool>();
    }
    return out;
}

std::map<CiQuery, bool> loadOverrides(const std::string& path, const DagGraph& g) {
    std::ifstream in(path);
    if (!in) throw LcdError("cannot open overrides file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parseOverrides(buf.str(), g);
}

}  // namespace lcd
