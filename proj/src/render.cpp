#include "fa/render.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace fa {

namespace {

std::string dot_label(const Label& label) {
    return label.is_epsilon() ? std::string(style::epsilon_label)
                              : std::string(1, label.symbol().glyph);
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out + "\"";
}

struct NodeStyle {
    bool start = false;
    bool final = false;
    bool highlighted = false;
};

void write_node(std::ostream& os, const std::string& name, const NodeStyle& s) {
    os << "    " << quoted(name) << " [shape=" << (s.final ? "doublecircle" : "circle")
       << ", color=" << (s.start ? style::start_outline : "black")
       << ", penwidth=" << (s.start ? 2 : 1) << ", style=filled, fillcolor="
       << (s.highlighted ? style::highlight_fill : "white")
       << ", fontcolor=" << (s.highlighted ? "white" : "black") << "];\n";
}

struct MergedEdge {
    std::set<Label> labels;
    bool dashed = false;
};

using EdgeMap = std::map<std::pair<std::string, std::string>, MergedEdge>;

void write_edges(std::ostream& os, const EdgeMap& edges) {
    for (const auto& [ends, edge] : edges) {
        std::string label;
        for (const Label& l : edge.labels) {
            if (!label.empty()) {
                label += ", ";
            }
            label += dot_label(l);
        }
        os << "    " << quoted(ends.first) << " -> " << quoted(ends.second)
           << " [label=" << quoted(label) << ", style=" << (edge.dashed ? "dashed" : "solid")
           << ", color=black];\n";
    }
}

void write_header(std::ostream& os, const char* name) {
    os << "digraph " << name << " {\n"
       << "    rankdir=LR;\n";
}

} // namespace

DotDocument machine_to_dot(const Machine& machine) {
    std::ostringstream os;
    write_header(os, "machine");

    std::set<std::string> names;
    for (const StateId& q : machine.states()) {
        names.insert(q.str());
    }
    for (const std::string& name : names) {
        const StateId q(name);
        write_node(os, name, {q == machine.start(), machine.is_final(q), false});
    }

    EdgeMap edges;
    for (const Rule& r : machine.rules()) {
        edges[{r.from.str(), r.to.str()}].labels.insert(r.label);
    }
    write_edges(os, edges);
    os << "}\n";
    return {os.str()};
}

DotDocument cgraph_to_dot(const ComputationGraph& cg) {
    std::ostringstream os;
    write_header(os, "computation_graph");

    std::set<std::string> names{cg.machine.start().str()};
    EdgeMap edges;
    for (const CGEdge& e : cg.edges) {
        names.insert(e.from.str());
        names.insert(e.to.str());
        MergedEdge& merged = edges[{e.from.str(), e.to.str()}];
        merged.labels.insert(e.label);
        merged.dashed = merged.dashed || e.to_dead;
    }
    for (const std::string& name : names) {
        const StateId q(name);
        write_node(os, name,
                   {q == cg.machine.start(), cg.machine.is_final(q), cg.highlighted.contains(q)});
    }
    write_edges(os, edges);
    os << "}\n";
    return {os.str()};
}

std::string cgraph_summary(const ComputationGraph& cg, bool color) {
    const char* reset = color ? "\x1b[0m" : "";
    const char* verdict_color =
        !color ? "" : (cg.verdict == Verdict::Accept ? "\x1b[32m" : "\x1b[31m");
    const char* end_color = color ? "\x1b[1;31m" : "";

    std::ostringstream os;
    os << "verdict: " << verdict_color << to_string(cg.verdict) << reset << "\n";

    os << "end states: ";
    bool first = true;
    for (const StateId& q : cg.highlighted) {
        os << (first ? "" : ", ") << end_color << q.str() << reset;
        first = false;
    }
    os << "\n";

    std::vector<Rule> dead_edges;
    std::size_t machine_edges = 0;
    for (const CGEdge& e : cg.edges) {
        if (e.to_dead) {
            dead_edges.push_back(e.rule());
        } else {
            ++machine_edges;
        }
    }
    std::sort(dead_edges.begin(), dead_edges.end());

    os << "edges: " << machine_edges << "\n";
    os << "dead edges: ";
    if (dead_edges.empty()) {
        os << "none";
    }
    for (std::size_t i = 0; i < dead_edges.size(); ++i) {
        const Rule& r = dead_edges[i];
        os << (i == 0 ? "" : ", ") << r.from.str() << " -" << to_string(r.label) << "-> "
           << r.to.str();
    }
    os << "\n";
    return os.str();
}

} // namespace fa
