#ifndef FA_COMPGRAPH_HPP
#define FA_COMPGRAPH_HPP

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "fa/core.hpp"
#include "fa/exec.hpp"

namespace fa {

// Computation graphs: a state-level summary of every computation of a
// machine on a word. Nodes are machine states plus a fresh dead state;
// an edge is any transition some computation uses. EMP-free paths that get
// stuck are sent to the dead state so every computation consumes the word.

enum class EdgeKind {
    Regular, ///< the computation continues past this transition
    Special, ///< the input is empty after this transition; its target is an end state
};

struct CGEdge {
    StateId from;
    Label label;
    StateId to;
    EdgeKind kind = EdgeKind::Regular;
    bool to_dead = false;

    Rule rule() const { return Rule{from, label, to}; }

    friend bool operator==(const CGEdge&, const CGEdge&) = default;
};

struct ComputationGraph {
    Machine machine;
    Word word;
    std::vector<CGEdge> edges;
    std::set<StateId> highlighted;
    std::optional<StateId> dead;
    Verdict verdict = Verdict::Reject;
};

/// New edges for one configuration, split on the length of its unconsumed
/// input:
///   empty   Special edges for applicable EMP rules, and nothing else;
///   one     Special edges for rules reading the last symbol, Regular for EMP;
///   longer  Regular edges for every applicable rule.
/// With input left and no reading rule applicable, a Special edge to `dead`
/// labelled with the next symbol comes first.
std::vector<CGEdge> edges_for_configuration(const Machine& machine, const Word& w,
                                            const Configuration& config, const StateId& dead);

/// Configurations of the next tree level reachable over `edges` from
/// `frontier`. A frontier configuration contributes only if one of its
/// successors is not yet in `visited`; contributions are added to `visited`
/// for the rest of the frontier. Dead-state targets are never returned.
std::vector<Configuration> next_configurations(const Word& w, std::span<const CGEdge> edges,
                                               std::span<const Configuration> frontier,
                                               std::vector<Configuration> visited);

/// Level-by-level traversal of the computation tree. The result may repeat
/// edges and may hold the same transition as both Regular and Special.
std::vector<CGEdge> computation_tree_to_cg_edges(const Machine& machine, const Word& w,
                                                 std::vector<Configuration> frontier,
                                                 std::vector<Configuration> visited,
                                                 const StateId& dead);

std::vector<CGEdge> remove_duplicate_edges(std::span<const CGEdge> edges);

/// Drops every Regular edge whose transition is also present as a Special edge.
std::vector<CGEdge> remove_redundant_regular_edges(std::span<const CGEdge> edges);

/// On accept, keeps only the transitions of the accepting trace; the trace's
/// last transition is the single Special edge. On reject, returns `edges`.
std::vector<CGEdge> prune_on_accept(const Machine& machine, const Word& w,
                                    std::span<const CGEdge> edges);

std::vector<CGEdge> make_cg_edges(const Machine& machine, const Word& w);

ComputationGraph build_computation_graph(const Machine& machine, const Word& w);

} // namespace fa

#endif
