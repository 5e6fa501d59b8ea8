#include "fa/compgraph.hpp"

#include <algorithm>
#include <tuple>

namespace fa {

namespace {

auto edge_key(const CGEdge& e) {
    return std::tie(e.from, e.label, e.to, e.kind, e.to_dead);
}

struct EdgeLess {
    bool operator()(const CGEdge& a, const CGEdge& b) const { return edge_key(a) < edge_key(b); }
};

CGEdge edge_from(const Rule& r, EdgeKind kind) {
    return CGEdge{r.from, r.label, r.to, kind, false};
}

} // namespace

std::vector<CGEdge> edges_for_configuration(const Machine& machine, const Word& w,
                                            const Configuration& config, const StateId& dead) {
    const std::size_t left = remaining(w, config);
    std::vector<CGEdge> out;

    if (left == 0) {
        for (const Rule& r : machine.rules()) {
            if (r.from == config.state && r.label.is_epsilon()) {
                out.push_back(edge_from(r, EdgeKind::Special));
            }
        }
        return out;
    }

    const Symbol head = w[config.offset];
    auto reads_head = [&](const Rule& r) {
        return r.from == config.state && !r.label.is_epsilon() && r.label.symbol() == head;
    };
    auto moves_free = [&](const Rule& r) {
        return r.from == config.state && r.label.is_epsilon();
    };

    if (left == 1) {
        for (const Rule& r : machine.rules()) {
            if (reads_head(r)) {
                out.push_back(edge_from(r, EdgeKind::Special));
            }
        }
        for (const Rule& r : machine.rules()) {
            if (moves_free(r)) {
                out.push_back(edge_from(r, EdgeKind::Regular));
            }
        }
    } else {
        for (const Rule& r : machine.rules()) {
            if (reads_head(r) || moves_free(r)) {
                out.push_back(edge_from(r, EdgeKind::Regular));
            }
        }
    }

    const bool only_free = std::all_of(out.begin(), out.end(),
                                       [](const CGEdge& e) { return e.label.is_epsilon(); });
    if (only_free) {
        out.insert(out.begin(),
                   CGEdge{config.state, Label::read(head), dead, EdgeKind::Special, true});
    }
    return out;
}

std::vector<Configuration> next_configurations(const Word& w, std::span<const CGEdge> edges,
                                               std::span<const Configuration> frontier,
                                               std::vector<Configuration> visited) {
    std::set<Configuration> seen(visited.begin(), visited.end());
    std::vector<Configuration> out;

    for (const Configuration& c : frontier) {
        const bool consumed = remaining(w, c) == 0;
        std::vector<Configuration> successors;
        for (const CGEdge& e : edges) {
            if (e.to_dead || e.from != c.state) {
                continue;
            }
            if (e.label.is_epsilon()) {
                successors.push_back({e.to, c.offset});
            } else if (!consumed && e.label.symbol() == w[c.offset]) {
                successors.push_back({e.to, c.offset + 1});
            }
        }
        const bool all_seen = std::all_of(successors.begin(), successors.end(),
                                          [&](const Configuration& s) { return seen.contains(s); });
        if (successors.empty() || all_seen) {
            continue;
        }
        for (const Configuration& s : successors) {
            visited.push_back(s);
            seen.insert(s);
        }
        out.insert(out.end(), successors.begin(), successors.end());
    }
    return out;
}

std::vector<CGEdge> remove_duplicate_edges(std::span<const CGEdge> edges) {
    std::set<CGEdge, EdgeLess> seen;
    std::vector<CGEdge> out;
    for (const CGEdge& e : edges) {
        if (seen.insert(e).second) {
            out.push_back(e);
        }
    }
    return out;
}

std::vector<CGEdge> computation_tree_to_cg_edges(const Machine& machine, const Word& w,
                                                 std::vector<Configuration> frontier,
                                                 std::vector<Configuration> visited,
                                                 const StateId& dead) {
    std::vector<CGEdge> result;
    while (!frontier.empty()) {
        std::vector<CGEdge> level;
        for (const Configuration& c : frontier) {
            auto edges = edges_for_configuration(machine, w, c, dead);
            level.insert(level.end(), edges.begin(), edges.end());
        }
        level = remove_duplicate_edges(level);

        auto next = next_configurations(w, level, frontier, visited);
        result.insert(result.end(), level.begin(), level.end());

        visited.insert(visited.begin(), frontier.begin(), frontier.end());
        frontier = std::move(next);
    }
    return result;
}

std::vector<CGEdge> remove_redundant_regular_edges(std::span<const CGEdge> edges) {
    std::set<Rule> special;
    for (const CGEdge& e : edges) {
        if (e.kind == EdgeKind::Special) {
            special.insert(e.rule());
        }
    }
    std::vector<CGEdge> out;
    for (const CGEdge& e : edges) {
        if (e.kind == EdgeKind::Regular && special.contains(e.rule())) {
            continue;
        }
        out.push_back(e);
    }
    return out;
}

std::vector<CGEdge> prune_on_accept(const Machine& machine, const Word& w,
                                    std::span<const CGEdge> edges) {
    if (fa::apply(machine, w) == Verdict::Reject) {
        return {edges.begin(), edges.end()};
    }
    const auto trace = show_transitions(machine, w);
    const auto used = trace_rules(*trace);
    if (used.empty()) {
        return {};
    }
    const std::set<Rule> on_path(used.begin(), used.end());
    const Rule& last = used.back();

    std::vector<CGEdge> out;
    for (const CGEdge& e : edges) {
        if (e.to_dead || !on_path.contains(e.rule())) {
            continue;
        }
        CGEdge kept = e;
        kept.kind = e.rule() == last ? EdgeKind::Special : EdgeKind::Regular;
        out.push_back(std::move(kept));
    }
    return out;
}

std::vector<CGEdge> make_cg_edges(const Machine& machine, const Word& w) {
    check_word(machine, w);
    const StateId dead = fresh_dead_state(machine);
    auto edges = computation_tree_to_cg_edges(machine, w, {Configuration{machine.start(), 0}},
                                              {}, dead);
    edges = remove_duplicate_edges(edges);
    edges = remove_redundant_regular_edges(edges);
    return prune_on_accept(machine, w, edges);
}

ComputationGraph build_computation_graph(const Machine& machine, const Word& w) {
    ComputationGraph cg{machine, w, make_cg_edges(machine, w), {}, std::nullopt,
                        fa::apply(machine, w)};
    for (const CGEdge& e : cg.edges) {
        if (e.kind == EdgeKind::Special) {
            cg.highlighted.insert(e.to);
        }
        if (e.to_dead) {
            cg.dead = e.to;
        }
    }
    if (w.empty()) {
        cg.highlighted.insert(machine.start());
    }
    return cg;
}

} // namespace fa
