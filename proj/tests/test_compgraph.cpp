#include <catch2/catch_amalgamated.hpp>

#include <chrono>

#include "fa/compgraph.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/random_machines.hpp"

using namespace fa;
using fa::testing::machine_m;

namespace {

CGEdge regular(StateId from, Label label, StateId to) {
    return {std::move(from), label, std::move(to), EdgeKind::Regular, false};
}
CGEdge special(StateId from, Label label, StateId to) {
    return {std::move(from), label, std::move(to), EdgeKind::Special, false};
}
CGEdge dead_edge(StateId from, char symbol, StateId dead = "ds") {
    return {std::move(from), read(symbol), std::move(dead), EdgeKind::Special, true};
}

std::set<Rule> triples(const std::vector<CGEdge>& edges, bool with_dead = false) {
    std::set<Rule> out;
    for (const CGEdge& e : edges) {
        if (with_dead || !e.to_dead) {
            out.insert(e.rule());
        }
    }
    return out;
}

bool contains(const std::vector<CGEdge>& edges, const CGEdge& e) {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

} // namespace

TEST_CASE("edges_for_configuration: longer input gives regular edges", "[compgraph]") {
    const auto edges = edges_for_configuration(machine_m(), word("abb"), {"C", 0}, "ds");
    CHECK(edges == std::vector<CGEdge>{regular("C", read('a'), "E")});
}

TEST_CASE("edges_for_configuration: only EMP rules at the last symbol add a dead edge",
          "[compgraph]") {
    const auto edges = edges_for_configuration(machine_m(), word("b"), {"D", 0}, "ds");
    CHECK(edges == std::vector<CGEdge>{dead_edge("D", 'b'), regular("D", EMP, "S")});
}

TEST_CASE("edges_for_configuration: empty input gives special EMP edges only", "[compgraph]") {
    const Machine m = make_ndfa({"Q", "R"}, {Symbol{'a'}}, "Q", {}, {{"Q", EMP, "R"}, {"Q", read('a'), "R"}});
    CHECK(edges_for_configuration(m, {}, {"Q", 0}, "ds") ==
          std::vector<CGEdge>{special("Q", EMP, "R")});
    // No dead edge when nothing applies and nothing is left to read.
    CHECK(edges_for_configuration(m, {}, {"R", 0}, "ds").empty());
}

TEST_CASE("edges_for_configuration: last symbol splits special reads from regular EMP",
          "[compgraph]") {
    const Machine m = make_ndfa({"Q", "R"}, {Symbol{'a'}}, "Q", {},
                                {{"Q", EMP, "R"}, {"Q", read('a'), "R"}, {"Q", read('a'), "Q"}});
    CHECK(edges_for_configuration(m, word("a"), {"Q", 0}, "ds") ==
          std::vector<CGEdge>{special("Q", read('a'), "R"), special("Q", read('a'), "Q"),
                              regular("Q", EMP, "R")});
    CHECK(edges_for_configuration(m, word("aa"), {"Q", 0}, "ds") ==
          std::vector<CGEdge>{regular("Q", EMP, "R"), regular("Q", read('a'), "R"),
                              regular("Q", read('a'), "Q")});
    // Stuck with input left: a lone dead edge.
    CHECK(edges_for_configuration(m, word("aa"), {"R", 0}, "ds") ==
          std::vector<CGEdge>{dead_edge("R", 'a')});
}

TEST_CASE("next_configurations follows edges from each frontier item", "[compgraph]") {
    const Word w = word("abbabb");
    const std::vector<CGEdge> level0{regular("S", read('a'), "A"), regular("S", read('a'), "B")};
    CHECK(next_configurations(w, level0, std::vector<Configuration>{{"S", 0}}, {}) ==
          std::vector<Configuration>{{"A", 1}, {"B", 1}});

    const std::vector<CGEdge> eps{special("Q", EMP, "R")};
    CHECK(next_configurations({}, eps, std::vector<Configuration>{{"Q", 0}}, {}) ==
          std::vector<Configuration>{{"R", 0}});

    // Every successor already visited: the item contributes nothing.
    CHECK(next_configurations(w, level0, std::vector<Configuration>{{"S", 0}},
                              {{"A", 1}, {"B", 1}})
              .empty());
}

TEST_CASE("next_configurations contributes all successors once any is new", "[compgraph]") {
    const Word w = word("abbabb");
    const std::vector<CGEdge> level0{regular("S", read('a'), "A"), regular("S", read('a'), "B")};
    CHECK(next_configurations(w, level0, std::vector<Configuration>{{"S", 0}}, {{"A", 1}}) ==
          std::vector<Configuration>{{"A", 1}, {"B", 1}});
}

TEST_CASE("next_configurations grows visited within one call", "[compgraph]") {
    const Word w = word("a");
    const std::vector<CGEdge> edges{special("X", read('a'), "Z"), special("Y", read('a'), "Z")};
    CHECK(next_configurations(w, edges, std::vector<Configuration>{{"X", 0}, {"Y", 0}}, {}) ==
          std::vector<Configuration>{{"Z", 1}});
}

TEST_CASE("next_configurations never steps into the dead state", "[compgraph]") {
    const Word w = word("ab");
    const std::vector<CGEdge> edges{dead_edge("S", 'a'), regular("S", EMP, "S")};
    CHECK(next_configurations(w, edges, std::vector<Configuration>{{"S", 0}}, {}) ==
          std::vector<Configuration>{{"S", 0}});
}

TEST_CASE("computation_tree_to_cg_edges on ab* as an NDFA", "[compgraph]") {
    const Machine m = make_ndfa({"S", "F"}, {Symbol{'a'}, Symbol{'b'}}, "S", {"F"},
                                {{"S", read('a'), "F"}, {"F", read('b'), "F"}});
    const auto edges = computation_tree_to_cg_edges(m, word("ab"), {{"S", 0}}, {}, "ds");
    CHECK(edges == std::vector<CGEdge>{regular("S", read('a'), "F"), special("F", read('b'), "F")});
}

TEST_CASE("computation_tree_to_cg_edges with nothing to do", "[compgraph]") {
    const Machine m = make_ndfa({"Q"}, {Symbol{'a'}}, "Q", {}, {{"Q", read('a'), "Q"}});
    CHECK(computation_tree_to_cg_edges(m, {}, {{"Q", 0}}, {}, "ds").empty());
}

TEST_CASE("computation_tree_to_cg_edges stops on a repeated EMP self-loop", "[compgraph]") {
    const Machine m = make_ndfa({"Q"}, {Symbol{'a'}}, "Q", {}, {{"Q", EMP, "Q"}});
    const auto edges = computation_tree_to_cg_edges(m, word("a"), {{"Q", 0}}, {}, "ds");
    // Level 0 explores (Q, a); level 1 revisits it once and finds nothing new.
    CHECK(edges == std::vector<CGEdge>{dead_edge("Q", 'a'), regular("Q", EMP, "Q"),
                                       dead_edge("Q", 'a'), regular("Q", EMP, "Q")});
}

TEST_CASE("dedup passes", "[compgraph]") {
    const std::vector<CGEdge> raw{regular("F", read('b'), "G"), special("F", read('b'), "G"),
                                  regular("F", read('b'), "G"), dead_edge("S", 'b'),
                                  dead_edge("S", 'b'), regular("S", read('a'), "A")};
    const auto unique = remove_duplicate_edges(raw);
    CHECK(unique == std::vector<CGEdge>{regular("F", read('b'), "G"), special("F", read('b'), "G"),
                                        dead_edge("S", 'b'), regular("S", read('a'), "A")});
    CHECK(remove_redundant_regular_edges(unique) ==
          std::vector<CGEdge>{special("F", read('b'), "G"), dead_edge("S", 'b'),
                              regular("S", read('a'), "A")});
}

TEST_CASE("make_cg_edges: reject graph of M", "[compgraph]") {
    const auto edges = make_cg_edges(machine_m(), word("abbabb"));
    const std::set<Rule> expected{{"S", read('a'), "A"}, {"S", read('a'), "B"},
                                  {"A", read('b'), "C"}, {"B", read('b'), "D"},
                                  {"B", read('b'), "F"}, {"D", EMP, "S"},
                                  {"F", read('b'), "G"}, {"G", read('a'), "B"},
                                  {"S", read('b'), "ds"}, {"C", read('b'), "ds"},
                                  {"D", read('b'), "ds"}};
    CHECK(triples(edges, true) == expected);
    CHECK(edges.size() == expected.size());
    CHECK(contains(edges, special("F", read('b'), "G")));
}

TEST_CASE("make_cg_edges: accept graph of M keeps one accepting path", "[compgraph]") {
    const auto edges = make_cg_edges(machine_m(), word("abaaba"));
    CHECK(edges.size() == 4);
    CHECK(contains(edges, regular("S", read('a'), "A")));
    CHECK(contains(edges, regular("A", read('b'), "C")));
    CHECK(contains(edges, regular("C", read('a'), "E")));
    CHECK(contains(edges, special("E", EMP, "S")));
}

TEST_CASE("make_cg_edges on the empty word without EMP rules is empty", "[compgraph]") {
    CHECK(make_cg_edges(machine_m(), {}).empty());
    CHECK_THROWS_AS(make_cg_edges(machine_m(), word("x")), Error);
}

TEST_CASE("prune_on_accept", "[compgraph]") {
    const Machine m = machine_m();
    const std::vector<CGEdge> unpruned{regular("S", read('a'), "B"), dead_edge("S", 'b'),
                                       special("C", read('a'), "E"), regular("S", read('a'), "A")};
    // Reject: unchanged.
    CHECK(prune_on_accept(m, word("abbabb"), unpruned) == unpruned);

    // Accept: only trace transitions survive, and only the last is special.
    const auto pruned = prune_on_accept(m, word("aba"), unpruned);
    CHECK(pruned == std::vector<CGEdge>{regular("C", read('a'), "E"), regular("S", read('a'), "A")});

    // A deterministic run keeps exactly its |w| transitions.
    const Machine chain = make_ndfa({"S", "A", "B"}, {Symbol{'a'}, Symbol{'b'}}, "S", {"B"},
                                    {{"S", read('a'), "A"}, {"A", read('b'), "B"}});
    CHECK(make_cg_edges(chain, word("ab")) ==
          std::vector<CGEdge>{regular("S", read('a'), "A"), special("A", read('b'), "B")});
}

TEST_CASE("build_computation_graph on the M examples", "[compgraph]") {
    const Machine m = machine_m();
    auto cg = build_computation_graph(m, word("abbabb"));
    CHECK(cg.verdict == Verdict::Reject);
    CHECK(cg.highlighted == std::set<StateId>{"G", "ds"});
    CHECK(cg.dead == std::optional<StateId>("ds"));

    cg = build_computation_graph(m, word("abaaba"));
    CHECK(cg.verdict == Verdict::Accept);
    CHECK(cg.highlighted == std::set<StateId>{"S"});
    CHECK_FALSE(cg.dead.has_value());

    cg = build_computation_graph(m, {});
    CHECK(cg.verdict == Verdict::Accept);
    CHECK(cg.highlighted.contains("S"));
}

TEST_CASE("build_computation_graph uses a fresh dead-state name", "[compgraph]") {
    const Machine m = make_ndfa({"S", "ds"}, {Symbol{'a'}}, "S", {}, {});
    const auto cg = build_computation_graph(m, word("a"));
    CHECK(cg.dead == std::optional<StateId>("ds0"));
    CHECK(cg.highlighted == std::set<StateId>{"ds0"});
}

TEST_CASE("computation graphs on EMP cycles", "[compgraph]") {
    const Machine loop = make_ndfa({"P", "Q"}, {Symbol{'a'}}, "P", {},
                                   {{"P", EMP, "Q"}, {"Q", EMP, "P"}});
    const auto cg = build_computation_graph(loop, word("aaaaaaaaaa"));
    CHECK(cg.verdict == Verdict::Reject);
    CHECK(cg.highlighted == std::set<StateId>{"ds"});
    CHECK(triples(cg.edges, true) == std::set<Rule>{{"P", EMP, "Q"},
                                                    {"Q", EMP, "P"},
                                                    {"P", read('a'), "ds"},
                                                    {"Q", read('a'), "ds"}});

    const auto empty = build_computation_graph(loop, {});
    CHECK(empty.highlighted == std::set<StateId>{"P", "Q"});
}

TEST_CASE("computation graph properties on random machines", "[compgraph][property]") {
    fa::testing::MachineGenerator gen(99);
    for (int i = 0; i < 2000; ++i) {
        const Machine m = gen.ndfa();
        const Word w = gen.word_for(m);
        const auto cg = build_computation_graph(m, w);
        const auto oracle = fa::testing::enumerate_computations(m, w);

        // Deterministic output.
        const auto again = build_computation_graph(m, w);
        CHECK(again.edges == cg.edges);
        CHECK(again.highlighted == cg.highlighted);

        // No transition appears twice, in either classification.
        CHECK(triples(cg.edges, true).size() == cg.edges.size());

        // Non-dead edges are machine rules; dead edges target the dead state.
        for (const CGEdge& e : cg.edges) {
            if (e.to_dead) {
                CHECK(e.kind == EdgeKind::Special);
                CHECK_FALSE(e.label.is_epsilon());
                CHECK(cg.dead == std::optional<StateId>(e.to));
            } else {
                CHECK(std::find(m.rules().begin(), m.rules().end(), e.rule()) != m.rules().end());
            }
        }

        bool final_highlighted = false;
        for (const StateId& q : cg.highlighted) {
            final_highlighted = final_highlighted || m.is_final(q);
        }
        CHECK(cg.verdict == fa::apply(m, w));
        CHECK((cg.verdict == Verdict::Accept) == final_highlighted);

        if (cg.verdict == Verdict::Reject) {
            std::set<std::pair<StateId, Symbol>> stuck;
            for (const CGEdge& e : cg.edges) {
                if (e.to_dead) {
                    stuck.insert({e.from, e.label.symbol()});
                }
            }
            CHECK(stuck == oracle.stuck);
            CHECK(triples(cg.edges) == oracle.used_rules);
            auto ends = cg.highlighted;
            if (cg.dead) {
                ends.erase(*cg.dead);
            }
            CHECK(ends == oracle.end_states);
        } else {
            const auto trace = show_transitions(m, w);
            REQUIRE(trace);
            const auto used = trace_rules(*trace);
            CHECK(triples(cg.edges) == std::set<Rule>(used.begin(), used.end()));
            std::set<StateId> expected{trace->steps.back().state};
            if (w.empty()) {
                expected.insert(m.start());
            }
            CHECK(cg.highlighted == expected);
        }
    }
}
