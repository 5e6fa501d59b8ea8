#pragma once

#include "fa/core.hpp"

namespace fa::testing {

// L = ((a b a) U (a (b b a)* b))*
inline Machine machine_m() {
    return make_ndfa({"S", "A", "B", "C", "D", "E", "F", "G"}, {Symbol{'a'}, Symbol{'b'}}, "S",
                     {"S"},
                     {{"S", read('a'), "A"},
                      {"S", read('a'), "B"},
                      {"A", read('b'), "C"},
                      {"B", read('b'), "D"},
                      {"B", read('b'), "F"},
                      {"C", read('a'), "E"},
                      {"D", EMP, "S"},
                      {"E", EMP, "S"},
                      {"F", read('b'), "G"},
                      {"G", read('a'), "B"}});
}

// L = ab*, completed with a dead state by the constructor.
inline Machine machine_ab_star() {
    return make_dfa({"S", "F"}, {Symbol{'a'}, Symbol{'b'}}, "S", {"F"},
                    {{"S", read('a'), "F"}, {"F", read('b'), "F"}});
}

// Two states bouncing on EMP: P <-> Q, with P reading 'a' into Q.
inline Machine machine_eps_cycle() {
    return make_ndfa({"P", "Q"}, {Symbol{'a'}}, "P", {"Q"},
                     {{"P", EMP, "Q"}, {"Q", EMP, "P"}, {"P", read('a'), "P"}});
}

} // namespace fa::testing
