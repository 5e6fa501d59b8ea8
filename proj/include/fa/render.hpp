#ifndef FA_RENDER_HPP
#define FA_RENDER_HPP

#include <string>

#include "fa/compgraph.hpp"
#include "fa/core.hpp"

namespace fa {

/// DOT source for a directed graph. Nodes are emitted sorted by name and
/// edges by (source, target); no layout information is included.
struct DotDocument {
    std::string text;
};

namespace style {
inline constexpr const char* start_outline = "forestgreen";
inline constexpr const char* highlight_fill = "crimson";
inline constexpr const char* epsilon_label = "\xCE\xB5"; // ε
} // namespace style

/// Transition diagram: the start state is outlined green, finals are double
/// circles. Rules between the same pair of states share one edge whose label
/// lists the sorted symbols, e.g. "a, b".
DotDocument machine_to_dot(const Machine& machine);

/// Computation graph: end states are filled crimson, edges into the dead
/// state are dashed, everything else is drawn as in machine_to_dot().
DotDocument cgraph_to_dot(const ComputationGraph& cg);

/// Plain-text report: verdict, end states, number of machine edges used and
/// the dead edges. With `color`, verdict and end states get ANSI colors.
std::string cgraph_summary(const ComputationGraph& cg, bool color = false);

} // namespace fa

#endif
