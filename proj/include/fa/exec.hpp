#ifndef FA_EXEC_HPP
#define FA_EXEC_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "fa/core.hpp"

namespace fa {

/// A machine state paired with the unconsumed suffix of the input word,
/// stored as the offset where that suffix starts.
struct Configuration {
    StateId state;
    std::size_t offset = 0;

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

inline std::size_t remaining(const Word& w, const Configuration& c) {
    return w.size() - c.offset;
}

enum class Verdict { Accept, Reject };
std::string_view to_string(Verdict v) noexcept;

struct Trace {
    Word word;
    std::vector<Configuration> steps;
    Verdict verdict = Verdict::Reject;
};

struct Successor {
    Rule rule;
    Configuration next;
};

/// Throws ErrorCode::WordSymbolNotInSigma if `w` uses a symbol outside sigma.
void check_word(const Machine& machine, const Word& w);

/// Every rule applicable to `config`, in machine rule order, with the
/// configuration it leads to.
std::vector<Successor> step(const Machine& machine, const Word& w, const Configuration& config);

/// Breadth-first search over configurations; each configuration is explored
/// at most once, so EMP cycles terminate.
Verdict apply(const Machine& machine, const Word& w);

/// For a DFA, its unique run. For an NDFA, the first accepting computation
/// found by breadth-first search, or nullopt when the word is rejected.
std::optional<Trace> show_transitions(const Machine& machine, const Word& w);

/// The rule applied between each pair of consecutive trace steps.
std::vector<Rule> trace_rules(const Trace& trace);

} // namespace fa

#endif
