#ifndef FA_CORE_HPP
#define FA_CORE_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fa/error.hpp"

namespace fa {

/// Name of a machine state. By convention a single uppercase letter, but any
/// identifier (letter followed by letters/digits) is accepted: completed DFAs
/// carry a dead state named `ds`.
class StateId {
public:
    StateId() = default;
    explicit StateId(std::string name) : name_(std::move(name)) {}
    StateId(const char* name) : name_(name) {}

    const std::string& str() const noexcept { return name_; }

    friend bool operator==(const StateId&, const StateId&) = default;
    friend auto operator<=>(const StateId&, const StateId&) = default;

private:
    std::string name_;
};

bool is_valid_state_name(std::string_view name) noexcept;

/// One alphabet element: a lowercase letter or a decimal digit.
struct Symbol {
    char glyph = 'a';

    constexpr Symbol() = default;
    constexpr explicit Symbol(char c) : glyph(c) {}

    static constexpr bool is_valid(char c) noexcept {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    }

    friend constexpr bool operator==(Symbol, Symbol) = default;
    friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

/// An input word. The empty vector is EMP.
using Word = std::vector<Symbol>;

/// Builds a word from a string of glyphs, e.g. word("abb").
Word word(std::string_view glyphs);
std::string to_string(const Word& w);

/// Transition label: read one symbol, or move without reading (EMP).
class Label {
public:
    static constexpr Label epsilon() noexcept { return Label{}; }
    static constexpr Label read(Symbol s) noexcept { return Label{s}; }

    constexpr bool is_epsilon() const noexcept { return !symbol_.has_value(); }
    constexpr Symbol symbol() const { return symbol_.value(); }

    friend constexpr bool operator==(const Label&, const Label&) = default;
    friend constexpr std::strong_ordering operator<=>(const Label& a, const Label& b) noexcept {
        // EMP orders before every symbol.
        if (a.is_epsilon() || b.is_epsilon()) {
            return b.is_epsilon() <=> a.is_epsilon();
        }
        return a.symbol_->glyph <=> b.symbol_->glyph;
    }

private:
    constexpr Label() = default;
    constexpr explicit Label(Symbol s) : symbol_(s) {}

    std::optional<Symbol> symbol_;
};

/// "EMP" for epsilon, the glyph otherwise.
std::string to_string(const Label& label);
inline Label read(char glyph) { return Label::read(Symbol{glyph}); }
inline constexpr Label EMP = Label::epsilon();

struct Rule {
    StateId from;
    Label label;
    StateId to;

    friend bool operator==(const Rule&, const Rule&) = default;
    friend auto operator<=>(const Rule&, const Rule&) = default;
};

enum class MachineKind { Dfa, Ndfa };
std::string_view to_string(MachineKind kind) noexcept;

/// Immutable finite-state automaton. Only constructible through make_dfa()
/// and make_ndfa(); every instance satisfies validate().
class Machine {
public:
    MachineKind kind() const noexcept { return kind_; }
    const std::vector<StateId>& states() const noexcept { return states_; }
    const std::vector<Symbol>& sigma() const noexcept { return sigma_; }
    const StateId& start() const noexcept { return start_; }
    const std::vector<StateId>& finals() const noexcept { return finals_; }
    const std::vector<Rule>& rules() const noexcept { return rules_; }

    bool has_state(const StateId& q) const noexcept;
    bool is_final(const StateId& q) const noexcept;
    bool in_sigma(Symbol s) const noexcept;

    friend bool operator==(const Machine&, const Machine&) = default;

private:
    friend Machine make_ndfa(std::vector<StateId>, std::vector<Symbol>, StateId,
                             std::vector<StateId>, std::vector<Rule>);
    friend Machine make_dfa(std::vector<StateId>, std::vector<Symbol>, StateId,
                            std::vector<StateId>, std::vector<Rule>, bool);

    Machine() = default;

    MachineKind kind_ = MachineKind::Ndfa;
    std::vector<StateId> states_;
    std::vector<Symbol> sigma_;
    StateId start_;
    std::vector<StateId> finals_;
    std::vector<Rule> rules_;
};

/// Validates and builds an NDFA. Duplicate states, finals and rules are
/// dropped keeping the first occurrence; a repeated sigma symbol is an error.
Machine make_ndfa(std::vector<StateId> states, std::vector<Symbol> sigma, StateId start,
                  std::vector<StateId> finals, std::vector<Rule> rules);

/// Validates and builds a DFA. Unless `no_dead` is set, a partial transition
/// function is completed with a fresh non-final dead state that loops on
/// every symbol. With `no_dead` the given rules must already be total.
Machine make_dfa(std::vector<StateId> states, std::vector<Symbol> sigma, StateId start,
                 std::vector<StateId> finals, std::vector<Rule> rules, bool no_dead = false);

/// "ds", or the first of "ds0", "ds1", ... not already a state of `machine`.
StateId fresh_dead_state(const Machine& machine);
StateId fresh_dead_state(std::span<const StateId> states);

/// Re-checks every machine invariant; throws fa::Error on the first violation.
void validate(const Machine& machine);

} // namespace fa

#endif
