#include "fa/core.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace fa {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::EmptyStateSet: return "EmptyStateSet";
    case ErrorCode::InvalidStateName: return "InvalidStateName";
    case ErrorCode::InvalidSymbol: return "InvalidSymbol";
    case ErrorCode::DuplicateSymbolInSigma: return "DuplicateSymbolInSigma";
    case ErrorCode::StartNotInStates: return "StartNotInStates";
    case ErrorCode::FinalNotInStates: return "FinalNotInStates";
    case ErrorCode::RuleReferencesUnknownState: return "RuleReferencesUnknownState";
    case ErrorCode::RuleReadsUnknownSymbol: return "RuleReadsUnknownSymbol";
    case ErrorCode::NondeterministicRules: return "NondeterministicRules";
    case ErrorCode::IncompleteWithNoDead: return "IncompleteWithNoDead";
    case ErrorCode::WordSymbolNotInSigma: return "WordSymbolNotInSigma";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::UnknownKind: return "UnknownKind";
    }
    return "Unknown";
}

std::string_view to_string(MachineKind kind) noexcept {
    return kind == MachineKind::Dfa ? "dfa" : "ndfa";
}

bool is_valid_state_name(std::string_view name) noexcept {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
        return false;
    }
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
}

Word word(std::string_view glyphs) {
    Word w;
    w.reserve(glyphs.size());
    for (char c : glyphs) {
        w.emplace_back(c);
    }
    return w;
}

std::string to_string(const Word& w) {
    if (w.empty()) {
        return "EMP";
    }
    std::string out;
    for (Symbol s : w) {
        if (!out.empty()) {
            out += ' ';
        }
        out += s.glyph;
    }
    return out;
}

std::string to_string(const Label& label) {
    return label.is_epsilon() ? std::string("EMP") : std::string(1, label.symbol().glyph);
}

bool Machine::has_state(const StateId& q) const noexcept {
    return std::find(states_.begin(), states_.end(), q) != states_.end();
}

bool Machine::is_final(const StateId& q) const noexcept {
    return std::find(finals_.begin(), finals_.end(), q) != finals_.end();
}

bool Machine::in_sigma(Symbol s) const noexcept {
    return std::find(sigma_.begin(), sigma_.end(), s) != sigma_.end();
}

namespace {

std::string at(std::string_view component, std::size_t index) {
    return "/" + std::string(component) + "/" + std::to_string(index);
}

template <typename T>
std::vector<T> dedup_keep_first(const std::vector<T>& items) {
    std::vector<T> out;
    std::set<T> seen;
    for (const auto& item : items) {
        if (seen.insert(item).second) {
            out.push_back(item);
        }
    }
    return out;
}

// Shared checks for both constructors; writes the deduplicated components.
void check_and_fill(std::vector<StateId>& states_out, std::vector<Symbol>& sigma_out,
                    StateId& start_out, std::vector<StateId>& finals_out,
                    std::vector<Rule>& rules_out, const std::vector<StateId>& states,
                    const std::vector<Symbol>& sigma, const StateId& start,
                    const std::vector<StateId>& finals, const std::vector<Rule>& rules) {
    if (states.empty()) {
        throw Error(ErrorCode::EmptyStateSet, "machine has no states", "/states");
    }

    std::set<Symbol> symbols;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (!Symbol::is_valid(sigma[i].glyph)) {
            throw Error(ErrorCode::InvalidSymbol,
                        "alphabet symbol '" + std::string(1, sigma[i].glyph) +
                            "' is not a lowercase letter or digit",
                        at("sigma", i));
        }
        if (!symbols.insert(sigma[i]).second) {
            throw Error(ErrorCode::DuplicateSymbolInSigma,
                        "alphabet symbol '" + std::string(1, sigma[i].glyph) + "' is listed twice",
                        at("sigma", i));
        }
    }

    for (std::size_t i = 0; i < states.size(); ++i) {
        const std::string& name = states[i].str();
        if (!is_valid_state_name(name)) {
            throw Error(ErrorCode::InvalidStateName, "invalid state name '" + name + "'",
                        at("states", i));
        }
        if (name.size() == 1 && symbols.contains(Symbol{name.front()})) {
            throw Error(ErrorCode::InvalidStateName,
                        "state name '" + name + "' clashes with an alphabet symbol",
                        at("states", i));
        }
    }
    const std::set<StateId> known(states.begin(), states.end());

    if (!known.contains(start)) {
        throw Error(ErrorCode::StartNotInStates,
                    "start state '" + start.str() + "' is not in the state set", "/start");
    }
    for (std::size_t i = 0; i < finals.size(); ++i) {
        if (!known.contains(finals[i])) {
            throw Error(ErrorCode::FinalNotInStates,
                        "final state '" + finals[i].str() + "' is not in the state set",
                        at("finals", i));
        }
    }
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const Rule& r = rules[i];
        for (const StateId* q : {&r.from, &r.to}) {
            if (!known.contains(*q)) {
                throw Error(ErrorCode::RuleReferencesUnknownState,
                            "rule references unknown state '" + q->str() + "'", at("rules", i));
            }
        }
        if (!r.label.is_epsilon() && !symbols.contains(r.label.symbol())) {
            throw Error(ErrorCode::RuleReadsUnknownSymbol,
                        "rule reads '" + to_string(r.label) + "', which is not in the alphabet",
                        at("rules", i));
        }
    }

    states_out = dedup_keep_first(states);
    sigma_out = sigma;
    start_out = start;
    finals_out = dedup_keep_first(finals);
    rules_out = dedup_keep_first(rules);
}

} // namespace

Machine make_ndfa(std::vector<StateId> states, std::vector<Symbol> sigma, StateId start,
                  std::vector<StateId> finals, std::vector<Rule> rules) {
    Machine m;
    check_and_fill(m.states_, m.sigma_, m.start_, m.finals_, m.rules_, states, sigma, start,
                   finals, rules);
    m.kind_ = MachineKind::Ndfa;
    return m;
}

Machine make_dfa(std::vector<StateId> states, std::vector<Symbol> sigma, StateId start,
                 std::vector<StateId> finals, std::vector<Rule> rules, bool no_dead) {
    Machine m;
    check_and_fill(m.states_, m.sigma_, m.start_, m.finals_, m.rules_, states, sigma, start,
                   finals, rules);
    m.kind_ = MachineKind::Dfa;

    std::map<std::pair<StateId, Symbol>, StateId> delta;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const Rule& r = rules[i];
        if (r.label.is_epsilon()) {
            throw Error(ErrorCode::NondeterministicRules,
                        "DFA rule " + r.from.str() + " EMP " + r.to.str() + " reads nothing",
                        at("rules", i));
        }
        auto [it, inserted] = delta.emplace(std::pair{r.from, r.label.symbol()}, r.to);
        if (!inserted && it->second != r.to) {
            throw Error(ErrorCode::NondeterministicRules,
                        "DFA has two rules for state " + r.from.str() + " on '" +
                            to_string(r.label) + "'",
                        at("rules", i));
        }
    }

    const std::size_t total = m.states_.size() * m.sigma_.size();
    if (delta.size() == total) {
        return m;
    }
    if (no_dead) {
        throw Error(ErrorCode::IncompleteWithNoDead,
                    "no_dead was given but the transition function is missing " +
                        std::to_string(total - delta.size()) + " transition(s)",
                    "/rules");
    }

    const StateId dead = fresh_dead_state(m.states_);
    m.states_.push_back(dead);
    for (const StateId& q : m.states_) {
        for (Symbol s : m.sigma_) {
            if (!delta.contains({q, s})) {
                m.rules_.push_back(Rule{q, Label::read(s), dead});
            }
        }
    }
    return m;
}

StateId fresh_dead_state(std::span<const StateId> states) {
    auto taken = [&](const std::string& name) {
        return std::any_of(states.begin(), states.end(),
                           [&](const StateId& q) { return q.str() == name; });
    };
    if (!taken("ds")) {
        return StateId("ds");
    }
    for (std::size_t i = 0;; ++i) {
        std::string name = "ds" + std::to_string(i);
        if (!taken(name)) {
            return StateId(std::move(name));
        }
    }
}

StateId fresh_dead_state(const Machine& machine) {
    return fresh_dead_state(machine.states());
}

void validate(const Machine& machine) {
    // Re-run the constructor checks on the stored components, then the
    // invariants that only hold after construction.
    const Machine rebuilt =
        machine.kind() == MachineKind::Dfa
            ? make_dfa(machine.states(), machine.sigma(), machine.start(), machine.finals(),
                       machine.rules(), true)
            : make_ndfa(machine.states(), machine.sigma(), machine.start(), machine.finals(),
                        machine.rules());
    if (rebuilt != machine) {
        throw Error(ErrorCode::MalformedDocument, "machine components contain duplicates");
    }
}

} // namespace fa
