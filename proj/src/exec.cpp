#include "fa/exec.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace fa {

std::string_view to_string(Verdict v) noexcept {
    return v == Verdict::Accept ? "accept" : "reject";
}

void check_word(const Machine& machine, const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!machine.in_sigma(w[i])) {
            throw Error(ErrorCode::WordSymbolNotInSigma,
                        "word symbol '" + std::string(1, w[i].glyph) + "' at position " +
                            std::to_string(i) + " is not in the machine's alphabet");
        }
    }
}

std::vector<Successor> step(const Machine& machine, const Word& w, const Configuration& config) {
    std::vector<Successor> out;
    const bool consumed = config.offset >= w.size();
    for (const Rule& r : machine.rules()) {
        if (r.from != config.state) {
            continue;
        }
        if (r.label.is_epsilon()) {
            out.push_back({r, {r.to, config.offset}});
        } else if (!consumed && r.label.symbol() == w[config.offset]) {
            out.push_back({r, {r.to, config.offset + 1}});
        }
    }
    return out;
}

namespace {

bool accepting(const Machine& machine, const Word& w, const Configuration& c) {
    return c.offset == w.size() && machine.is_final(c.state);
}

// BFS from (start, w). Returns the first accepting configuration dequeued
// and, if `parents` is given, the BFS tree needed to rebuild its path.
std::optional<Configuration> search(const Machine& machine, const Word& w,
                                    std::map<Configuration, Configuration>* parents) {
    const Configuration initial{machine.start(), 0};
    std::set<Configuration> visited{initial};
    std::deque<Configuration> queue{initial};
    while (!queue.empty()) {
        Configuration current = std::move(queue.front());
        queue.pop_front();
        if (accepting(machine, w, current)) {
            return current;
        }
        for (auto& [rule, next] : step(machine, w, current)) {
            if (visited.insert(next).second) {
                if (parents != nullptr) {
                    parents->emplace(next, current);
                }
                queue.push_back(std::move(next));
            }
        }
    }
    return std::nullopt;
}

} // namespace

Verdict apply(const Machine& machine, const Word& w) {
    check_word(machine, w);
    return search(machine, w, nullptr) ? Verdict::Accept : Verdict::Reject;
}

std::optional<Trace> show_transitions(const Machine& machine, const Word& w) {
    check_word(machine, w);
    Trace trace;
    trace.word = w;

    if (machine.kind() == MachineKind::Dfa) {
        Configuration current{machine.start(), 0};
        trace.steps.push_back(current);
        while (current.offset < w.size()) {
            auto next = step(machine, w, current);
            // Constructed DFAs are total, so exactly one rule applies.
            current = next.front().next;
            trace.steps.push_back(current);
        }
        trace.verdict = machine.is_final(current.state) ? Verdict::Accept : Verdict::Reject;
        return trace;
    }

    std::map<Configuration, Configuration> parents;
    auto found = search(machine, w, &parents);
    if (!found) {
        return std::nullopt;
    }
    for (Configuration c = *found;;) {
        trace.steps.push_back(c);
        auto it = parents.find(c);
        if (it == parents.end()) {
            break;
        }
        c = it->second;
    }
    std::reverse(trace.steps.begin(), trace.steps.end());
    trace.verdict = Verdict::Accept;
    return trace;
}

std::vector<Rule> trace_rules(const Trace& trace) {
    std::vector<Rule> out;
    for (std::size_t i = 0; i + 1 < trace.steps.size(); ++i) {
        const Configuration& a = trace.steps[i];
        const Configuration& b = trace.steps[i + 1];
        const Label label =
            b.offset > a.offset ? Label::read(trace.word[a.offset]) : Label::epsilon();
        out.push_back(Rule{a.state, label, b.state});
    }
    return out;
}

} // namespace fa
