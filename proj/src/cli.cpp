#include "fa/cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "fa/compgraph.hpp"
#include "fa/exec.hpp"
#include "fa/machine_file.hpp"
#include "fa/render.hpp"

namespace fa::cli {

namespace {

int verdict_exit(Verdict v) {
    return v == Verdict::Accept ? exit_accept : exit_reject;
}

std::string unconsumed(const Word& w, const Configuration& c) {
    std::string out = "(";
    for (std::size_t i = c.offset; i < w.size(); ++i) {
        if (i != c.offset) {
            out += ' ';
        }
        out += w[i].glyph;
    }
    return out + ")";
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text) || !file.flush()) {
        throw std::runtime_error("cannot write " + path);
    }
}

struct Args {
    std::string machine_file;
    std::vector<std::string> word;
    std::string out_path;
    bool summary = false;
};

int cmd_validate(const Args& a, std::ostream& out) {
    const Machine m = parse_machine_file(a.machine_file);
    out << "ok: " << to_string(m.kind()) << ", " << m.states().size() << " states, "
        << m.sigma().size() << " symbols, " << m.rules().size() << " rules\n";
    return 0;
}

int cmd_apply(const Args& a, std::ostream& out) {
    const Machine m = parse_machine_file(a.machine_file);
    const Verdict v = fa::apply(m, parse_word(a.word));
    out << to_string(v) << "\n";
    return verdict_exit(v);
}

int cmd_trace(const Args& a, std::ostream& out) {
    const Machine m = parse_machine_file(a.machine_file);
    const Word w = parse_word(a.word);
    const auto trace = show_transitions(m, w);
    if (!trace) {
        out << "no trace: word rejected by ndfa\n";
        return exit_reject;
    }
    for (const Configuration& c : trace->steps) {
        out << unconsumed(w, c) << " " << c.state.str() << "\n";
    }
    out << to_string(trace->verdict) << "\n";
    return verdict_exit(trace->verdict);
}

int cmd_graph(const Args& a, std::ostream& out) {
    const Machine m = parse_machine_file(a.machine_file);
    const DotDocument dot = machine_to_dot(m);
    if (a.out_path.empty()) {
        out << dot.text;
    } else {
        write_file(a.out_path, dot.text);
        out << a.out_path << "\n";
    }
    return 0;
}

int cmd_compgraph(const Args& a, std::ostream& out, bool color) {
    const Machine m = parse_machine_file(a.machine_file);
    const ComputationGraph cg = build_computation_graph(m, parse_word(a.word));
    const DotDocument dot = cgraph_to_dot(cg);
    if (!a.out_path.empty()) {
        write_file(a.out_path, dot.text);
        out << a.out_path << "\n";
    } else if (!a.summary) {
        out << dot.text;
    }
    if (a.summary) {
        out << cgraph_summary(cg, color);
    }
    return verdict_exit(cg.verdict);
}

} // namespace

bool use_color(std::optional<std::string_view> fa_color, bool stdout_is_tty) {
    if (fa_color == "always") {
        return true;
    }
    if (fa_color == "never") {
        return false;
    }
    return stdout_is_tty;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
    CLI::App app{"Run finite-state automata and draw their computation graphs", "fa"};
    app.require_subcommand(1);

    Args a;
    auto add_machine = [&](CLI::App* sub) {
        sub->add_option("machine-file", a.machine_file, "JSON machine description")->required();
    };
    auto add_word = [&](CLI::App* sub) {
        sub->add_option("word", a.word, "input symbols separated by spaces, or EMP");
    };
    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", a.out_path, "write DOT to this file instead of stdout");
    };

    auto* validate = app.add_subcommand("validate", "check a machine file");
    add_machine(validate);
    auto* apply_cmd = app.add_subcommand("apply", "print accept or reject");
    add_machine(apply_cmd);
    add_word(apply_cmd);
    auto* trace = app.add_subcommand("trace", "print the configurations of one computation");
    add_machine(trace);
    add_word(trace);
    auto* graph = app.add_subcommand("graph", "transition diagram as DOT");
    add_machine(graph);
    add_out(graph);
    auto* compgraph = app.add_subcommand("compgraph", "computation graph as DOT");
    add_machine(compgraph);
    add_word(compgraph);
    add_out(compgraph);
    compgraph->add_flag("--summary", a.summary, "print a plain-text summary");

    std::vector<const char*> argv{"fa"};
    for (const std::string& arg : args) {
        argv.push_back(arg.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }

    try {
        if (validate->parsed()) {
            return cmd_validate(a, out);
        }
        if (apply_cmd->parsed()) {
            return cmd_apply(a, out);
        }
        if (trace->parsed()) {
            return cmd_trace(a, out);
        }
        if (graph->parsed()) {
            return cmd_graph(a, out);
        }
        return cmd_compgraph(a, out, color);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
}

} // namespace fa::cli
