#include "fa/machine_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fa {

namespace {

using json = nlohmann::json;

// Minimal cursor over already-validated JSON text, used only to map a
// pointer back to a line number.
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    std::size_t line() const noexcept { return line_; }
    bool done() const noexcept { return pos_ >= text_.size(); }
    char peek() const noexcept { return done() ? '\0' : text_[pos_]; }

    void advance() {
        if (!done() && text_[pos_++] == '\n') {
            ++line_;
        }
    }

    void skip_ws() {
        while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r')) {
            advance();
        }
    }

    bool expect(char c) {
        skip_ws();
        if (peek() != c) {
            return false;
        }
        advance();
        return true;
    }

    std::optional<std::string> string() {
        skip_ws();
        if (peek() != '"') {
            return std::nullopt;
        }
        advance();
        std::string out;
        while (!done() && peek() != '"') {
            if (peek() == '\\') {
                advance();
            }
            out += peek();
            advance();
        }
        advance();
        return out;
    }

    void skip_value() {
        skip_ws();
        const char c = peek();
        if (c == '"') {
            string();
        } else if (c == '{' || c == '[') {
            const char close = c == '{' ? '}' : ']';
            advance();
            skip_ws();
            if (peek() == close) {
                advance();
                return;
            }
            while (!done()) {
                if (close == '}') {
                    string();
                    expect(':');
                }
                skip_value();
                skip_ws();
                if (peek() == ',') {
                    advance();
                    continue;
                }
                advance();
                return;
            }
        } else {
            while (!done() && peek() != ',' && peek() != '}' && peek() != ']' && peek() != ' ' &&
                   peek() != '\n' && peek() != '\r' && peek() != '\t') {
                advance();
            }
        }
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

std::vector<std::string> split_pointer(std::string_view pointer) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < pointer.size()) {
        if (pointer[i] != '/') {
            return {};
        }
        const std::size_t next = pointer.find('/', i + 1);
        const std::size_t end = next == std::string_view::npos ? pointer.size() : next;
        tokens.emplace_back(pointer.substr(i + 1, end - i - 1));
        i = end;
    }
    return tokens;
}

[[noreturn]] void fail(ErrorCode code, std::string message, std::string where) {
    throw Error(code, std::move(message), std::move(where));
}

std::string expect_string(const json& v, const std::string& where) {
    if (!v.is_string()) {
        fail(ErrorCode::MalformedDocument, where + " must be a string", where);
    }
    return v.get<std::string>();
}

const json& expect_array(const json& doc, const std::string& key) {
    const std::string where = "/" + key;
    if (!doc.contains(key)) {
        fail(ErrorCode::MalformedDocument, "missing key \"" + key + "\"", {});
    }
    const json& v = doc.at(key);
    if (!v.is_array()) {
        fail(ErrorCode::MalformedDocument, "\"" + key + "\" must be a list", where);
    }
    return v;
}

std::vector<StateId> state_list(const json& doc, const std::string& key) {
    std::vector<StateId> out;
    const json& arr = expect_array(doc, key);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        out.emplace_back(expect_string(arr[i], "/" + key + "/" + std::to_string(i)));
    }
    return out;
}

Symbol symbol_from(const std::string& text, const std::string& where) {
    if (text.size() != 1) {
        fail(ErrorCode::InvalidSymbol,
             "symbol \"" + text + "\" must be a single lowercase letter or digit", where);
    }
    return Symbol{text.front()};
}

Machine from_document(const json& doc) {
    if (!doc.is_object()) {
        fail(ErrorCode::MalformedDocument, "machine file must contain a JSON object", {});
    }
    static const std::set<std::string> known_keys{"kind",   "states", "sigma", "start",
                                                  "finals", "rules",  "no_dead"};
    for (const auto& [key, value] : doc.items()) {
        if (!known_keys.contains(key)) {
            fail(ErrorCode::MalformedDocument, "unknown key \"" + key + "\"", "/" + key);
        }
    }

    if (!doc.contains("kind")) {
        fail(ErrorCode::MalformedDocument, "missing key \"kind\"", {});
    }
    const std::string kind = expect_string(doc.at("kind"), "/kind");
    if (kind != "dfa" && kind != "ndfa") {
        fail(ErrorCode::UnknownKind, "unknown machine kind \"" + kind + "\"", "/kind");
    }

    auto states = state_list(doc, "states");
    auto finals = state_list(doc, "finals");

    std::vector<Symbol> sigma;
    const json& sigma_arr = expect_array(doc, "sigma");
    for (std::size_t i = 0; i < sigma_arr.size(); ++i) {
        const std::string where = "/sigma/" + std::to_string(i);
        sigma.push_back(symbol_from(expect_string(sigma_arr[i], where), where));
    }

    if (!doc.contains("start")) {
        fail(ErrorCode::MalformedDocument, "missing key \"start\"", {});
    }
    const StateId start(expect_string(doc.at("start"), "/start"));

    std::vector<Rule> rules;
    const json& rules_arr = expect_array(doc, "rules");
    for (std::size_t i = 0; i < rules_arr.size(); ++i) {
        const std::string where = "/rules/" + std::to_string(i);
        const json& r = rules_arr[i];
        if (!r.is_array() || r.size() != 3) {
            fail(ErrorCode::MalformedDocument, "rule must be a [from, label, to] triple", where);
        }
        const std::string from = expect_string(r[0], where + "/0");
        const std::string label = expect_string(r[1], where + "/1");
        const std::string to = expect_string(r[2], where + "/2");
        rules.push_back(Rule{StateId(from),
                             label == "EMP" ? Label::epsilon()
                                            : Label::read(symbol_from(label, where + "/1")),
                             StateId(to)});
    }

    bool no_dead = false;
    if (doc.contains("no_dead")) {
        if (kind != "dfa") {
            fail(ErrorCode::MalformedDocument, "\"no_dead\" only applies to a dfa", "/no_dead");
        }
        if (!doc.at("no_dead").is_boolean()) {
            fail(ErrorCode::MalformedDocument, "\"no_dead\" must be true or false", "/no_dead");
        }
        no_dead = doc.at("no_dead").get<bool>();
    }

    if (kind == "dfa") {
        return make_dfa(std::move(states), std::move(sigma), start, std::move(finals),
                        std::move(rules), no_dead);
    }
    return make_ndfa(std::move(states), std::move(sigma), start, std::move(finals),
                     std::move(rules));
}

} // namespace

std::optional<std::size_t> locate_line(std::string_view text, std::string_view pointer) {
    Cursor cur(text);
    for (const std::string& token : split_pointer(pointer)) {
        cur.skip_ws();
        if (cur.peek() == '{') {
            cur.advance();
            bool found = false;
            while (!cur.done()) {
                auto key = cur.string();
                if (!key || !cur.expect(':')) {
                    return std::nullopt;
                }
                if (*key == token) {
                    found = true;
                    break;
                }
                cur.skip_value();
                if (!cur.expect(',')) {
                    return std::nullopt;
                }
            }
            if (!found) {
                return std::nullopt;
            }
        } else if (cur.peek() == '[') {
            cur.advance();
            std::size_t index = 0;
            try {
                index = std::stoul(token);
            } catch (const std::exception&) {
                return std::nullopt;
            }
            for (std::size_t i = 0; i < index; ++i) {
                cur.skip_value();
                if (!cur.expect(',')) {
                    return std::nullopt;
                }
            }
        } else {
            return std::nullopt;
        }
    }
    cur.skip_ws();
    if (cur.done()) {
        return std::nullopt;
    }
    return cur.line();
}

Machine parse_machine_text(std::string_view text, std::string_view source) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::MalformedDocument, std::string(source) + ": " + e.what());
    }
    try {
        return from_document(doc);
    } catch (const Error& e) {
        std::string where = e.where();
        auto line = locate_line(text, where);
        // DFA-level checks point at the whole rule list; fall back to the key.
        if (!line && !where.empty()) {
            line = locate_line(text, where.substr(0, where.find('/', 1)));
        }
        std::string prefix(source);
        if (line) {
            prefix += ":" + std::to_string(*line);
        }
        throw Error(e.code(), prefix + ": " + e.what(), where);
    }
}

Machine parse_machine_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::MalformedDocument, path.string() + ": cannot open machine file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_machine_text(buf.str(), path.string());
}

std::string machine_to_json(const Machine& machine) {
    nlohmann::ordered_json doc;
    doc["kind"] = std::string(to_string(machine.kind()));
    doc["states"] = nlohmann::ordered_json::array();
    for (const StateId& q : machine.states()) {
        doc["states"].push_back(q.str());
    }
    doc["sigma"] = nlohmann::ordered_json::array();
    for (Symbol s : machine.sigma()) {
        doc["sigma"].push_back(std::string(1, s.glyph));
    }
    doc["start"] = machine.start().str();
    doc["finals"] = nlohmann::ordered_json::array();
    for (const StateId& q : machine.finals()) {
        doc["finals"].push_back(q.str());
    }
    doc["rules"] = nlohmann::ordered_json::array();
    for (const Rule& r : machine.rules()) {
        doc["rules"].push_back({r.from.str(), to_string(r.label), r.to.str()});
    }
    if (machine.kind() == MachineKind::Dfa) {
        doc["no_dead"] = true;
    }
    return doc.dump(2) + "\n";
}

Word parse_word(std::span<const std::string> args) {
    std::vector<std::string> tokens;
    for (const std::string& arg : args) {
        std::istringstream in(arg);
        std::string token;
        while (in >> token) {
            tokens.push_back(token);
        }
    }
    if (tokens.size() == 1 && tokens.front() == "EMP") {
        return {};
    }
    Word w;
    for (const std::string& token : tokens) {
        if (token.size() != 1) {
            throw Error(ErrorCode::InvalidSymbol,
                        "word element \"" + token +
                            "\" is not a single symbol (separate symbols with spaces)");
        }
        w.emplace_back(token.front());
    }
    return w;
}

} // namespace fa
