#include "booltop/io.hpp"

#include <map>
#include <optional>

#include "json.hpp"

namespace booltop::io {

using json = nlohmann::ordered_json;

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error("InvalidJson", e.what());
    }
}

template <class F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error("InvalidJson", e.what());
    }
}

json alphabet_json(const lang::Alphabet& al) {
    json a = json::array();
    for (char c : al.letters()) a.push_back(std::string(1, c));
    return a;
}

lang::Alphabet alphabet_from(const json& j) {
    if (j.is_string()) return lang::Alphabet(j.get<std::string>());
    std::string s;
    for (auto& c : j) {
        auto t = c.get<std::string>();
        if (t.size() != 1) throw Error("InvalidJson", "alphabet entries are single letters");
        s += t;
    }
    return lang::Alphabet(s);
}

json states_of(const std::vector<bool>& flags) {
    json a = json::array();
    for (std::size_t i = 0; i < flags.size(); ++i)
        if (flags[i]) a.push_back(i);
    return a;
}

std::vector<bool> flags_of(const json& j, std::size_t n) {
    std::vector<bool> f(n, false);
    for (auto& x : j) {
        auto i = x.get<std::size_t>();
        if (i >= n) throw Error("InvalidJson", "state index out of range");
        f[i] = true;
    }
    return f;
}

std::vector<std::vector<int>> table_of(const json& j, std::size_t n, std::size_t k) {
    auto t = j.get<std::vector<std::vector<int>>>();
    if (t.size() != n) throw Error("InvalidJson", "transition table has the wrong number of rows");
    for (auto& row : t) {
        if (row.size() != k) throw Error("InvalidJson", "transition row has the wrong number of letters");
        for (int q : row)
            if (q < 0 || sz(q) >= n) throw Error("InvalidJson", "transition target out of range");
    }
    return t;
}

json dfa_value(const lang::Dfa& d) {
    json j;
    j["alphabet"] = alphabet_json(d.alphabet);
    j["states"] = d.n_states;
    j["init"] = d.init;
    j["accepting"] = states_of(d.accepting);
    j["delta"] = d.delta;
    return j;
}

lang::Dfa dfa_value(const json& j) {
    return guarded([&] {
        lang::Dfa d;
        d.alphabet = alphabet_from(j.at("alphabet"));
        d.n_states = j.at("states").get<std::size_t>();
        d.init = j.at("init").get<int>();
        if (d.init < 0 || sz(d.init) >= d.n_states) throw Error("InvalidJson", "initial state out of range");
        d.accepting = flags_of(j.at("accepting"), d.n_states);
        d.delta = table_of(j.at("delta"), d.n_states, d.alphabet.size());
        return d;
    });
}

lang::Dfa dfa_or_regex(const json& j, const lang::Alphabet* al) {
    if (j.is_string()) {
        if (!al) throw Error("InvalidJson", "regex entries need a top-level alphabet");
        return lang::dfa_from_regex(j.get<std::string>(), *al);
    }
    return dfa_value(j);
}

std::string quote(const std::string& s) { return json(s).dump(); }

// One edge per (source, target) with the letters joined.
template <class Emit>
void merged_edges(std::size_t n, std::size_t k, Emit targets, const lang::Alphabet& al, const std::string& style,
                  std::string& out) {
    for (std::size_t q = 0; q < n; ++q) {
        std::map<int, std::string> by_target;
        for (std::size_t a = 0; a < k; ++a)
            for (int t : targets(q, a)) {
                auto& l = by_target[t];
                l += (l.empty() ? "" : ",") + std::string(1, al.letter(a));
            }
        for (auto& [t, l] : by_target)
            out += "  q" + std::to_string(q) + " -> q" + std::to_string(t) + " [label=" + quote(l) + style + "];\n";
    }
}

std::string dot_head(const std::string& name, std::size_t n, const std::vector<bool>& acc, const std::vector<int>& inits) {
    std::string out = "digraph " + quote(name) + " {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (std::size_t q = 0; q < n; ++q)
        out += "  q" + std::to_string(q) + (acc[q] ? " [shape=doublecircle]" : "") + ";\n";
    for (std::size_t i = 0; i < inits.size(); ++i) {
        std::string s = "start" + std::to_string(i);
        out += "  " + s + " [shape=point];\n  " + s + " -> q" + std::to_string(inits[i]) + ";\n";
    }
    return out;
}

}  // namespace

std::string dfa_json(const lang::Dfa& d) { return dfa_value(d).dump(); }
lang::Dfa dfa_from_json(const std::string& text) { return dfa_value(parse(text)); }

std::string nfa_json(const lang::Nfa& n) {
    json j;
    j["alphabet"] = alphabet_json(n.alphabet);
    j["states"] = n.n_states;
    j["inits"] = n.inits;
    j["accepting"] = states_of(n.accepting);
    j["delta"] = n.delta;
    return j.dump();
}

lang::Nfa nfa_from_json(const std::string& text) {
    json j = parse(text);
    return guarded([&] {
        lang::Nfa n;
        n.alphabet = alphabet_from(j.at("alphabet"));
        n.n_states = j.at("states").get<std::size_t>();
        n.inits = j.at("inits").get<std::vector<int>>();
        n.accepting = flags_of(j.at("accepting"), n.n_states);
        n.delta = j.at("delta").get<std::vector<std::vector<std::vector<int>>>>();
        if (n.delta.size() != n.n_states) throw Error("InvalidJson", "transition table has the wrong number of rows");
        for (auto& row : n.delta) {
            if (row.size() != n.alphabet.size()) throw Error("InvalidJson", "transition row has the wrong number of letters");
            for (auto& set : row)
                for (int q : set)
                    if (q < 0 || sz(q) >= n.n_states) throw Error("InvalidJson", "transition target out of range");
        }
        for (int q : n.inits)
            if (q < 0 || sz(q) >= n.n_states) throw Error("InvalidJson", "initial state out of range");
        return n;
    });
}

std::string dcfa_json(const circauto::CircularDfa& c) {
    json j;
    j["alphabet"] = alphabet_json(c.alphabet);
    j["states"] = c.n_states;
    j["q_in"] = c.q_in;
    j["accepting"] = states_of(c.accepting);
    j["delta_l"] = c.delta_l;
    j["delta_r"] = c.delta_r;
    return j.dump();
}

circauto::CircularDfa dcfa_from_json(const std::string& text) {
    json j = parse(text);
    return guarded([&] {
        circauto::CircularDfa c;
        c.alphabet = alphabet_from(j.at("alphabet"));
        c.n_states = j.at("states").get<std::size_t>();
        c.q_in = j.at("q_in").get<int>();
        if (c.q_in < 0 || sz(c.q_in) >= c.n_states) throw Error("InvalidJson", "initial state out of range");
        c.accepting = flags_of(j.at("accepting"), c.n_states);
        c.delta_l = table_of(j.at("delta_l"), c.n_states, c.alphabet.size());
        c.delta_r = table_of(j.at("delta_r"), c.n_states, c.alphabet.size());
        return c;
    });
}

std::string dfa_dot(const lang::Dfa& d, const std::string& name) {
    std::string out = dot_head(name, d.n_states, d.accepting, {d.init});
    merged_edges(
        d.n_states, d.alphabet.size(), [&](std::size_t q, std::size_t a) { return std::vector<int>{d.delta[q][a]}; },
        d.alphabet, "", out);
    return out + "}\n";
}

std::string nfa_dot(const lang::Nfa& n, const std::string& name) {
    std::string out = dot_head(name, n.n_states, n.accepting, n.inits);
    merged_edges(
        n.n_states, n.alphabet.size(), [&](std::size_t q, std::size_t a) { return n.delta[q][a]; }, n.alphabet, "",
        out);
    return out + "}\n";
}

std::string dcfa_dot(const circauto::CircularDfa& c, const std::string& name) {
    std::string out = dot_head(name, c.n_states, c.accepting, {c.q_in});
    std::size_t k = c.alphabet.size();
    merged_edges(
        c.n_states, k, [&](std::size_t q, std::size_t a) { return std::vector<int>{c.delta_l[q][a]}; }, c.alphabet,
        ", style=solid", out);
    merged_edges(
        c.n_states, k, [&](std::size_t q, std::size_t a) { return std::vector<int>{c.delta_r[q][a]}; }, c.alphabet,
        ", style=dashed", out);
    return out + "}\n";
}

std::string matrix_json(const boolsemi::BoolMatrix& m) { return json(m.to_strings()).dump(); }

std::string semimodule_json(const boolsemi::Semimodule& s) {
    json j;
    j["dim"] = s.dim();
    j["size"] = s.size();
    json el = json::array();
    for (auto& e : s.elements()) el.push_back(e.str());
    j["elements"] = el;
    j["irreducibles"] = boolsemi::irreducibles(s);
    j["distributive"] = boolsemi::is_distributive(s);
    return j.dump();
}

pairing::PairingTheory pairing_from_json(const std::string& text) {
    json j = parse(text);
    return guarded([&] {
        pairing::PairingTheory t;
        std::vector<std::string> rows;
        for (auto& r : j.at("matrix")) {
            if (r.is_string()) {
                rows.push_back(r.get<std::string>());
            } else {
                std::string s;
                for (auto& x : r) s += x.get<int>() ? '1' : '0';
                rows.push_back(s);
            }
        }
        for (auto& r : rows)
            if (r.size() != rows[0].size() || r.find_first_not_of("01") != std::string::npos)
                throw Error("InvalidJson", "matrix rows must be equal-length 0/1 rows");
        t.m = boolsemi::BoolMatrix::from_rows(rows);
        auto& l = j.at("lambda");
        t.lambda = l.is_boolean() ? l.get<bool>() : l.get<int>() != 0;
        return t;
    });
}

measure::LanguageMatrix language_matrix_from_json(const std::string& text) {
    json j = parse(text);
    return guarded([&] {
        measure::LanguageMatrix lm;
        std::optional<lang::Alphabet> al;
        if (j.contains("alphabet")) al = alphabet_from(j.at("alphabet"));
        const lang::Alphabet* ap = al ? &*al : nullptr;
        lm.out_labels = j.at("out").get<std::vector<std::string>>();
        lm.in_labels = j.at("in").get<std::vector<std::string>>();
        for (auto& row : j.at("grid")) {
            lm.grid.emplace_back();
            for (auto& d : row) lm.grid.back().push_back(dfa_or_regex(d, ap));
            if (lm.grid.back().size() != lm.in_labels.size())
                throw Error("InvalidJson", "grid row length differs from the number of in labels");
        }
        if (lm.grid.size() != lm.out_labels.size()) throw Error("InvalidJson", "grid has the wrong number of rows");
        if (j.contains("circ")) {
            lm.circ = dfa_or_regex(j.at("circ"), ap);
            if (!lang::is_rotation_closed(lm.circ)) throw NotCircular();
        }
        return lm;
    });
}

}  // namespace booltop::io
