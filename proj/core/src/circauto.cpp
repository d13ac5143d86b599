#include "booltop/circauto.hpp"

namespace booltop::circauto {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

}  // namespace

std::string Violation::str() const {
    std::string s = "axiom " + std::to_string(axiom);
    if (a >= 0) s += " a=" + std::to_string(a);
    if (b >= 0) s += " b=" + std::to_string(b);
    if (q >= 0) s += " q=" + std::to_string(q);
    return s;
}

std::vector<Violation> validate_dcfa(const CircularDfa& c) {
    std::vector<Violation> out;
    int k = static_cast<int>(c.alphabet.size());
    int n = static_cast<int>(c.n_states);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int q = 0; q < n; ++q)
                if (c.step_l(c.step_r(q, b), a) != c.step_r(c.step_l(q, a), b)) out.push_back({1, a, b, q});
    for (int a = 0; a < k; ++a)
        if (c.step_l(c.q_in, a) != c.step_r(c.q_in, a)) out.push_back({2, a, -1, c.q_in});
    for (int a = 0; a < k; ++a)
        for (int q = 0; q < n; ++q)
            if (c.accepting[sz(c.step_l(q, a))] != c.accepting[sz(c.step_r(q, a))]) out.push_back({3, a, -1, q});
    return out;
}

int dcfa_run(const CircularDfa& c, const Word& left, const Word& right) {
    int q = c.q_in;
    for (int a : right) q = c.step_l(q, a);
    for (auto it = left.rbegin(); it != left.rend(); ++it) q = c.step_r(q, *it);
    return q;
}

bool dcfa_accepts(const CircularDfa& c, const Word& w) {
    auto half = w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2);
    bool x = c.accepting[sz(dcfa_run(c, {}, w))];
    bool y = c.accepting[sz(dcfa_run(c, Word(w.begin(), half), Word(half, w.end())))];
    if (x != y) throw InvalidAutomaton("acceptance depends on where the circle is cut");
    return x;
}

CircularDfa dcfa_from_language(const Dfa& d) {
    if (!lang::is_rotation_closed(d)) throw NotCircular();
    lang::Monoid m = lang::syntactic_monoid(d);
    CircularDfa c;
    c.alphabet = d.alphabet;
    c.n_states = m.size();
    c.q_in = static_cast<int>(m.identity);
    c.accepting = m.in_language;
    c.delta_l.assign(m.size(), std::vector<int>(d.alphabet.size()));
    c.delta_r = c.delta_l;
    for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
            c.delta_l[x][a] = static_cast<int>(m.mult[x][m.letter_elems[a]]);
            c.delta_r[x][a] = static_cast<int>(m.mult[m.letter_elems[a]][x]);
        }
    return c;
}

CircularDfa minimal_dcfa(const Dfa& d) {
    if (!lang::is_rotation_closed(d)) throw NotCircular();
    Dfa m = lang::minimize(d);
    auto reps = lang::access_words(m);
    CircularDfa c;
    c.alphabet = m.alphabet;
    c.n_states = m.n_states;
    c.q_in = m.init;
    c.accepting = m.accepting;
    c.delta_l = m.delta;
    c.delta_r.assign(m.n_states, std::vector<int>(m.alphabet.size()));
    for (std::size_t q = 0; q < m.n_states; ++q)
        for (std::size_t a = 0; a < m.alphabet.size(); ++a) c.delta_r[q][a] = m.run(m.run(Word{static_cast<int>(a)}), reps[q]);
    return c;
}

Dfa interval_forget(const CircularDfa& c) {
    Dfa d;
    d.alphabet = c.alphabet;
    d.n_states = c.n_states;
    d.delta = c.delta_l;
    d.init = c.q_in;
    d.accepting = c.accepting;
    return d;
}

std::vector<Word> state_words(const CircularDfa& c) { return lang::access_words(interval_forget(c)); }

}  // namespace booltop::circauto
