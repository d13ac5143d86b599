#include "booltop/mixed.hpp"

#include <map>

namespace booltop::circauto {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

std::string show(const lang::Alphabet& al, const lang::Word& w) { return w.empty() ? "1" : al.str(w); }

}  // namespace

MixedAutomaton mixed_automaton(const theory::Theory& th, MixedAutomaton::Kind kind) {
    using theory::PmDiagram;
    const auto& pm = th.pm();
    const auto& cls = th.cls();
    const auto& E = th.arcs();
    const lang::Alphabet& al = th.evaluation().alphabet;
    std::size_t k = al.size();
    bool second = kind == MixedAutomaton::Kind::Second;

    MixedAutomaton m;
    m.kind = kind;
    m.minus_delta = cls.left.delta;
    m.plus_delta = cls.right.delta;
    for (std::size_t q = 0; q < cls.left.n_states; ++q) {
        m.minus_zero.push_back(th.minus().space.at(th.minus().word_class[q]).none());
        m.minus_names.push_back("<" + show(al, cls.left_words[q]) + "|");
    }
    for (std::size_t q = 0; q < cls.right.n_states; ++q) {
        m.plus_zero.push_back(th.plus().space.at(th.plus().word_class[q]).none());
        m.plus_names.push_back("|" + show(al, cls.right_words[q]) + "<");
    }
    auto cap_minus = [&](int q) { return second && m.minus_zero[sz(q)] ? -1 : q; };
    auto cap_plus = [&](int q) { return second && m.plus_zero[sz(q)] ? -1 : q; };

    // States are A(+-) classes, arcs and pairs kept apart.
    std::map<std::size_t, int> arc_state, pair_state;
    std::vector<std::size_t> rep;
    std::size_t n_pairs = cls.left.n_states * cls.right.n_states;
    for (std::size_t i = n_pairs; i < pm.spanning.size(); ++i)
        if (arc_state.emplace(pm.class_of[i], static_cast<int>(rep.size())).second) rep.push_back(i);
    m.n_arc = rep.size();
    if (second)
        for (std::size_t i = 0; i < n_pairs; ++i) {
            if (pm.class_of[i] == pm.zero_class) continue;
            if (pair_state.emplace(pm.class_of[i], static_cast<int>(rep.size())).second) rep.push_back(i);
        }
    m.n_pair = rep.size() - m.n_arc;

    auto arc_of = [&](std::size_t e) { return arc_state.at(pm.class_of[n_pairs + e]); };
    auto pair_of = [&](int p, int q) {
        auto c = pm.class_of[sz(q) * cls.right.n_states + sz(p)];
        return c == pm.zero_class ? -1 : pair_state.at(c);
    };
    m.unit_arc = arc_of(E.identity);
    if (second) m.unit_pair = pair_of(cls.right.init, cls.left.init);

    for (std::size_t s = 0; s < rep.size(); ++s) {
        const PmDiagram& d = pm.spanning[rep[s]];
        m.names.push_back(th.describe(d));
        m.delta_l.emplace_back(k);
        m.delta_r.emplace_back(k);
        if (d.kind == PmDiagram::Kind::Arc) {
            for (std::size_t a = 0; a < k; ++a) {
                m.delta_l[s][a] = arc_of(E.mult[sz(d.e)][E.letter(static_cast<int>(a))]);
                m.delta_r[s][a] = arc_of(E.mult[E.letter(static_cast<int>(a))][sz(d.e)]);
            }
            m.tau_minus.push_back(cap_minus(th.minus_after(cls.left.init, d.e)));
            m.tau_plus.push_back(cap_plus(th.plus_after(d.e, cls.right.init)));
        } else {
            for (std::size_t a = 0; a < k; ++a) {
                m.delta_l[s][a] = pair_of(d.p, cls.left.delta[sz(d.m)][a]);
                m.delta_r[s][a] = pair_of(cls.right.delta[sz(d.p)][a], d.m);
            }
            // capping the plus end evaluates the free plus interval, and vice versa
            m.tau_minus.push_back(cls.table.get(sz(cls.left.init), sz(d.p)) ? cap_minus(d.m) : -1);
            m.tau_plus.push_back(cls.table.get(sz(d.m), sz(cls.right.init)) ? cap_plus(d.p) : -1);
        }
    }
    return m;
}

MixedAutomaton mixed_automaton(const theory::Evaluation& ev, MixedAutomaton::Kind kind) {
    return mixed_automaton(theory::Theory(ev), kind);
}

bool intertwines(const MixedAutomaton& m) {
    bool second = m.kind == MixedAutomaton::Kind::Second;
    auto step = [&](const std::vector<std::vector<int>>& d, const std::vector<int>& zero, int q, std::size_t a) {
        if (q < 0) return -1;
        int r = d[sz(q)][a];
        return second && zero[sz(r)] ? -1 : r;
    };
    std::size_t k = m.minus_delta.empty() ? 0 : m.minus_delta[0].size();
    for (std::size_t s = 0; s < m.delta_l.size(); ++s)
        for (std::size_t a = 0; a < k; ++a) {
            int l = m.delta_l[s][a], r = m.delta_r[s][a];
            int lhs_minus = l < 0 ? -1 : m.tau_minus[sz(l)];
            int lhs_plus = r < 0 ? -1 : m.tau_plus[sz(r)];
            if (lhs_minus != step(m.minus_delta, m.minus_zero, m.tau_minus[s], a)) return false;
            if (lhs_plus != step(m.plus_delta, m.plus_zero, m.tau_plus[s], a)) return false;
        }
    return true;
}

}  // namespace booltop::circauto
