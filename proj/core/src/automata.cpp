#include <algorithm>
#include <deque>
#include <map>

#include "booltop/lang.hpp"
#include "eps_nfa.hpp"

namespace booltop::lang {

namespace {

using Set = std::vector<int>;

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

// Breadth-first renumbering from the initial state; drops unreachable states.
Dfa canonical_order(const Dfa& d) {
    std::vector<int> order{d.init}, num(d.n_states, -1);
    num[sz(d.init)] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
            int t = d.delta[sz(order[i])][a];
            if (num[sz(t)] < 0) {
                num[sz(t)] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    Dfa r;
    r.alphabet = d.alphabet;
    r.n_states = order.size();
    r.init = 0;
    r.delta.assign(order.size(), std::vector<int>(d.alphabet.size()));
    r.accepting.assign(order.size(), false);
    for (std::size_t i = 0; i < order.size(); ++i) {
        r.accepting[i] = d.accepting[sz(order[i])];
        for (std::size_t a = 0; a < d.alphabet.size(); ++a) r.delta[i][a] = num[sz(d.delta[sz(order[i])][a])];
    }
    return r;
}

template <class Accept>
Dfa product(const Dfa& a, const Dfa& b, Accept acc) {
    if (!(a.alphabet == b.alphabet)) throw AlphabetMismatch();
    std::size_t k = a.alphabet.size();
    std::map<std::pair<int, int>, int> num;
    std::vector<std::pair<int, int>> st{{a.init, b.init}};
    num[st[0]] = 0;
    Dfa r;
    r.alphabet = a.alphabet;
    for (std::size_t i = 0; i < st.size(); ++i) {
        r.delta.emplace_back(k);
        for (std::size_t c = 0; c < k; ++c) {
            std::pair<int, int> t{a.delta[sz(st[i].first)][c], b.delta[sz(st[i].second)][c]};
            auto [it, fresh] = num.emplace(t, static_cast<int>(st.size()));
            if (fresh) st.push_back(t);
            r.delta[i][c] = it->second;
        }
        r.accepting.push_back(acc(a.accepting[sz(st[i].first)], b.accepting[sz(st[i].second)]));
    }
    r.n_states = st.size();
    return minimize(r);
}

}  // namespace

bool Nfa::accepts(const Word& w) const {
    std::vector<bool> cur(n_states, false);
    for (int s : inits) cur[sz(s)] = true;
    for (int a : w) {
        std::vector<bool> nxt(n_states, false);
        for (std::size_t s = 0; s < n_states; ++s)
            if (cur[s])
                for (int t : delta[s][sz(a)]) nxt[sz(t)] = true;
        cur.swap(nxt);
    }
    for (std::size_t s = 0; s < n_states; ++s)
        if (cur[s] && accepting[s]) return true;
    return false;
}

Dfa determinize(const Nfa& n, std::size_t max_states) {
    std::size_t k = n.alphabet.size();
    Set start = n.inits;
    std::sort(start.begin(), start.end());
    start.erase(std::unique(start.begin(), start.end()), start.end());
    std::map<Set, int> num{{start, 0}};
    std::vector<Set> st{start};
    Dfa d;
    d.alphabet = n.alphabet;
    for (std::size_t i = 0; i < st.size(); ++i) {
        d.delta.emplace_back(k);
        bool acc = false;
        for (int s : st[i]) acc = acc || n.accepting[sz(s)];
        d.accepting.push_back(acc);
        for (std::size_t a = 0; a < k; ++a) {
            Set t;
            for (int s : st[i]) t.insert(t.end(), n.delta[sz(s)][a].begin(), n.delta[sz(s)][a].end());
            std::sort(t.begin(), t.end());
            t.erase(std::unique(t.begin(), t.end()), t.end());
            auto [it, fresh] = num.emplace(t, static_cast<int>(st.size()));
            if (fresh) {
                st.push_back(t);
                if (st.size() > max_states)
                    throw SizeLimit("subset construction exceeds " + std::to_string(max_states) + " states");
            }
            d.delta[i][a] = it->second;
        }
    }
    d.n_states = st.size();
    d.init = 0;
    return d;
}

Dfa minimize(const Dfa& in) {
    Dfa d = canonical_order(in);
    std::size_t n = d.n_states, k = d.alphabet.size();
    // Moore refinement: split by acceptance, then by successor classes
    std::vector<int> cls(n);
    for (std::size_t q = 0; q < n; ++q) cls[q] = d.accepting[q] ? 1 : 0;
    std::size_t count = 0;
    for (;;) {
        std::map<std::vector<int>, int> sig;
        std::vector<int> next(n);
        for (std::size_t q = 0; q < n; ++q) {
            std::vector<int> s{cls[q]};
            for (std::size_t a = 0; a < k; ++a) s.push_back(cls[sz(d.delta[q][a])]);
            next[q] = sig.emplace(s, static_cast<int>(sig.size())).first->second;
        }
        if (sig.size() == count) break;
        count = sig.size();
        cls = next;
    }
    Dfa q;
    q.alphabet = d.alphabet;
    q.n_states = count;
    q.init = cls[sz(d.init)];
    q.delta.assign(count, std::vector<int>(k));
    q.accepting.assign(count, false);
    for (std::size_t s = 0; s < n; ++s) {
        auto c = sz(cls[s]);
        q.accepting[c] = d.accepting[s];
        for (std::size_t a = 0; a < k; ++a) q.delta[c][a] = cls[sz(d.delta[s][a])];
    }
    return canonical_order(q);
}

Dfa intersect(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x && y; });
}
Dfa unite(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x || y; });
}
Dfa complement(const Dfa& a) {
    Dfa r = a;
    for (std::size_t q = 0; q < r.n_states; ++q) r.accepting[q] = !r.accepting[q];
    return minimize(r);
}
bool is_empty(const Dfa& a) {
    Dfa m = minimize(a);
    return m.n_states == 1 && !m.accepting[0];
}
bool equivalent(const Dfa& a, const Dfa& b) {
    if (!(a.alphabet == b.alphabet)) throw AlphabetMismatch();
    return minimize(a) == minimize(b);
}
// Search reachable state pairs for a word accepted by a and rejected by b.
bool subset(const Dfa& a, const Dfa& b) {
    if (!(a.alphabet == b.alphabet)) throw AlphabetMismatch();
    std::vector<bool> seen(a.n_states * b.n_states, false);
    std::vector<std::pair<int, int>> stack{{a.init, b.init}};
    seen[sz(a.init) * b.n_states + sz(b.init)] = true;
    while (!stack.empty()) {
        auto [p, q] = stack.back();
        stack.pop_back();
        if (a.accepting[sz(p)] && !b.accepting[sz(q)]) return false;
        for (std::size_t c = 0; c < a.alphabet.size(); ++c) {
            int p2 = a.delta[sz(p)][c], q2 = b.delta[sz(q)][c];
            auto k = sz(p2) * b.n_states + sz(q2);
            if (!seen[k]) {
                seen[k] = true;
                stack.push_back({p2, q2});
            }
        }
    }
    return true;
}

Dfa opposite(const Dfa& d) {
    Nfa r;
    r.alphabet = d.alphabet;
    r.n_states = d.n_states;
    r.delta.assign(d.n_states, std::vector<std::vector<int>>(d.alphabet.size()));
    for (std::size_t q = 0; q < d.n_states; ++q)
        for (std::size_t a = 0; a < d.alphabet.size(); ++a) r.delta[sz(d.delta[q][a])][a].push_back(static_cast<int>(q));
    for (std::size_t q = 0; q < d.n_states; ++q)
        if (d.accepting[q]) r.inits.push_back(static_cast<int>(q));
    r.accepting.assign(d.n_states, false);
    r.accepting[sz(d.init)] = true;
    return minimize(determinize(r));
}

Dfa all_words(const Alphabet& al) {
    Dfa d;
    d.alphabet = al;
    d.n_states = 1;
    d.delta.assign(1, std::vector<int>(al.size(), 0));
    d.accepting = {true};
    return d;
}
Dfa no_words(const Alphabet& al) {
    Dfa d = all_words(al);
    d.accepting = {false};
    return d;
}
Dfa only_empty_word(const Alphabet& al) {
    Dfa d;
    d.alphabet = al;
    if (al.empty()) {
        d.n_states = 1;
        d.delta.assign(1, {});
        d.accepting = {true};
        return d;
    }
    d.n_states = 2;
    d.delta.assign(2, std::vector<int>(al.size(), 1));
    d.accepting = {true, false};
    return d;
}

std::vector<Word> access_words(const Dfa& d) {
    std::vector<Word> w(d.n_states);
    std::vector<bool> seen(d.n_states, false);
    std::deque<int> q{d.init};
    seen[sz(d.init)] = true;
    while (!q.empty()) {
        int s = q.front();
        q.pop_front();
        for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
            int t = d.delta[sz(s)][a];
            if (!seen[sz(t)]) {
                seen[sz(t)] = true;
                w[sz(t)] = w[sz(s)];
                w[sz(t)].push_back(static_cast<int>(a));
                q.push_back(t);
            }
        }
    }
    return w;
}

// ---- monoids ----

std::size_t Monoid::of_word(const Word& w) const {
    std::size_t x = identity;
    for (int a : w) x = mult[x][letter_elems[sz(a)]];
    return x;
}

Monoid transition_monoid(const Dfa& d) {
    Monoid m;
    m.alphabet = d.alphabet;
    std::size_t n = d.n_states, k = d.alphabet.size();
    std::map<std::vector<int>, std::size_t> index;
    std::vector<int> id(n);
    for (std::size_t q = 0; q < n; ++q) id[q] = static_cast<int>(q);
    m.maps.push_back(id);
    m.reps.push_back({});
    index[id] = 0;
    std::vector<std::vector<std::size_t>> step;  // right multiplication by letters
    for (std::size_t x = 0; x < m.maps.size(); ++x) {
        step.emplace_back(k);
        for (std::size_t a = 0; a < k; ++a) {
            std::vector<int> y(n);
            for (std::size_t q = 0; q < n; ++q) y[q] = d.delta[sz(m.maps[x][q])][a];
            auto [it, fresh] = index.emplace(y, m.maps.size());
            if (fresh) {
                m.maps.push_back(y);
                Word w = m.reps[x];
                w.push_back(static_cast<int>(a));
                m.reps.push_back(std::move(w));
            }
            step[x][a] = it->second;
        }
    }
    std::size_t e = m.maps.size();
    m.identity = 0;
    m.letter_elems.assign(k, 0);
    for (std::size_t a = 0; a < k; ++a) m.letter_elems[a] = step[0][a];
    m.mult.assign(e, std::vector<std::size_t>(e));
    for (std::size_t x = 0; x < e; ++x)
        for (std::size_t y = 0; y < e; ++y) {
            std::vector<int> z(n);
            for (std::size_t q = 0; q < n; ++q) z[q] = m.maps[y][sz(m.maps[x][q])];
            m.mult[x][y] = index.at(z);
        }
    m.in_language.assign(e, false);
    for (std::size_t x = 0; x < e; ++x) m.in_language[x] = d.accepting[sz(m.maps[x][sz(d.init)])];
    return m;
}

Monoid syntactic_monoid(const Dfa& d) { return transition_monoid(minimize(d)); }

// ---- circular languages ----

Nfa rotation_closure_nfa(const Dfa& d) {
    // A word y x with x y in L: guess p = state after x, read y from p into an
    // accepting state, then read x from the start and land back on p.
    std::size_t n = d.n_states, k = d.alphabet.size();
    EpsNfa g(k);
    for (std::size_t i = 0; i < 2 * n * n; ++i) g.add_state();
    auto first = [n](std::size_t q, std::size_t p) { return static_cast<int>(p * n + q); };
    auto second = [n](std::size_t q, std::size_t p) { return static_cast<int>(n * n + p * n + q); };
    g.final.assign(2 * n * n, false);
    for (std::size_t p = 0; p < n; ++p) {
        g.inits.push_back(first(p, p));
        g.final[sz(second(p, p))] = true;
        for (std::size_t q = 0; q < n; ++q) {
            for (std::size_t a = 0; a < k; ++a) {
                g.add_edge(first(q, p), static_cast<int>(a), first(sz(d.delta[q][a]), p));
                g.add_edge(second(q, p), static_cast<int>(a), second(sz(d.delta[q][a]), p));
            }
            if (d.accepting[q]) g.add_eps(first(q, p), second(sz(d.init), p));
        }
    }
    return g.to_nfa(d.alphabet);
}

Dfa rotation_closure(const Dfa& d, std::size_t max_states) {
    return minimize(determinize(rotation_closure_nfa(d), max_states));
}

// Rotating by one letter generates all rotations, so it suffices that
// a w in L implies w a in L: a subset check on two variants of d.
bool is_rotation_closed(const Dfa& d) {
    for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
        Dfa front = d, back = d;
        front.init = d.delta[sz(d.init)][a];
        for (std::size_t q = 0; q < d.n_states; ++q) back.accepting[q] = d.accepting[sz(d.delta[q][a])];
        if (!subset(front, back)) return false;
    }
    return true;
}

std::set<Word> cyclic_derivative_word(const Word& w, int a) {
    std::set<Word> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != a) continue;
        Word u(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
        u.insert(u.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        out.insert(std::move(u));
    }
    return out;
}

Nfa cyclic_derivative_lang(const Dfa& d, int a) {
    if (!is_rotation_closed(d)) throw NotCircular("cyclic derivative needs a rotation-closed language");
    Nfa n;
    n.alphabet = d.alphabet;
    n.n_states = d.n_states;
    n.delta.assign(d.n_states, std::vector<std::vector<int>>(d.alphabet.size()));
    for (std::size_t q = 0; q < d.n_states; ++q)
        for (std::size_t b = 0; b < d.alphabet.size(); ++b) n.delta[q][b] = {d.delta[q][b]};
    n.accepting = d.accepting;
    n.inits = {d.delta[sz(d.init)][sz(a)]};
    return n;
}

std::set<Word> language_up_to(const Nfa& n, std::size_t len) {
    std::set<Word> out;
    for (auto& w : words_up_to(n.alphabet.size(), len))
        if (n.accepts(w)) out.insert(w);
    return out;
}
std::set<Word> language_up_to(const Dfa& d, std::size_t len) {
    std::set<Word> out;
    for (auto& w : words_up_to(d.alphabet.size(), len))
        if (d.accepts(w)) out.insert(w);
    return out;
}

}  // namespace booltop::lang
