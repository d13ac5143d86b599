#include <algorithm>
#include <numeric>
#include <set>

#include "booltop/theory.hpp"

namespace booltop::theory {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

Word reversed(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

std::string show(const Alphabet& al, const Word& w) { return w.empty() ? "1" : al.str(w); }

}  // namespace

Evaluation Evaluation::make(const Dfa& interval, const Dfa& circle) {
    if (!(interval.alphabet == circle.alphabet)) throw AlphabetMismatch();
    if (!lang::is_rotation_closed(circle)) throw NotCircular("circle language is not closed under rotation");
    Evaluation ev;
    ev.alphabet = interval.alphabet;
    ev.dfa_I = lang::minimize(interval);
    ev.dfa_circ = lang::minimize(circle);
    return ev;
}

Evaluation evaluation_from_regex(const Alphabet& al, std::string_view interval, std::string_view circle) {
    return Evaluation::make(lang::dfa_from_regex(interval, al), lang::dfa_from_regex(circle, al));
}

bool alpha_eval(const Evaluation& ev, const std::vector<Word>& intervals, const std::vector<Word>& circles) {
    for (auto& w : intervals)
        if (!ev.interval(w)) return false;
    for (auto& w : circles)
        if (!ev.circle(w)) return false;
    return true;
}

int Classes::plus_class(const Word& w) const { return right.run(reversed(w)); }

Classes classes(const Dfa& interval) {
    Classes c;
    c.left = lang::minimize(interval);
    c.right = lang::minimize(lang::opposite(interval));
    c.left_words = lang::access_words(c.left);
    for (auto& w : lang::access_words(c.right)) c.right_words.push_back(reversed(w));
    c.table = BoolMatrix(c.left.n_states, c.right.n_states);
    for (std::size_t m = 0; m < c.left.n_states; ++m)
        for (std::size_t p = 0; p < c.right.n_states; ++p)
            c.table.set(m, p, c.left.accepting[sz(c.left.run(static_cast<int>(m), c.right_words[p]))]);
    return c;
}

HalfSpace half_state_space(const Dfa& interval, Sign sign) {
    HalfSpace h;
    h.sign = sign;
    h.cls = classes(interval);
    const Classes& c = h.cls;
    bool minus = sign == Sign::Minus;
    // A(-) is spanned by table rows, A(+) by table columns.
    const Dfa& own = minus ? c.left : c.right;
    const Dfa& other = minus ? c.right : c.left;
    std::vector<BitVec> gens;
    for (std::size_t q = 0; q < own.n_states; ++q) gens.push_back(minus ? c.table.row(q) : c.table.col(q));
    h.space = Semimodule::span(other.n_states, gens);
    for (auto& g : gens) h.word_class.push_back(h.space.index_of(g));
    h.init = h.word_class[sz(own.init)];

    std::size_t k = interval.alphabet.size();
    h.action.assign(k, std::vector<std::size_t>(h.space.size()));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t x = 0; x < h.space.size(); ++x) {
            const BitVec& v = h.space.at(x);
            BitVec y(other.n_states);
            for (std::size_t t = 0; t < other.n_states; ++t) y.set(t, v.test(sz(other.delta[t][a])));
            h.action[a][x] = h.space.index_of(y);
        }
    h.trace.assign(h.space.size(), false);
    for (std::size_t x = 0; x < h.space.size(); ++x) h.trace[x] = h.space.at(x).test(sz(other.init));
    return h;
}

std::size_t HalfSpace::act(std::size_t x, const Word& w) const {
    if (sign == Sign::Minus)
        for (int a : w) x = action[sz(a)][x];
    else
        for (auto it = w.rbegin(); it != w.rend(); ++it) x = action[sz(*it)][x];
    return x;
}

std::size_t HalfSpace::element_of_word(const Word& w) const {
    return word_class[sz(sign == Sign::Minus ? cls.minus_class(w) : cls.plus_class(w))];
}

std::string HalfSpace::name(std::size_t x) const {
    bool minus = sign == Sign::Minus;
    const auto& words = minus ? cls.left_words : cls.right_words;
    const Alphabet& al = cls.left.alphabet;
    auto one = [&](std::size_t q) {
        std::string w = show(al, words[q]);
        return minus ? "<" + w + "|" : "|" + w + "<";
    };
    if (x == space.zero()) return "0";
    for (std::size_t q = 0; q < word_class.size(); ++q)
        if (word_class[q] == x) return one(q);
    std::string s;
    for (auto j : boolsemi::irreducibles(space))
        if (space.leq(j, x)) {
            std::size_t q = static_cast<std::size_t>(std::find(word_class.begin(), word_class.end(), j) - word_class.begin());
            s += (s.empty() ? "" : "+") + one(q);
        }
    return s;
}

bool pair_halves(const HalfSpace& minus, std::size_t x, const HalfSpace& plus, std::size_t y) {
    const BitVec& xv = minus.space.at(x);
    const BitVec& yv = plus.space.at(y);
    for (std::size_t p = 0; p < plus.word_class.size(); ++p)
        if (xv.test(p) && plus.space.at(plus.word_class[p]).subset_of(yv)) return true;
    return false;
}

Dfa minimal_dfa_from_space(const HalfSpace& h) {
    std::size_t k = h.action.size();
    std::vector<std::size_t> states{h.init};
    std::vector<int> num(h.space.size(), -1);
    num[h.init] = 0;
    Dfa d;
    d.alphabet = h.cls.left.alphabet;
    for (std::size_t i = 0; i < states.size(); ++i) {
        d.delta.emplace_back(k);
        for (std::size_t a = 0; a < k; ++a) {
            std::size_t y = h.action[a][states[i]];
            if (num[y] < 0) {
                num[y] = static_cast<int>(states.size());
                states.push_back(y);
            }
            d.delta[i][a] = num[y];
        }
        d.accepting.push_back(h.trace[states[i]]);
    }
    d.n_states = states.size();
    return lang::minimize(d);
}

namespace {

// Subsets (as bit masks over J) whose join is exactly the target element.
std::vector<std::uint32_t> fiber(const Semimodule& s, const std::vector<std::size_t>& J, std::size_t target) {
    std::vector<std::size_t> below;
    for (std::size_t i = 0; i < J.size(); ++i)
        if (s.leq(J[i], target)) below.push_back(i);
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1u << below.size()); ++mask) {
        BitVec acc(s.dim());
        std::uint32_t full = 0;
        for (std::size_t b = 0; b < below.size(); ++b)
            if (mask >> b & 1u) {
                acc |= s.at(J[below[b]]);
                full |= 1u << below[b];
            }
        if (acc == s.at(target)) out.push_back(full);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> members(std::uint32_t mask) {
    std::vector<int> v;
    for (int i = 0; i < 32; ++i)
        if (mask >> i & 1u) v.push_back(i);
    return v;
}

// Serialisation of an NFA with states renamed by perm.
std::vector<int> signature(const lang::Nfa& n, const std::vector<int>& perm) {
    std::size_t N = n.n_states;
    std::vector<int> inv(N);
    for (std::size_t i = 0; i < N; ++i) inv[sz(perm[i])] = static_cast<int>(i);
    std::vector<int> sig;
    std::uint32_t init = 0;
    for (int q : n.inits) init |= 1u << perm[sz(q)];
    sig.push_back(static_cast<int>(init));
    for (std::size_t i = 0; i < N; ++i) {
        std::size_t q = sz(inv[i]);
        sig.push_back(n.accepting[q]);
        for (auto& tgt : n.delta[q]) {
            std::uint32_t m = 0;
            for (int t : tgt) m |= 1u << perm[sz(t)];
            sig.push_back(static_cast<int>(m));
        }
    }
    return sig;
}

}  // namespace

MinimalNfas minimal_nfas(const HalfSpace& h, std::uint64_t limit, bool dedup) {
    MinimalNfas out;
    out.states = boolsemi::irreducibles(h.space);
    const auto& J = out.states;
    if (J.size() > 20) throw SizeLimit("too many irreducibles to enumerate liftings");
    std::size_t k = h.action.size();

    std::vector<std::vector<std::uint32_t>> fibers{fiber(h.space, J, h.init)};
    for (std::size_t j = 0; j < J.size(); ++j)
        for (std::size_t a = 0; a < k; ++a) fibers.push_back(fiber(h.space, J, h.action[a][J[j]]));
    std::uint64_t count = 1;
    for (auto& f : fibers) {
        if (f.empty()) {
            count = 0;
            break;
        }
        count = count > UINT64_MAX / f.size() ? UINT64_MAX : count * f.size();
    }
    out.count = count;
    if (count > limit) throw LimitExceeded(count, limit);

    std::vector<std::size_t> digit(fibers.size(), 0);
    std::set<std::vector<int>> seen;
    for (std::uint64_t n = 0; n < count; ++n) {
        lang::Nfa nfa;
        nfa.alphabet = h.cls.left.alphabet;
        nfa.n_states = J.size();
        nfa.inits = members(fibers[0][digit[0]]);
        nfa.delta.assign(J.size(), std::vector<std::vector<int>>(k));
        nfa.accepting.assign(J.size(), false);
        for (std::size_t j = 0; j < J.size(); ++j) {
            nfa.accepting[j] = h.trace[J[j]];
            for (std::size_t a = 0; a < k; ++a) {
                std::size_t f = 1 + j * k + a;
                nfa.delta[j][a] = members(fibers[f][digit[f]]);
            }
        }
        bool keep = true;
        if (dedup) {
            std::vector<int> perm(J.size());
            std::iota(perm.begin(), perm.end(), 0);
            std::vector<int> best;
            do {
                auto s = signature(nfa, perm);
                if (best.empty() || s < best) best = std::move(s);
            } while (std::next_permutation(perm.begin(), perm.end()));
            keep = seen.insert(best).second;
        }
        if (keep) out.nfas.push_back(std::move(nfa));
        for (std::size_t i = digit.size(); i-- > 0;) {
            if (++digit[i] < fibers[i].size()) break;
            digit[i] = 0;
        }
    }
    return out;
}

IdDecomposition id_decomposition(const Dfa& interval) {
    IdDecomposition id;
    id.minus = half_state_space(interval, Sign::Minus);
    id.plus = half_state_space(interval, Sign::Plus);
    const HalfSpace& M = id.minus;
    const HalfSpace& P = id.plus;
    if (auto bad = boolsemi::distributivity_counterexample(M.space)) throw NotCuttable((*bad)[0], (*bad)[1], (*bad)[2]);

    // Realise each coevaluation functional on A(-) as an element of A(+).
    auto coev = boolsemi::coevaluation(M.space);
    for (auto& c : coev.pairs) {
        std::optional<std::size_t> found;
        for (std::size_t y = 0; y < P.space.size() && !found; ++y) {
            bool ok = true;
            for (std::size_t x = 0; x < M.space.size() && ok; ++x) ok = pair_halves(M, x, P, y) == c.f.test(x);
            if (ok) found = y;
        }
        if (!found) throw Error("Internal", "functional has no counterpart in A(+)");
        id.terms.push_back({*found, c.p});
    }

    const Classes& cl = M.cls;
    for (std::size_t m = 0; m < cl.left.n_states; ++m)
        for (std::size_t p = 0; p < cl.right.n_states; ++p) {
            bool rhs = false;
            for (auto& t : id.terms)
                rhs = rhs || (pair_halves(M, M.word_class[m], P, t.u) && pair_halves(M, t.v, P, P.word_class[p]));
            if (rhs != cl.table.get(m, p)) throw Error("Internal", "decomposition of the identity failed verification");
        }
    return id;
}

bool is_cuttable(const Dfa& interval) {
    return boolsemi::is_distributive(half_state_space(interval, Sign::Minus).space);
}

std::string IdDecomposition::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (auto& t : terms) s += (s.empty() ? "" : " + ") + plus.name(t.u) + " (x) " + minus.name(t.v);
    return s;
}

namespace {

template <class Accept>
Dfa tuple_dfa(const IdDecomposition& id, std::vector<std::size_t> start, Accept accept) {
    const HalfSpace& M = id.minus;
    std::size_t k = M.action.size();
    std::map<std::vector<std::size_t>, int> num{{start, 0}};
    std::vector<std::vector<std::size_t>> states{start};
    Dfa d;
    d.alphabet = M.cls.left.alphabet;
    for (std::size_t i = 0; i < states.size(); ++i) {
        d.delta.emplace_back(k);
        for (std::size_t a = 0; a < k; ++a) {
            auto next = states[i];
            for (auto& x : next) x = M.action[a][x];
            auto [it, fresh] = num.emplace(next, static_cast<int>(states.size()));
            if (fresh) states.push_back(next);
            d.delta[i][a] = it->second;
        }
        d.accepting.push_back(accept(states[i]));
    }
    d.n_states = states.size();
    return lang::minimize(d);
}

}  // namespace

Dfa canonical_circular(const IdDecomposition& id) {
    std::vector<std::size_t> start;
    for (auto& t : id.terms) start.push_back(t.v);
    Dfa d = tuple_dfa(id, start, [&](const std::vector<std::size_t>& st) {
        for (std::size_t i = 0; i < st.size(); ++i)
            if (pair_halves(id.minus, st[i], id.plus, id.terms[i].u)) return true;
        return false;
    });
    if (!lang::is_rotation_closed(d)) throw InvalidAutomaton("canonical circle language is not rotation-closed");
    return d;
}

Dfa canonical_circular_one_sided(const IdDecomposition& id) {
    return tuple_dfa(id, {id.minus.init}, [&](const std::vector<std::size_t>& st) {
        for (auto& t : id.terms)
            if (id.minus.trace[t.v] && pair_halves(id.minus, st[0], id.plus, t.u)) return true;
        return false;
    });
}

}  // namespace booltop::theory
