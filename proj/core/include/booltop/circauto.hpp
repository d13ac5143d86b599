#pragma once

#include <string>
#include <vector>

#include "booltop/lang.hpp"

// Deterministic circular automata. Two commuting actions move the two ends of
// a growing arc around the circle: delta_l appends a letter on the right,
// delta_r prepends one on the left. Forgetting delta_r leaves an ordinary DFA.
namespace booltop::circauto {

using lang::Alphabet;
using lang::Dfa;
using lang::Word;

struct CircularDfa {
    Alphabet alphabet;
    std::size_t n_states = 0;
    std::vector<std::vector<int>> delta_l, delta_r;  // [state][letter]
    int q_in = 0;
    std::vector<bool> accepting;

    int step_l(int q, int a) const { return delta_l[static_cast<std::size_t>(q)][static_cast<std::size_t>(a)]; }
    int step_r(int q, int a) const { return delta_r[static_cast<std::size_t>(q)][static_cast<std::size_t>(a)]; }
};

struct Violation {
    int axiom = 0;  // 1 commuting actions, 2 initial state, 3 terminal states
    int a = -1, b = -1, q = -1;
    std::string str() const;
};

// Empty iff all three axioms hold.
std::vector<Violation> validate_dcfa(const CircularDfa& c);

// State reached from q_in after reading w split as left . right; right is read
// forward by delta_l, left backward by delta_r.
int dcfa_run(const CircularDfa& c, const Word& left, const Word& right);
// Acceptance of the circular word represented by w. Two different splits are
// evaluated; disagreement throws InvalidAutomaton.
bool dcfa_accepts(const CircularDfa& c, const Word& w);

// States are elements of the syntactic monoid. Throws NotCircular.
CircularDfa dcfa_from_language(const Dfa& d);
// States are right-congruence classes of the rotation-closed language;
// delta_r(a, [w]) = [a w] is well defined precisely because of rotation
// closure. Throws NotCircular.
CircularDfa minimal_dcfa(const Dfa& d);
// (Q, delta_l, q_in, accepting) as an ordinary DFA.
Dfa interval_forget(const CircularDfa& c);

// Shortest representative per state, reached with delta_l only.
std::vector<Word> state_words(const CircularDfa& c);

}  // namespace booltop::circauto
