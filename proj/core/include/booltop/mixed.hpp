#pragma once

#include <string>
#include <vector>

#include "booltop/theory.hpp"

// Combined circle/interval automaton: arc states move both ends of an open
// arc, half-interval states carry one end each, and the termination maps cap
// an arc off into a half interval.
namespace booltop::circauto {

struct MixedAutomaton {
    enum class Kind { First, Second };
    Kind kind = Kind::First;
    std::size_t n_arc = 0, n_pair = 0;  // arc states come first, then pair states
    std::vector<std::string> names;
    // [state][letter]; -1 is the shared zero sink (second kind only)
    std::vector<std::vector<int>> delta_l, delta_r;
    std::vector<int> tau_minus, tau_plus;  // state -> minus / plus class, -1 for zero
    std::vector<std::vector<int>> minus_delta, plus_delta;  // class actions
    std::vector<int> minus_zero, plus_zero;  // 1 where the class is the zero element
    std::vector<std::string> minus_names, plus_names;
    int unit_arc = 0;    // arc of the empty word
    int unit_pair = -1;  // pair of empty words, second kind
};

MixedAutomaton mixed_automaton(const theory::Theory& th, MixedAutomaton::Kind kind);
MixedAutomaton mixed_automaton(const theory::Evaluation& ev, MixedAutomaton::Kind kind);

// tau_plus . delta_r,a = a . tau_plus and tau_minus . delta_l,a = tau_minus . a
bool intertwines(const MixedAutomaton& m);

}  // namespace booltop::circauto
