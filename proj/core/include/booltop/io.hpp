#pragma once

#include <string>

#include "booltop/boolsemi.hpp"
#include "booltop/circauto.hpp"
#include "booltop/lang.hpp"
#include "booltop/measure.hpp"
#include "booltop/pairing.hpp"

// Text formats. JSON output is compact with keys in a fixed order, so equal
// values print to equal bytes. Parsers throw Error("InvalidJson").
namespace booltop::io {

std::string dfa_json(const lang::Dfa& d);
lang::Dfa dfa_from_json(const std::string& text);
std::string nfa_json(const lang::Nfa& n);
lang::Nfa nfa_from_json(const std::string& text);
std::string dcfa_json(const circauto::CircularDfa& c);
circauto::CircularDfa dcfa_from_json(const std::string& text);

std::string dfa_dot(const lang::Dfa& d, const std::string& name = "dfa");
std::string nfa_dot(const lang::Nfa& n, const std::string& name = "nfa");
// delta_l edges solid, delta_r edges dashed
std::string dcfa_dot(const circauto::CircularDfa& c, const std::string& name = "dcfa");

std::string matrix_json(const boolsemi::BoolMatrix& m);  // list of 0/1 row strings
std::string semimodule_json(const boolsemi::Semimodule& s);

// {"matrix": [[0,1],[1,1]] or ["01","11"], "lambda": 0|1}
pairing::PairingTheory pairing_from_json(const std::string& text);
// {"alphabet":"ab","out":[..],"in":[..],"grid":[[dfa or regex string ..] ..],"circ": dfa or regex}
measure::LanguageMatrix language_matrix_from_json(const std::string& text);

}  // namespace booltop::io
