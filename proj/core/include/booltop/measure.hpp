#pragma once

#include <string>
#include <vector>

#include "booltop/boolsemi.hpp"
#include "booltop/lang.hpp"
#include "booltop/theory.hpp"

// Size of state spaces as a complexity measure for one language, several
// languages read together, and a circle language relative to its interval.
namespace booltop::measure {

using boolsemi::Semimodule;
using lang::Dfa;

struct Complexity {
    std::size_t card = 0;
    double bits = 0;  // log2(card), informational only
};
Complexity complexity(const Dfa& d);

// Rows: classes of the product automaton; columns: (language, plus class).
Semimodule joint_space(const std::vector<Dfa>& dfas);
Complexity joint_complexity(const std::vector<Dfa>& dfas);

struct Relative {
    std::size_t joint = 0, base = 0;
    double bits = 0;  // log2(joint / base) >= 0
};
// c(second | first)
Relative relative_complexity(const Dfa& first, const Dfa& second);

struct CircRelative {
    std::size_t card_pm = 0;      // |A(+-)|
    std::size_t card_tensor = 0;  // |A(+) (x) A(-)|, reduced
    double bits = 0;
};
CircRelative circ_relative(const theory::Evaluation& ev);

struct LanguageMatrix {
    std::vector<std::string> out_labels, in_labels;
    std::vector<std::vector<Dfa>> grid;  // [out][in]
    Dfa circ;
};
// Half-interval functionals (word, out label) against (in label, word).
Semimodule matrix_language_space(const LanguageMatrix& lm);

}  // namespace booltop::measure
