#pragma once

#include <string>
#include <vector>

#include "booltop/boolsemi.hpp"
#include "booltop/theory.hpp"

// Theories built from a Boolean pairing matrix between two label sets plus a
// value for the unlabelled circle, and the four theories with no labels at all.
namespace booltop::pairing {

using boolsemi::BoolMatrix;
using boolsemi::Semimodule;

struct PairingTheory {
    BoolMatrix m;  // rows: labels of strands leaving (S-), columns: labels of strands entering (S+)
    bool lambda = false;
};

// Index of the pure tensor (u, v), u in S+ and v in S-; the cup comes last.
inline std::size_t pure_index(const PairingTheory& t, std::size_t u, std::size_t v) { return u * t.m.rows() + v; }
inline std::size_t cup_index(const PairingTheory& t) { return t.m.rows() * t.m.cols(); }

BoolMatrix extended_gram(const PairingTheory& t);

struct PairingSpace {
    BoolMatrix gram;
    Semimodule space;
    std::vector<std::size_t> element_of;  // spanning index -> element
};
PairingSpace pairing_state_space(const PairingTheory& t);

// Empty alphabet. Case 1: no intervals, no circles. Case 2: circles only.
// Case 3: both. Case 4: intervals only.
theory::Evaluation dotless_theory(int case_id);

}  // namespace booltop::pairing
