#pragma once

#include <random>
#include <string>
#include <vector>

#include "booltop/boolsemi.hpp"
#include "booltop/lang.hpp"

// Shared helpers: fixtures and random inputs with fixed seeds.
namespace support {

using booltop::lang::Alphabet;
using booltop::lang::Dfa;
using booltop::lang::Word;

inline const char* penult = "(a+b)*b(a+b)";
inline const char* even = "(aa)*";
inline const char* fab = "(a+b)*b(aa)*a+(aa)*a";
inline const char* faa = "(a+b)*aa(a+b)*+a(a+b)*a+a";
inline const char* uncuttable = "aaaa+aaab+abaa+abbb+baab+babb";
inline const char* abab = "(a+b)*a(a+b)*b(a+b)*a(a+b)*b(a+b)*";

inline Word cat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Uniform random complete DFA, minimised.
inline Dfa random_dfa(std::mt19937& rng, const Alphabet& al, std::size_t max_states) {
    std::uniform_int_distribution<std::size_t> ns(1, max_states);
    Dfa d;
    d.alphabet = al;
    d.n_states = ns(rng);
    std::uniform_int_distribution<int> st(0, static_cast<int>(d.n_states) - 1);
    d.delta.assign(d.n_states, std::vector<int>(al.size()));
    d.accepting.assign(d.n_states, false);
    for (std::size_t q = 0; q < d.n_states; ++q) {
        for (auto& t : d.delta[q]) t = st(rng);
        d.accepting[q] = rng() % 2;
    }
    return booltop::lang::minimize(d);
}

// Rotation closure of a random DFA, redrawn while the closure is too large
// (five states can already give half a million).
inline Dfa random_circular(std::mt19937& rng, const Alphabet& al, std::size_t max_states, std::size_t cap = 2000) {
    for (;;) {
        try {
            return booltop::lang::rotation_closure(random_dfa(rng, al, max_states), cap);
        } catch (const booltop::SizeLimit&) {
        }
    }
}

inline booltop::boolsemi::BoolMatrix random_matrix(std::mt19937& rng, std::size_t max_dim) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::size_t r = dim(rng), c = dim(rng);
    booltop::boolsemi::BoolMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() % 2);
    return m;
}

inline booltop::boolsemi::BoolMatrix matrix(const std::vector<std::string>& rows) {
    return booltop::boolsemi::BoolMatrix::from_rows(rows);
}

}  // namespace support
