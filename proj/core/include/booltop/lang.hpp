#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "booltop/errors.hpp"

// Regular-language machinery: regexes, NFAs, complete DFAs, minimisation,
// syntactic monoids, rotation closure and cyclic derivatives.
namespace booltop::lang {

using Word = std::vector<int>;

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string_view letters);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    char letter(std::size_t i) const { return letters_[i]; }
    int index(char c) const;  // -1 when absent
    const std::string& letters() const { return letters_; }

    Word word(std::string_view s) const;  // throws UnknownLetter
    std::string str(const Word& w) const;

    bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }

private:
    std::string letters_;
};

// Lexicographically least rotation; circular words are stored this way.
Word canonical_rotation(const Word& w);

// All words of length <= n in length-then-lexicographic order.
std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t n);

struct RegexAst {
    enum class Kind { Empty, Eps, Letter, Union, Concat, Star };
    Kind kind = Kind::Empty;
    int letter = -1;
    std::vector<std::shared_ptr<const RegexAst>> kids;

    std::string str(const Alphabet& al) const;
};
using Regex = std::shared_ptr<const RegexAst>;

// Juxtaposition concatenates, '+' is union, '*' is star, '1' is the empty
// word and '0' the empty language. Blanks are ignored.
Regex parse_regex(std::string_view text, const Alphabet& al);

struct Nfa {
    Alphabet alphabet;
    std::size_t n_states = 0;
    std::vector<std::vector<std::vector<int>>> delta;  // [state][letter] -> sorted states
    std::vector<int> inits;
    std::vector<bool> accepting;

    bool accepts(const Word& w) const;
};

struct Dfa {
    Alphabet alphabet;
    std::size_t n_states = 0;
    std::vector<std::vector<int>> delta;  // [state][letter]
    int init = 0;
    std::vector<bool> accepting;

    int run(int q, const Word& w) const {
        for (int a : w) q = delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(a)];
        return q;
    }
    int run(const Word& w) const { return run(init, w); }
    bool accepts(const Word& w) const { return accepting[static_cast<std::size_t>(run(w))]; }
    bool operator==(const Dfa& o) const {
        return alphabet == o.alphabet && n_states == o.n_states && delta == o.delta && init == o.init &&
               accepting == o.accepting;
    }
};

Nfa compile(const Regex& r, const Alphabet& al);
// Subset construction; throws SizeLimit past max_states subsets.
Dfa determinize(const Nfa& n, std::size_t max_states = SIZE_MAX);
// Unique minimal complete DFA, states numbered in breadth-first order from
// the initial state (letters in alphabet order).
Dfa minimize(const Dfa& d);
Dfa dfa_from_regex(std::string_view text, const Alphabet& al);

Dfa intersect(const Dfa& a, const Dfa& b);
Dfa unite(const Dfa& a, const Dfa& b);
Dfa complement(const Dfa& a);
bool is_empty(const Dfa& a);
bool equivalent(const Dfa& a, const Dfa& b);
bool subset(const Dfa& a, const Dfa& b);
Dfa opposite(const Dfa& d);
Dfa all_words(const Alphabet& al);
Dfa no_words(const Alphabet& al);
Dfa only_empty_word(const Alphabet& al);

// Shortest word reaching each state (breadth-first, ties lexicographic).
std::vector<Word> access_words(const Dfa& d);

struct Monoid {
    Alphabet alphabet;
    std::vector<std::vector<int>> maps;  // state transformation per element
    std::vector<Word> reps;
    std::vector<std::vector<std::size_t>> mult;  // mult[x][y]: x then y
    std::size_t identity = 0;
    std::vector<bool> in_language;  // acceptance of the representative
    std::vector<std::size_t> letter_elems;

    std::size_t size() const { return maps.size(); }
    std::size_t of_word(const Word& w) const;
    std::size_t letter(int a) const { return letter_elems[static_cast<std::size_t>(a)]; }
};

// Transition monoid of the minimised DFA; elements in breadth-first order of
// their shortest representatives.
Monoid syntactic_monoid(const Dfa& d);
// Transition monoid of the given DFA as is (no minimisation).
Monoid transition_monoid(const Dfa& d);

Nfa rotation_closure_nfa(const Dfa& d);
// Can be exponentially larger than d, hence the cap.
Dfa rotation_closure(const Dfa& d, std::size_t max_states = default_limits().elements);
bool is_rotation_closed(const Dfa& d);

std::set<Word> cyclic_derivative_word(const Word& w, int a);
// For rotation-closed L, the union of the derivatives of its circular words
// is the left quotient {u : a u in L}.
Nfa cyclic_derivative_lang(const Dfa& d, int a);

// Word membership helper for NFAs and DFAs up to a length.
std::set<Word> language_up_to(const Nfa& n, std::size_t len);
std::set<Word> language_up_to(const Dfa& d, std::size_t len);

}  // namespace booltop::lang
