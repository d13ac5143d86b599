#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "booltop/boolsemi.hpp"
#include "booltop/lang.hpp"

// The universal construction for a pair (interval language, circle language):
// state spaces of decorated one-dimensional cobordisms modulo the kernel of
// the gluing pairing.
namespace booltop::theory {

using boolsemi::BoolMatrix;
using boolsemi::Semimodule;
using boolsemi::Span;
using lang::Alphabet;
using lang::Dfa;
using lang::Word;

struct Evaluation {
    Alphabet alphabet;
    Dfa dfa_I;     // minimal
    Dfa dfa_circ;  // minimal, rotation-closed

    // Minimises both; throws NotCircular or AlphabetMismatch.
    static Evaluation make(const Dfa& interval, const Dfa& circle);
    bool interval(const Word& w) const { return dfa_I.accepts(w); }
    bool circle(const Word& w) const { return dfa_circ.accepts(w); }
};
Evaluation evaluation_from_regex(const Alphabet& al, std::string_view interval, std::string_view circle);

// AND over all components; empty configuration gives true.
bool alpha_eval(const Evaluation& ev, const std::vector<Word>& intervals, const std::vector<Word>& circles);

enum class Sign { Plus, Minus };

// Myhill-Nerode classes on both sides of a cut. A minus class is a state of
// the minimal DFA for L, a plus class a state of the minimal DFA for L^op.
struct Classes {
    Dfa left, right;
    std::vector<Word> left_words;   // representative per minus class
    std::vector<Word> right_words;  // representative per plus class, in reading order
    BoolMatrix table;               // table[m][p] = L(left_words[m] right_words[p])

    int minus_class(const Word& w) const { return left.run(w); }
    int plus_class(const Word& w) const;
};
Classes classes(const Dfa& interval);

// A(-) lives in coordinates indexed by plus classes and A(+) in coordinates
// indexed by minus classes; both are spanned by the rows/columns of the table.
struct HalfSpace {
    Sign sign = Sign::Minus;
    Classes cls;
    Semimodule space;
    std::vector<std::size_t> word_class;         // class -> element
    std::size_t init = 0;                        // empty word
    std::vector<std::vector<std::size_t>> action;  // [letter][element]
    std::vector<bool> trace;                     // interval value of the element

    std::size_t act(std::size_t x, const Word& w) const;
    std::size_t element_of_word(const Word& w) const;
    // Element name built from class representatives, e.g. <b| or |a<+|b<.
    std::string name(std::size_t x) const;
};
HalfSpace half_state_space(const Dfa& interval, Sign sign);
// Pairing of x in A(-) with y in A(+).
bool pair_halves(const HalfSpace& minus, std::size_t x, const HalfSpace& plus, std::size_t y);

// Reachable part of A(-) under the letter action; isomorphic to the minimal DFA.
Dfa minimal_dfa_from_space(const HalfSpace& h);

struct MinimalNfas {
    std::vector<std::size_t> states;  // irreducibles of A(-); NFA state i is states[i]
    std::uint64_t count = 0;          // number of liftings, saturating
    std::vector<lang::Nfa> nfas;
};
// All liftings of the A(-) action to the irreducibles. Throws LimitExceeded
// when count > limit. With dedup, liftings equal up to renaming states are
// reported once.
MinimalNfas minimal_nfas(const HalfSpace& h, std::uint64_t limit, bool dedup = false);

// Boundary: a sequence of signs written as a string over {+,-}.
using SignSeq = std::string;
SignSeq dual_seq(const SignSeq& eps);  // reversed and flipped

// A decorated diagram with boundary eps. An oriented strand leaves every +
// point and enters every - point. partner[i] >= 0 joins i to partner[i] by an
// arc whose label (stored at both ends) is an element of the arc monoid;
// otherwise the strand is a half interval labelled by a plus or minus class.
struct Diagram {
    std::vector<int> partner;
    std::vector<int> label;
    bool operator==(const Diagram&) const = default;
};

struct PmDiagram {
    enum class Kind { Arc, Pair } kind = Kind::Arc;
    int e = 0;        // Arc: element of the arc monoid
    int p = 0, m = 0;  // Pair: plus class and minus class
};

struct StateSpace {
    SignSeq eps;
    std::vector<Diagram> spanning;
    std::vector<Diagram> dual_spanning;
    BoolMatrix gram;  // spanning x dual_spanning
    Span span;        // generator i is the profile of spanning[i]
};

struct PmStateSpace {
    std::vector<PmDiagram> spanning;  // pairs (minus class outer, plus class inner), then arcs
    BoolMatrix gram;                  // symmetric
    Span span;
    std::vector<std::size_t> class_of;  // spanning index -> class
    std::vector<BitVec> class_profile;
    std::size_t zero_class = 0;
    std::size_t unit = 0;
    std::vector<std::vector<std::size_t>> mult;
};

struct TensorReport {
    SignSeq eps, eps2;
    bool injective = false, surjective = false, iso = false;
    std::optional<std::size_t> card_image, card_target, card_reduced, card_full;
};

struct TqftReport {
    bool holds = true;
    std::vector<TensorReport> checks;
};

// Shared machinery for one evaluation: classes, the arc monoid, and cached
// state spaces.
class Theory {
public:
    explicit Theory(Evaluation ev, Limits lim = default_limits());

    const Evaluation& evaluation() const { return ev_; }
    const Classes& cls() const { return cls_; }
    const lang::Monoid& arcs() const { return arcs_; }
    const Limits& limits() const { return lim_; }
    const HalfSpace& minus() const { return minus_; }
    const HalfSpace& plus() const { return plus_; }

    bool arc_interval(int e, int m, int p) const;  // L(rep m . e . rep p)
    bool arc_circle(int e) const { return circle_[static_cast<std::size_t>(e)]; }
    int plus_after(int e, int p) const;   // class of e . rep p
    int minus_after(int m, int e) const;  // class of rep m . e

    // Value of the closed picture obtained by gluing point i of x to point
    // n-1-i of y, y having boundary dual_seq(eps).
    bool glue(const SignSeq& eps, const Diagram& x, const Diagram& y) const;

    const PmStateSpace& pm() const;
    // reduced: arcs only with labels that are irreducible in A(+-) and have no
    // pair form, half intervals only with irreducible classes.
    const StateSpace& space(const SignSeq& eps, bool reduced = true) const;
    std::vector<Diagram> spanning(const SignSeq& eps, bool reduced) const;

    std::string word(int e) const;  // representative of an arc label
    std::string describe(const SignSeq& eps, const Diagram& d) const;
    std::string describe(const PmDiagram& d) const;

private:
    Evaluation ev_;
    Limits lim_;
    Classes cls_;
    lang::Monoid arcs_;
    std::size_t n_left_ = 0;
    std::vector<bool> circle_;
    std::vector<std::vector<int>> plus_after_;
    HalfSpace minus_, plus_;
    mutable std::unique_ptr<PmStateSpace> pm_;
    mutable std::map<std::pair<SignSeq, bool>, std::unique_ptr<StateSpace>> spaces_;
    mutable std::optional<std::vector<int>> arc_labels_;
    std::vector<int> plus_labels_, minus_labels_;

    const std::vector<int>& reduced_arc_labels() const;
};

PmStateSpace pm_state_space(const Evaluation& ev);
StateSpace general_state_space(const Evaluation& ev, const SignSeq& eps, bool reduced = true);

TensorReport tensor_compare(const Theory& th, const SignSeq& eps, const SignSeq& eps2);
TensorReport tensor_compare(const Evaluation& ev, const SignSeq& eps, const SignSeq& eps2);

// All pairs of nonempty sign sequences with total length <= max_len, the
// (+,-) and (-,+) splits first. Stops at the first failure.
TqftReport tqft_check(const Theory& th, std::size_t max_len);
TqftReport tqft_check(const Evaluation& ev, std::size_t max_len);

struct IdDecomposition {
    HalfSpace minus, plus;
    struct Term {
        std::size_t u;  // element of A(+)
        std::size_t v;  // element of A(-)
    };
    std::vector<Term> terms;
    std::string str() const;  // e.g. |a< (x) <e| + |e< (x) <a|
};
// Throws NotCuttable.
IdDecomposition id_decomposition(const Dfa& interval);
bool is_cuttable(const Dfa& interval);
// Circle value of w is OR_i L(v_i w u_i).
Dfa canonical_circular(const IdDecomposition& id);
// Cut the circle at one place only: OR_i L(w u_i) L(v_i).
Dfa canonical_circular_one_sided(const IdDecomposition& id);

}  // namespace booltop::theory
