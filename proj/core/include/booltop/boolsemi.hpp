#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "booltop/bitvec.hpp"
#include "booltop/errors.hpp"

// Finite Boolean semimodules, i.e. finite join-semilattices with 0, stored as
// OR-closed sets of bit-vectors over some ambient coordinate set.
namespace booltop::boolsemi {

class BoolMatrix {
public:
    BoolMatrix() = default;
    BoolMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), data_(rows, BitVec(cols)) {}
    static BoolMatrix from_rows(const std::vector<std::string>& rows);
    static BoolMatrix from_bitvecs(std::size_t cols, const std::vector<BitVec>& rows);
    static BoolMatrix identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool get(std::size_t r, std::size_t c) const { return data_[r].test(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { data_[r].set(c, v); }
    const BitVec& row(std::size_t r) const { return data_[r]; }
    const std::vector<BitVec>& row_list() const { return data_; }
    BitVec col(std::size_t c) const;
    BoolMatrix transpose() const;
    BoolMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    bool is_symmetric() const;
    std::vector<std::string> to_strings() const;

    bool operator==(const BoolMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && data_ == o.data_; }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<BitVec> data_;
};

class Semimodule {
public:
    // the zero semimodule
    Semimodule() : elements_{BitVec(0)} { index_.emplace(elements_[0], 0); }
    // OR-closure of gens together with zero. Zero and repeated generators are
    // dropped from the generator list. Throws SizeLimit past `limit` elements.
    static Semimodule span(std::size_t dim, const std::vector<BitVec>& gens,
                           std::size_t limit = default_limits().elements);
    static Semimodule free(std::size_t n);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return elements_.size(); }
    // Sorted by string form, so elements()[0] is zero.
    const std::vector<BitVec>& elements() const { return elements_; }
    const BitVec& at(std::size_t i) const { return elements_[i]; }
    const std::vector<BitVec>& generators() const { return gens_; }
    std::vector<std::size_t> generator_indices() const;

    bool contains(const BitVec& v) const { return index_.count(v) != 0; }
    std::size_t index_of(const BitVec& v) const;
    std::size_t zero() const { return 0; }
    std::size_t top() const;
    bool leq(std::size_t i, std::size_t j) const { return elements_[i].subset_of(elements_[j]); }
    std::size_t join(std::size_t i, std::size_t j) const { return index_of(elements_[i] | elements_[j]); }
    // Join of the generators lying below v: the largest element below v.
    BitVec floor(const BitVec& v) const;

private:
    std::size_t dim_ = 0;
    std::vector<BitVec> elements_;
    std::vector<BitVec> gens_;
    std::unordered_map<BitVec, std::size_t, BitVecHash> index_;
};

// A semimodule presented only by a labelled list of generators. Used for
// state spaces that are far too large to enumerate; all tests here work on
// the generator list directly.
class Span {
public:
    Span() = default;
    Span(std::size_t dim, std::vector<BitVec> gens) : dim_(dim), gens_(std::move(gens)) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return gens_.size(); }
    const std::vector<BitVec>& generators() const { return gens_; }
    const BitVec& operator[](std::size_t i) const { return gens_[i]; }

    BitVec join_of(const std::vector<std::size_t>& idx) const;
    // v lies in the span iff the generators below it join up to v.
    bool contains(const BitVec& v) const;
    // One index per irreducible; among equal generators the first is chosen.
    std::vector<std::size_t> irreducible_indices() const;
    std::size_t rank() const { return irreducible_indices().size(); }
    bool is_free() const;
    // Every irreducible is join-prime.
    bool is_distributive() const;
    // Number of elements, or nullopt once it passes limit.
    std::optional<std::size_t> count(std::size_t limit = default_limits().elements) const;
    Semimodule to_semimodule(std::size_t limit = default_limits().elements) const;

private:
    std::size_t dim_ = 0;
    std::vector<BitVec> gens_;
};

// True iff g_i -> h_i extends to a well-defined join-homomorphism
// span(from) -> span(to). Both spans must list the same number of generators.
bool map_well_defined(const Span& from, const Span& to);
// True iff g_i -> h_i extends to an isomorphism of the two spans.
bool same_closure(const Span& a, const Span& b);

Semimodule span_rows(const BoolMatrix& m);
Semimodule span_cols(const BoolMatrix& m);

// Element indices of the irreducibles, in element order.
std::vector<std::size_t> irreducibles(const Semimodule& s);
// Element indices of the meet-irreducibles (top excluded), in element order.
std::vector<std::size_t> meet_irreducibles(const Semimodule& s);

struct CanonicalMatrix {
    BoolMatrix matrix;
    std::vector<std::size_t> kept_rows, kept_cols;
};
CanonicalMatrix canonical_matrix_full(const BoolMatrix& m);
inline BoolMatrix canonical_matrix(const BoolMatrix& m) { return canonical_matrix_full(m).matrix; }

struct Dual {
    Semimodule space;
    // pairing.get(k, x) = value of the k-th dual element on s.at(x)
    BoolMatrix pairing;
    // dual element k is the functional f_a with a = s.at(source[k]);
    // f_a(b) = 0 exactly when b <= a
    std::vector<std::size_t> source;
    // inverse of source
    std::vector<std::size_t> of_element;
};
Dual dual(const Semimodule& s);
// Checks that a -> (f -> f(a)) is an isomorphism s -> s**.
bool double_dual_isomorphic(const Semimodule& s);

struct Lattice {
    std::vector<std::vector<std::size_t>> meet, join;
    std::size_t top = 0, bottom = 0;
};
Lattice lattice(const Semimodule& s);
std::size_t meet(const Semimodule& s, std::size_t a, std::size_t b);

bool is_distributive(const Semimodule& s);
std::optional<std::array<std::size_t, 3>> distributivity_counterexample(const Semimodule& s);
// x <= a v b implies x <= a or x <= b
bool is_join_prime(const Semimodule& s, std::size_t x);

bool is_isomorphic(const Semimodule& s, const Semimodule& t);

// Projection onto the meet-irreducible coordinates; the second member maps
// old element indices to new ones.
std::pair<Semimodule, std::vector<std::size_t>> compress(const Semimodule& s);

struct Tensor {
    Semimodule space;
    // bi-ideal of s x t behind each element of space; pair (a, b) sits at
    // bit a * right_size + b
    std::vector<BitVec> ideals;
    std::size_t left_size = 0, right_size = 0;
    // pure[a][b] = element index of a (x) b
    std::vector<std::vector<std::size_t>> pure;
};
Tensor tensor(const Semimodule& s, const Semimodule& t, const Limits& lim = default_limits());
// Number of elements of the tensor product, or nullopt once it exceeds cap.
std::optional<std::size_t> tensor_size(const Semimodule& s, const Semimodule& t, std::size_t cap);
// Image of the whole tensor under f (x) id for a join-homomorphism f given
// by element indices from.left -> to.left.
std::vector<std::size_t> tensor_map(const Tensor& from, const Tensor& to, const std::vector<std::size_t>& left_map);

struct ReducedTensor {
    Semimodule space;
    std::vector<std::size_t> left_coords, right_coords;
    std::vector<std::vector<std::size_t>> pure;
};
// x -> (x not<= m) over the meet-irreducibles m of s
BitVec embed(const Semimodule& s, std::size_t x, const std::vector<std::size_t>& coords);
ReducedTensor reduced_tensor(const Semimodule& s, const Semimodule& t, const Limits& lim = default_limits());
std::vector<std::size_t> canonical_surjection(const Tensor& full, const ReducedTensor& red);

struct CoevPair {
    std::size_t p;       // irreducible of P
    std::size_t f_source;  // functional is f_a for a = P.at(f_source)
    BitVec f;            // its values on P's elements
};
struct Coevaluation {
    std::vector<CoevPair> pairs;
};
Coevaluation coevaluation(const Semimodule& p);
// Both snake composites are identities.
bool snake_identities(const Semimodule& p, const Coevaluation& c);
// Closing the strand into a circle.
bool ev_coev(const Semimodule& p, const Coevaluation& c);

struct Retract {
    std::vector<std::size_t> basis;  // irreducibles, the coordinates of the free module
    std::vector<BitVec> iota;       // per element of P
};
// P is a retract of B^irr(P) when u -> {x irreducible : x <= u} preserves joins.
std::optional<Retract> retract_of_free(const Semimodule& p);

// Whether id_P lies in the image of P* (x) P -> End(P).
bool identity_in_psi_image(const Semimodule& p, const Limits& lim = default_limits());

Semimodule m3_fixture();
Semimodule n5_fixture();

struct FlatnessReport {
    bool flat = false;
    bool m3_probe_injective = false;
    bool n5_probe_injective = false;
};
FlatnessReport is_flat(const Semimodule& s, const Limits& lim = default_limits());

}  // namespace booltop::boolsemi
