#include "doctest.h"

#include "booltop/boolsemi.hpp"
#include "support.hpp"

using namespace booltop;
using namespace booltop::boolsemi;
using support::matrix;

namespace {

const std::vector<std::string> a1{"01", "11"};
const std::vector<std::string> a2{"001", "010", "111"};
const std::vector<std::string> a3{"001", "011", "111"};
const std::vector<std::string> a4{"110", "101", "011"};

std::vector<std::string> strings(const Semimodule& s) {
    std::vector<std::string> out;
    for (auto& e : s.elements()) out.push_back(e.str());
    return out;
}

}  // namespace

TEST_CASE("bitvec string round trip and order") {
    auto v = BitVec::from_string("0110");
    CHECK(v.str() == "0110");
    CHECK(v.count() == 2);
    CHECK(BitVec::from_string("0010").subset_of(v));
    CHECK_FALSE(BitVec::from_string("1000").subset_of(v));
    CHECK(BitVec::from_string("01").kron(BitVec::from_string("11")).str() == "0011");
    CHECK(BitVec::from_string("01").concat(BitVec::from_string("1")).str() == "011");
    CHECK(BitVec::from_string("0011") < BitVec::from_string("0100"));
}

TEST_CASE("span of rows") {
    CHECK(strings(span_rows(matrix(a1))) == std::vector<std::string>{"00", "01", "11"});
    CHECK(span_rows(matrix({"000", "000"})).size() == 1);
    auto s4 = span_rows(matrix(a4));
    CHECK(s4.size() == 5);
    CHECK(s4.contains(BitVec::from_string("111")));
    CHECK(s4.elements()[0].none());
}

TEST_CASE("span throws past the element ceiling") {
    std::vector<BitVec> gens;
    for (std::size_t i = 0; i < 12; ++i) {
        BitVec v(12);
        v.set(i);
        gens.push_back(v);
    }
    CHECK_THROWS_AS(Semimodule::span(12, gens, 100), SizeLimit);
}

TEST_CASE("irreducibles") {
    auto s4 = span_rows(matrix(a4));
    auto irr = irreducibles(s4);
    REQUIRE(irr.size() == 3);
    for (auto i : irr) CHECK(s4.at(i).count() == 2);
    CHECK(irreducibles(Semimodule::free(3)).size() == 3);
    CHECK(irreducibles(Semimodule()).empty());
}

TEST_CASE("canonical matrix") {
    CHECK(canonical_matrix(BoolMatrix::identity(3)) == BoolMatrix::identity(3));
    // every weight-two column of B^4
    auto w2 = matrix({"111000", "100110", "010101", "001011"});
    auto c = canonical_matrix(w2);
    CHECK(c.rows() == 4);
    CHECK(c.cols() == 6);
    CHECK(span_cols(w2).size() == span_rows(w2).size());
    CHECK(canonical_matrix(matrix({"01", "01", "11"})).rows() == 2);
}

TEST_CASE("duals reverse the order") {
    auto s = span_rows(matrix(a1));
    auto d = dual(s);
    CHECK(d.space.size() == 3);
    for (std::size_t x = 0; x < s.size(); ++x)
        for (std::size_t y = 0; y < s.size(); ++y) {
            auto fx = d.of_element[x], fy = d.of_element[y];
            CHECK(s.leq(x, y) == d.space.leq(fy, fx));
        }
    CHECK(dual(Semimodule::free(2)).space.size() == 4);
    CHECK(double_dual_isomorphic(span_rows(matrix(a4))));
}

TEST_CASE("lattice meets") {
    auto s4 = span_rows(matrix(a4));
    for (auto i : irreducibles(s4))
        for (auto j : irreducibles(s4))
            if (i != j) CHECK(meet(s4, i, j) == s4.zero());
    auto l = lattice(s4);
    CHECK(l.bottom == s4.zero());
    CHECK(s4.at(l.top).str() == "111");
}

TEST_CASE("distributivity of the four small matrices") {
    CHECK(is_distributive(span_rows(matrix(a1))));
    CHECK(is_distributive(span_rows(matrix(a2))));
    CHECK(is_distributive(span_rows(matrix(a3))));
    CHECK_FALSE(is_distributive(span_rows(matrix(a4))));
    CHECK(distributivity_counterexample(span_rows(matrix(a4))).has_value());
    CHECK(is_distributive(Semimodule::free(4)));
    CHECK_FALSE(is_distributive(m3_fixture()));
    CHECK_FALSE(is_distributive(n5_fixture()));
}

TEST_CASE("tensor products") {
    auto t = tensor(Semimodule::free(2), Semimodule::free(3));
    CHECK(t.space.size() == 64);
    auto s = span_rows(matrix(a1));
    CHECK(tensor(s, Semimodule::free(1)).space.size() == s.size());
    auto m3 = m3_fixture();
    CHECK(tensor(m3, m3).space.size() > reduced_tensor(m3, m3).space.size());
    CHECK(reduced_tensor(Semimodule::free(2), Semimodule::free(2)).space.size() == 16);
}

TEST_CASE("canonical surjection is bijective with a distributive factor") {
    auto s = span_rows(matrix(a3));
    auto m = n5_fixture();
    auto full = tensor(s, m);
    auto red = reduced_tensor(s, m);
    auto f = canonical_surjection(full, red);
    std::vector<std::size_t> sorted(f);
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::unique(sorted.begin(), sorted.end()) == sorted.end());
    CHECK(full.space.size() == red.space.size());
}

TEST_CASE("coevaluation and snakes") {
    auto b1 = Semimodule::free(1);
    auto c1 = coevaluation(b1);
    CHECK(c1.pairs.size() == 1);
    for (auto rows : {a1, a2, a3}) {
        auto p = span_rows(matrix(rows));
        auto c = coevaluation(p);
        CHECK(snake_identities(p, c));
        CHECK(ev_coev(p, c));
        CHECK(retract_of_free(p).has_value());
        CHECK(identity_in_psi_image(p));
    }
    auto p4 = span_rows(matrix(a4));
    CHECK_THROWS_AS(coevaluation(p4), NotProjective);
    CHECK_FALSE(retract_of_free(p4).has_value());
    CHECK_FALSE(identity_in_psi_image(p4));
}

TEST_CASE("section for the two-element chain") {
    auto p = span_rows(matrix(a1));
    auto r = retract_of_free(p);
    REQUIRE(r.has_value());
    CHECK(r->basis.size() == 2);
    // the smaller generator goes to one basis vector, the larger to both
    auto x = p.index_of(BitVec::from_string("01"));
    auto y = p.index_of(BitVec::from_string("11"));
    CHECK(r->iota[x].count() == 1);
    CHECK(r->iota[y].count() == 2);
}

TEST_CASE("flatness probes") {
    auto m3 = is_flat(m3_fixture());
    CHECK_FALSE(m3.flat);
    CHECK_FALSE(m3.m3_probe_injective);
    auto n5 = is_flat(n5_fixture());
    CHECK_FALSE(n5.flat);
    CHECK_FALSE(n5.n5_probe_injective);
    auto fr = is_flat(Semimodule::free(2));
    CHECK(fr.flat);
    CHECK(fr.m3_probe_injective);
    CHECK(fr.n5_probe_injective);
}

TEST_CASE("span presentations") {
    Span sp(3, {BitVec::from_string("110"), BitVec::from_string("011"), BitVec::from_string("111")});
    CHECK(sp.rank() == 2);
    CHECK(sp.contains(BitVec::from_string("111")));
    CHECK_FALSE(sp.contains(BitVec::from_string("010")));
    CHECK(sp.count() == std::optional<std::size_t>(4));
    CHECK(sp.is_free());
    CHECK(sp.is_distributive());
    Span other(2, {BitVec::from_string("10"), BitVec::from_string("01"), BitVec::from_string("11")});
    CHECK(same_closure(sp, other));
    Span bad(2, {BitVec::from_string("10"), BitVec::from_string("10"), BitVec::from_string("11")});
    CHECK_FALSE(same_closure(sp, bad));
    CHECK_FALSE(map_well_defined(other, Span(1, {BitVec::from_string("1"), BitVec::from_string("0"),
                                                 BitVec::from_string("0")})));
}

TEST_CASE("compression keeps the lattice") {
    auto s = span_rows(matrix({"1100", "0110", "0011", "1111"}));
    auto [c, map] = compress(s);
    CHECK(c.size() == s.size());
    CHECK(is_isomorphic(s, c));
    CHECK(map.size() == s.size());
}
