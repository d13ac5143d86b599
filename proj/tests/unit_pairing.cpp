#include "doctest.h"

#include "booltop/pairing.hpp"
#include "support.hpp"

using namespace booltop;
using namespace booltop::pairing;
using support::matrix;

TEST_CASE("extended gram for the two-by-two matrix") {
    PairingTheory t{matrix({"01", "11"}), true};
    CHECK(extended_gram(t).to_strings() == std::vector<std::string>{"00010", "01011", "00111", "11111", "01111"});
    t.lambda = false;
    CHECK(extended_gram(t).to_strings() == std::vector<std::string>{"00010", "01011", "00111", "11111", "01110"});
    CHECK(extended_gram({matrix({"1"}), true}).to_strings() == std::vector<std::string>{"11", "11"});
}

TEST_CASE("the cup in the quotient") {
    PairingTheory t{matrix({"01", "11"}), true};
    auto s = pairing_state_space(t);
    auto el = [&](std::size_t i) { return s.element_of[i]; };
    auto xy = pure_index(t, 0, 1), yx = pure_index(t, 1, 0), xx = pure_index(t, 0, 0), yy = pure_index(t, 1, 1);
    auto cup = cup_index(t);
    CHECK(el(cup) == s.space.join(el(xy), el(yx)));

    t.lambda = false;
    s = pairing_state_space(t);
    CHECK(s.space.join(el(cup), el(yy)) == el(yy));
    CHECK(s.space.join(el(cup), el(xx)) == el(cup));
    CHECK(s.space.join(el(cup), el(xy)) == s.space.join(el(cup), el(yx)));
    CHECK(el(cup) != s.space.join(el(xy), el(yx)));
    (void)xx;
}

TEST_CASE("identity pairing") {
    PairingTheory t{boolsemi::BoolMatrix::identity(2), true};
    auto s = pairing_state_space(t);
    CHECK(boolsemi::irreducibles(s.space).size() == 4);
    auto d = s.element_of[pure_index(t, 0, 0)], e = s.element_of[pure_index(t, 1, 1)];
    CHECK(s.element_of[cup_index(t)] == s.space.join(d, e));
}

TEST_CASE("dotless theories") {
    CHECK_THROWS(dotless_theory(0));
    CHECK_THROWS(dotless_theory(5));
    for (int c = 1; c <= 4; ++c) {
        auto ev = dotless_theory(c);
        CHECK(ev.alphabet.empty());
        CHECK(ev.interval({}) == (c >= 3));
        CHECK(ev.circle({}) == (c == 2 || c == 3));
    }
}
