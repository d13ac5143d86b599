#include "doctest.h"

#include "booltop/measure.hpp"
#include "booltop/pairing.hpp"
#include "support.hpp"

using namespace booltop;
using namespace booltop::measure;
using lang::Alphabet;

TEST_CASE("single-language complexity") {
    Alphabet ab("ab"), a1("a");
    auto pen = lang::dfa_from_regex(support::penult, ab);
    CHECK(complexity(pen).card == 5);
    CHECK(complexity(lang::minimize(lang::opposite(pen))).card == 5);
    CHECK(complexity(lang::dfa_from_regex(support::even, a1)).card == 4);
    CHECK(complexity(lang::dfa_from_regex(support::even, a1)).bits == doctest::Approx(2.0));
    CHECK(complexity(lang::no_words(ab)).card == 1);
}

TEST_CASE("joint and relative complexity") {
    Alphabet ab("ab"), a1("a");
    auto pen = lang::dfa_from_regex(support::penult, ab);
    CHECK(relative_complexity(pen, pen).joint == relative_complexity(pen, pen).base);
    CHECK(relative_complexity(pen, lang::no_words(ab)).joint == 5);
    auto even = lang::dfa_from_regex(support::even, a1);
    auto all = lang::all_words(a1);
    auto j = joint_space({even, all});
    // a* only adds a coordinate that is 1 on every nonzero row
    CHECK(j.size() == 4);
    CHECK(joint_complexity({even, even}).card == 4);
}

TEST_CASE("circle relative to interval") {
    Alphabet a1("a");
    auto ee = circ_relative(theory::evaluation_from_regex(a1, support::even, support::even));
    CHECK(ee.card_pm == 16);
    CHECK(ee.card_tensor == 16);
    auto ea = circ_relative(theory::evaluation_from_regex(a1, support::even, "a*"));
    CHECK(ea.card_pm > ea.card_tensor);
    auto triv = circ_relative(pairing::dotless_theory(3));
    CHECK(triv.card_pm == triv.card_tensor);
}

TEST_CASE("matrix of languages") {
    Alphabet ab("ab");
    auto pen = lang::dfa_from_regex(support::penult, ab);
    auto aa = lang::dfa_from_regex(support::faa, ab);
    LanguageMatrix one{{"x"}, {"y"}, {{pen}}, lang::all_words(ab)};
    CHECK(matrix_language_space(one).size() == 5);
    LanguageMatrix two{{"x"}, {"y", "z"}, {{pen, aa}}, lang::all_words(ab)};
    CHECK(matrix_language_space(two).size() == joint_space({pen, aa}).size());
}
