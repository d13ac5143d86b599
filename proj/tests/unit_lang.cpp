#include "doctest.h"

#include <set>

#include "booltop/lang.hpp"
#include "support.hpp"

using namespace booltop;
using namespace booltop::lang;

namespace {

std::set<std::string> strs(const Alphabet& al, const std::set<Word>& ws) {
    std::set<std::string> out;
    for (auto& w : ws) out.insert(al.str(w));
    return out;
}

std::set<std::string> set_of(std::initializer_list<const char*> words) { return {words.begin(), words.end()}; }

}  // namespace

TEST_CASE("alphabet") {
    Alphabet al("ab");
    CHECK(al.index('b') == 1);
    CHECK(al.index('c') == -1);
    CHECK(al.word("ba") == Word{1, 0});
    CHECK_THROWS_AS(al.word("abc"), UnknownLetter);
    CHECK(canonical_rotation(al.word("bab")) == al.word("abb"));
    CHECK(words_up_to(2, 2).size() == 7);
}

TEST_CASE("regex parsing") {
    Alphabet al("ab");
    CHECK(parse_regex("1", al)->kind == RegexAst::Kind::Eps);
    CHECK(parse_regex("0", al)->kind == RegexAst::Kind::Empty);
    auto r = parse_regex("a(1+b)*", al);
    REQUIRE(r->kind == RegexAst::Kind::Concat);
    CHECK(r->kids[0]->kind == RegexAst::Kind::Letter);
    REQUIRE(r->kids[1]->kind == RegexAst::Kind::Star);
    auto u = r->kids[1]->kids[0];
    REQUIRE(u->kind == RegexAst::Kind::Union);
    CHECK(u->kids[0]->kind == RegexAst::Kind::Eps);
    CHECK(u->kids[1]->letter == 1);
    CHECK(parse_regex(support::penult, al)->kind == RegexAst::Kind::Concat);
}

TEST_CASE("regex syntax errors carry an offset") {
    Alphabet al("ab");
    CHECK_THROWS_AS(parse_regex("(a", al), SyntaxError);
    CHECK_THROWS_AS(parse_regex("a+", al), SyntaxError);
    CHECK_THROWS_AS(parse_regex("c", al), UnknownLetter);
    try {
        parse_regex("ab)", al);
        FAIL("no throw");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 2);
    }
}

TEST_CASE("minimal automata for the penultimate-letter language") {
    Alphabet al("ab");
    auto d = dfa_from_regex(support::penult, al);
    CHECK(d.n_states == 4);
    CHECK(minimize(opposite(d)).n_states == 4);
    CHECK(d.accepts(al.word("ba")));
    CHECK_FALSE(d.accepts(al.word("ab")));
    CHECK(is_empty(intersect(d, complement(d))));
    CHECK(equivalent(unite(d, complement(d)), all_words(al)));
    CHECK(subset(no_words(al), d));
    CHECK_FALSE(subset(d, only_empty_word(al)));
}

TEST_CASE("syntactic monoids") {
    Alphabet al("ab");
    auto m = syntactic_monoid(dfa_from_regex(support::penult, al));
    std::vector<std::string> reps;
    for (auto& r : m.reps) reps.push_back(al.str(r));
    CHECK(reps == std::vector<std::string>{"", "a", "b", "aa", "ab", "ba", "bb"});
    CHECK(syntactic_monoid(all_words(al)).size() == 1);
    CHECK(syntactic_monoid(dfa_from_regex(support::even, Alphabet("a"))).size() == 2);
    CHECK(m.mult[m.of_word(al.word("a"))][m.of_word(al.word("b"))] == m.of_word(al.word("ab")));
    CHECK(m.of_word(al.word("aab")) == m.of_word(al.word("ab")));
}

TEST_CASE("rotation closure") {
    Alphabet al("ab");
    CHECK(is_rotation_closed(dfa_from_regex(support::faa, al)));
    CHECK_FALSE(is_rotation_closed(dfa_from_regex(support::penult, al)));
    CHECK(is_rotation_closed(all_words(al)));
    auto r = rotation_closure(dfa_from_regex("ab", al));
    CHECK(r.accepts(al.word("ba")));
    CHECK(is_rotation_closed(r));
}

TEST_CASE("cyclic derivative of words") {
    Alphabet abc("abc");
    CHECK(strs(abc, cyclic_derivative_word(abc.word("babbcaa"), 0)) ==
          set_of({"bbcaab", "ababbc", "babbca"}));
    Alphabet ab("ab");
    CHECK(strs(ab, cyclic_derivative_word(ab.word("baba"), 0)) == set_of({"bab"}));
    CHECK(cyclic_derivative_word(ab.word("bb"), 0).empty());
}

TEST_CASE("cyclic derivative of a language") {
    Alphabet al("ab");
    auto a_only = dfa_from_regex("a*", al);
    CHECK(language_up_to(cyclic_derivative_lang(a_only, 1), 6).empty());
    auto d = cyclic_derivative_lang(dfa_from_regex(support::faa, al), 0);
    CHECK(d.accepts(al.word("a")));
    CHECK(d.accepts(al.word("ba")));
    CHECK_FALSE(d.accepts(al.word("b")));
}

TEST_CASE("nfa acceptance and determinisation agree") {
    Alphabet al("ab");
    auto n = compile(parse_regex(support::penult, al), al);
    auto d = determinize(n);
    for (auto& w : words_up_to(2, 6)) CHECK(n.accepts(w) == d.accepts(w));
}

TEST_CASE("access words are shortest") {
    Alphabet al("ab");
    auto d = dfa_from_regex(support::penult, al);
    auto w = access_words(d);
    CHECK(w[static_cast<std::size_t>(d.init)].empty());
    for (std::size_t q = 0; q < d.n_states; ++q) CHECK(d.run(w[q]) == static_cast<int>(q));
}
