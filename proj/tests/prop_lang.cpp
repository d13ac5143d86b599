// Random regexes and automata checked against brute-force definitions.

#include "doctest.h"

#include <functional>
#include <map>
#include <set>

#include "booltop/lang.hpp"
#include "support.hpp"

using namespace booltop;
using namespace booltop::lang;

namespace {

std::string random_regex(std::mt19937& rng, int depth) {
    int pick = static_cast<int>(rng() % (depth <= 0 ? 4 : 8));
    switch (pick) {
        case 0: return "1";
        case 1: return depth > 2 ? "0" : "a";
        case 2: return "a";
        case 3: return "b";
        case 4: return "(" + random_regex(rng, depth - 1) + "+" + random_regex(rng, depth - 1) + ")";
        case 5:
        case 6: return "(" + random_regex(rng, depth - 1) + random_regex(rng, depth - 1) + ")";
        default: return "(" + random_regex(rng, depth - 1) + ")*";
    }
}

// Direct semantics of the AST on a slice of the word.
bool matches(const Regex& r, const Word& w, std::size_t i, std::size_t j) {
    using K = RegexAst::Kind;
    switch (r->kind) {
        case K::Empty: return false;
        case K::Eps: return i == j;
        case K::Letter: return j == i + 1 && w[i] == r->letter;
        case K::Union:
            for (auto& k : r->kids)
                if (matches(k, w, i, j)) return true;
            return false;
        case K::Concat: {
            std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t kid, std::size_t from) {
                if (kid == r->kids.size()) return from == j;
                for (std::size_t m = from; m <= j; ++m)
                    if (matches(r->kids[kid], w, from, m) && go(kid + 1, m)) return true;
                return false;
            };
            return go(0, i);
        }
        case K::Star:
            if (i == j) return true;
            for (std::size_t m = i + 1; m <= j; ++m)
                if (matches(r->kids[0], w, i, m) && matches(r, w, m, j)) return true;
            return false;
    }
    return false;
}

}  // namespace

TEST_CASE("compiled regexes agree with the syntax tree") {
    std::mt19937 rng(7);
    Alphabet al("ab");
    auto words = words_up_to(2, 7);
    for (int trial = 0; trial < 60; ++trial) {
        auto text = random_regex(rng, 4);
        auto ast = parse_regex(text, al);
        auto d = dfa_from_regex(text, al);
        auto n = compile(ast, al);
        for (auto& w : words) {
            bool want = matches(ast, w, 0, w.size());
            REQUIRE_MESSAGE(d.accepts(w) == want, text << " on " << al.str(w));
            REQUIRE(n.accepts(w) == want);
        }
        CHECK(dfa_from_regex(ast->str(al), al) == d);
    }
}

TEST_CASE("minimal DFA size equals the number of residuals") {
    std::mt19937 rng(11);
    Alphabet al("ab");
    auto prefixes = words_up_to(2, 6);
    auto tests = words_up_to(2, 6);
    for (int trial = 0; trial < 40; ++trial) {
        auto d = support::random_dfa(rng, al, 6);
        std::set<std::vector<bool>> residuals;
        for (auto& u : prefixes) {
            std::vector<bool> row;
            for (auto& v : tests) row.push_back(d.accepts(support::cat(u, v)));
            residuals.insert(row);
        }
        CHECK(residuals.size() == d.n_states);
        CHECK(minimize(d) == d);
    }
}

TEST_CASE("opposite reverses words and the monoid matches the congruence") {
    std::mt19937 rng(13);
    Alphabet al("ab");
    auto words = words_up_to(2, 5);
    for (int trial = 0; trial < 20; ++trial) {
        auto d = support::random_dfa(rng, al, 4);
        auto op = opposite(d);
        for (auto& w : words) CHECK(op.accepts(Word(w.rbegin(), w.rend())) == d.accepts(w));
        auto m = syntactic_monoid(d);
        // two words share an element iff they have the same two-sided contexts
        auto ctx = words_up_to(2, 3);
        for (auto& u : words_up_to(2, 3))
            for (auto& v : words_up_to(2, 3)) {
                bool same = true;
                for (auto& x : ctx)
                    for (auto& y : ctx)
                        same = same && d.accepts(support::cat(support::cat(x, u), y)) ==
                                           d.accepts(support::cat(support::cat(x, v), y));
                // with at most four states, contexts of length 3 reach and separate everything
                CHECK(same == (m.of_word(u) == m.of_word(v)));
            }
    }
}

TEST_CASE("rotation closure contains exactly the rotations") {
    std::mt19937 rng(17);
    Alphabet al("ab");
    for (int trial = 0; trial < 20; ++trial) {
        auto d = support::random_dfa(rng, al, 4);
        auto r = rotation_closure(d);
        CHECK(is_rotation_closed(r));
        CHECK(is_rotation_closed(d) == equivalent(d, r));
        for (auto& w : words_up_to(2, 7)) {
            bool any = false;
            for (std::size_t k = 0; k <= w.size() && !any; ++k) {
                Word rot(w.begin() + static_cast<long>(k), w.end());
                rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(k));
                any = d.accepts(rot);
            }
            CHECK(r.accepts(w) == any);
        }
    }
}

TEST_CASE("derivative of a circular language against the word-level derivative") {
    std::mt19937 rng(19);
    Alphabet al("ab");
    for (int trial = 0; trial < 10; ++trial) {
        auto d = support::random_circular(rng, al, 4);
        for (int a = 0; a < 2; ++a) {
            std::set<Word> oracle;
            for (auto& w : words_up_to(2, 8))
                if (d.accepts(w))
                    for (auto& u : cyclic_derivative_word(w, a)) oracle.insert(u);
            auto n = cyclic_derivative_lang(d, a);
            for (auto& u : words_up_to(2, 7)) CHECK(n.accepts(u) == (oracle.count(u) == 1));
        }
    }
}
