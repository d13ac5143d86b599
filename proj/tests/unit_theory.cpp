#include "doctest.h"

#include <algorithm>
#include <set>

#include "booltop/theory.hpp"
#include "support.hpp"

using namespace booltop;
using namespace booltop::theory;
using lang::Alphabet;
using support::cat;

namespace {

const Alphabet ab("ab");
const Alphabet a1("a");

std::set<std::string> term_names(const IdDecomposition& id) {
    std::set<std::string> out;
    for (auto& t : id.terms) out.insert(id.plus.name(t.u) + " " + id.minus.name(t.v));
    return out;
}

}  // namespace

TEST_CASE("evaluating closed pictures") {
    auto ev = evaluation_from_regex(a1, support::even, support::even);
    CHECK(alpha_eval(ev, {a1.word("aa")}, {a1.word("aa")}));
    CHECK(alpha_eval(ev, {}, {}));
    CHECK_FALSE(alpha_eval(ev, {a1.word("a")}, {}));
    auto fab = evaluation_from_regex(ab, support::fab, "(a+b)*");
    CHECK(alpha_eval(fab, {}, {lang::Word{}}));
    CHECK_FALSE(alpha_eval(fab, {lang::Word{}}, {}));
}

TEST_CASE("evaluations need a rotation-closed circle language") {
    CHECK_THROWS_AS(evaluation_from_regex(ab, support::penult, support::penult), NotCircular);
    auto i = lang::dfa_from_regex("a", a1);
    auto c = lang::dfa_from_regex("a", ab);
    CHECK_THROWS_AS(Evaluation::make(i, c), AlphabetMismatch);
}

TEST_CASE("half spaces of the penultimate-letter language") {
    auto d = lang::dfa_from_regex(support::penult, ab);
    auto m = half_state_space(d, Sign::Minus);
    auto p = half_state_space(d, Sign::Plus);
    CHECK(m.space.size() == 5);
    CHECK(p.space.size() == 5);
    auto x = m.element_of_word(ab.word("")), y = m.element_of_word(ab.word("b")), z = m.element_of_word(ab.word("ba"));
    CHECK(m.space.join(y, x) == y);
    CHECK(m.space.join(z, x) == z);
    CHECK_FALSE(m.space.leq(y, z));
    CHECK_FALSE(m.space.leq(z, y));
    auto irr = boolsemi::irreducibles(m.space);
    CHECK(std::set<std::size_t>(irr.begin(), irr.end()) == std::set<std::size_t>{x, y, z});
    CHECK_FALSE(boolsemi::is_isomorphic(m.space, p.space));
    // in A(+) one irreducible lies above the other two
    auto ip = boolsemi::irreducibles(p.space);
    REQUIRE(ip.size() == 3);
    int tops = 0;
    for (auto t : ip) {
        int below = 0;
        for (auto s : ip)
            if (s != t && p.space.leq(s, t)) ++below;
        if (below == 2) ++tops;
    }
    CHECK(tops == 1);
}

TEST_CASE("half spaces pair to the language") {
    auto d = lang::dfa_from_regex(support::penult, ab);
    auto m = half_state_space(d, Sign::Minus);
    auto p = half_state_space(d, Sign::Plus);
    for (auto& u : lang::words_up_to(2, 4))
        for (auto& v : lang::words_up_to(2, 4))
            CHECK(pair_halves(m, m.element_of_word(u), p, p.element_of_word(v)) == d.accepts(cat(u, v)));
    for (auto& u : lang::words_up_to(2, 3))
        for (auto& w : lang::words_up_to(2, 3)) CHECK(m.act(m.element_of_word(u), w) == m.element_of_word(cat(u, w)));
}

TEST_CASE("parity language has free halves") {
    auto d = lang::dfa_from_regex(support::even, a1);
    for (auto s : {Sign::Minus, Sign::Plus}) {
        auto h = half_state_space(d, s);
        CHECK(h.space.size() == 4);
        CHECK(boolsemi::irreducibles(h.space).size() == 2);
    }
    CHECK(half_state_space(d, Sign::Minus).cls.table == boolsemi::BoolMatrix::identity(2));
    CHECK(minimal_dfa_from_space(half_state_space(d, Sign::Minus)).n_states == 2);
}

TEST_CASE("minimal DFA read off the state space") {
    auto d = lang::dfa_from_regex(support::penult, ab);
    auto q = minimal_dfa_from_space(half_state_space(d, Sign::Minus));
    CHECK(q.n_states == 4);
    CHECK(lang::equivalent(q, d));
    // unrecoverable words give the zero element as a dead state
    auto dead = lang::dfa_from_regex("a(a+b)*", ab);
    auto h = half_state_space(dead, Sign::Minus);
    auto qd = minimal_dfa_from_space(h);
    CHECK(qd.n_states == dead.n_states);
    CHECK(h.space.at(h.element_of_word(ab.word("b"))).none());
}

TEST_CASE("minimal nondeterministic automata") {
    auto d = lang::dfa_from_regex(support::penult, ab);
    auto h = half_state_space(d, Sign::Minus);
    auto r = minimal_nfas(h, 1000);
    CHECK(r.states.size() == 3);
    CHECK(r.count == 16);
    CHECK(r.nfas.size() == 16);
    CHECK_THROWS_AS(minimal_nfas(h, 3), LimitExceeded);
    auto free = minimal_nfas(half_state_space(lang::dfa_from_regex(support::even, a1), Sign::Minus), 10);
    CHECK(free.count == 1);
}

TEST_CASE("pm space of even/even") {
    Theory th(evaluation_from_regex(a1, support::even, support::even));
    const auto& pm = th.pm();
    CHECK(pm.span.is_free());
    CHECK(pm.span.rank() == 4);
    CHECK(pm.gram.is_symmetric());
    std::vector<std::string> names;
    for (auto& d : pm.spanning) names.push_back(th.describe(d));
    CHECK(names == std::vector<std::string>{"pair(1,1)", "pair(a,1)", "pair(1,a)", "pair(a,a)", "arc(1)", "arc(a)"});
    CHECK((pm.span[0] | pm.span[3]) == pm.span[4]);
    CHECK(pm.mult[pm.class_of[5]][pm.class_of[5]] == pm.class_of[4]);
}

TEST_CASE("general state spaces") {
    auto ev = evaluation_from_regex(a1, support::even, support::even);
    Theory th(ev);
    auto plus = th.space("+");
    CHECK(plus.span.count() == std::optional<std::size_t>(th.plus().space.size()));
    auto pp = th.space("++");
    CHECK(pp.span.is_free());
    CHECK(pp.span.rank() == 4);
    auto mm = th.space("--");
    CHECK(pp.gram.rows() > 0);
    CHECK(mm.span.rank() == 4);
    auto g = general_state_space(ev, "+-");
    CHECK(g.span.rank() == 4);
    // raw and reduced spanning sets give the same module
    CHECK(th.space("+-+", false).span.count() == th.space("+-+", true).span.count());
}

TEST_CASE("pairing of A(++) with A(--) is a permutation") {
    Theory th(evaluation_from_regex(a1, support::even, support::even));
    const auto& pp = th.space("++");
    auto irr = pp.span.irreducible_indices();
    REQUIRE(irr.size() == 4);
    const auto& mm = th.space("--");
    auto irr2 = mm.span.irreducible_indices();
    REQUIRE(irr2.size() == 4);
    for (auto i : irr) {
        int ones = 0;
        for (auto j : irr2) ones += th.glue("++", pp.spanning[i], mm.spanning[j]);
        CHECK(ones == 1);
    }
}

TEST_CASE("tensor comparison") {
    auto free = tensor_compare(evaluation_from_regex(a1, support::even, support::even), "+", "-");
    CHECK(free.iso);
    auto all = tensor_compare(evaluation_from_regex(a1, support::even, "a*"), "+", "-");
    CHECK(all.injective);
    CHECK_FALSE(all.surjective);
    CHECK_FALSE(all.iso);
}

TEST_CASE("decompositions of the identity") {
    auto even = id_decomposition(lang::dfa_from_regex(support::even, a1));
    CHECK(term_names(even) == std::set<std::string>{"|1< <1|", "|a< <a|"});
    auto fab = id_decomposition(lang::dfa_from_regex(support::fab, ab));
    CHECK(term_names(fab) == std::set<std::string>{"|a< <1|", "|1< <a|"});
    auto pen = id_decomposition(lang::dfa_from_regex(support::penult, ab));
    CHECK(pen.terms.size() == 3);
    // words of length >= 2: the two halves always add up to length 2
    auto two = id_decomposition(lang::dfa_from_regex("aaa*", a1));
    CHECK(term_names(two) == std::set<std::string>{"|aa< <1|", "|a< <a|", "|1< <aa|"});
    CHECK(is_cuttable(lang::all_words(ab)));
    CHECK(id_decomposition(lang::all_words(ab)).terms.size() == 1);
}

TEST_CASE("a non-distributive half space cannot be cut") {
    // three prefixes pairing with three suffixes two at a time
    auto d = lang::dfa_from_regex(support::uncuttable, ab);
    CHECK_FALSE(is_cuttable(d));
    auto h = half_state_space(d, Sign::Minus);
    CHECK_FALSE(boolsemi::is_distributive(h.space));
    try {
        id_decomposition(d);
        FAIL("no throw");
    } catch (const NotCuttable& e) {
        CHECK(h.space.leq(e.x, h.space.join(e.a, e.b)));
        CHECK_FALSE(h.space.leq(e.x, e.a));
        CHECK_FALSE(h.space.leq(e.x, e.b));
    }
}

TEST_CASE("canonical circle languages") {
    auto even = lang::dfa_from_regex(support::even, a1);
    CHECK(lang::equivalent(canonical_circular(id_decomposition(even)), even));
    for (auto n : {1, 2, 3}) {
        std::string re(static_cast<std::size_t>(n), 'a');
        // every identity term glues to a^n, so even the empty circle is accepted
        auto d = lang::dfa_from_regex(re + "a*", a1);
        CHECK(lang::equivalent(canonical_circular(id_decomposition(d)), lang::all_words(a1)));
    }
    auto fab = lang::dfa_from_regex(support::fab, ab);
    auto c = canonical_circular(id_decomposition(fab));
    CHECK(c.accepts({}));
    CHECK_FALSE(c.accepts(ab.word("a")));
    CHECK(lang::is_rotation_closed(c));
    // cutting at a single place loses rotation invariance
    CHECK_FALSE(lang::is_rotation_closed(canonical_circular_one_sided(id_decomposition(fab))));

    // the two cuts agree on parity but not on a+, where only one glues the empty circle
    auto same = [](const Dfa& d) {
        auto id = id_decomposition(d);
        return lang::equivalent(canonical_circular(id), canonical_circular_one_sided(id));
    };
    CHECK(same(even));
    CHECK(same(lang::dfa_from_regex("a*", a1)));
    CHECK_FALSE(same(lang::dfa_from_regex("aa*", a1)));
    CHECK_FALSE(canonical_circular_one_sided(id_decomposition(lang::dfa_from_regex("aa*", a1))).accepts({}));
}

TEST_CASE("tqft checks") {
    CHECK(tqft_check(evaluation_from_regex(a1, support::even, support::even), 4).holds);
    auto odd = evaluation_from_regex(a1, support::even, "a(aa)*");
    CHECK(is_cuttable(odd.dfa_I));
    CHECK_FALSE(tensor_compare(odd, "+", "-").iso);
    CHECK_FALSE(tqft_check(odd, 2).holds);
    auto trivial = evaluation_from_regex(ab, "(a+b)*", "(a+b)*");
    Theory th(trivial);
    CHECK(th.pm().span.rank() == 1);
    CHECK(tqft_check(th, 4).holds);
}
