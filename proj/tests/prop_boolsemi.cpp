// Algebraic laws on spans of random Boolean matrices.

#include "doctest.h"

#include "booltop/boolsemi.hpp"
#include "support.hpp"

using namespace booltop;
using namespace booltop::boolsemi;

TEST_CASE("duality laws on random matrices") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto m = support::random_matrix(rng, 5);
        auto s = span_rows(m);
        auto d = dual(s);
        CHECK(d.space.size() == s.size());
        CHECK(double_dual_isomorphic(s));
        // row and column spans are dual lattices
        CHECK(span_cols(m).size() == s.size());
        CHECK(is_isomorphic(d.space, span_cols(m)));
        for (std::size_t x = 0; x < s.size(); ++x)
            for (std::size_t y = 0; y < s.size(); ++y)
                CHECK(s.leq(x, y) == d.space.leq(d.of_element[y], d.of_element[x]));
    }
}

TEST_CASE("projectivity conditions agree") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = span_rows(support::random_matrix(rng, 4));
        bool dist = is_distributive(s);
        CHECK(dist == retract_of_free(s).has_value());
        CHECK(dist == identity_in_psi_image(s));
        CHECK(dist == !distributivity_counterexample(s).has_value());
        if (dist) {
            auto c = coevaluation(s);
            CHECK(snake_identities(s, c));
        } else {
            CHECK_THROWS_AS(coevaluation(s), NotProjective);
        }
        bool all_prime = true;
        for (auto i : irreducibles(s)) all_prime = all_prime && is_join_prime(s, i);
        CHECK(all_prime == dist);
    }
}

TEST_CASE("canonical matrices present the same semimodule") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        auto m = support::random_matrix(rng, 5);
        auto c = canonical_matrix(m);
        CHECK(is_isomorphic(span_rows(m), span_rows(c)));
        CHECK(canonical_matrix(c) == c);
        CHECK(c.rows() == irreducibles(span_rows(m)).size());
    }
}

TEST_CASE("span presentations agree with enumeration") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        auto m = support::random_matrix(rng, 5);
        Span sp(m.cols(), m.row_list());
        auto s = span_rows(m);
        CHECK(sp.count() == std::optional<std::size_t>(s.size()));
        CHECK(sp.rank() == irreducibles(s).size());
        CHECK(sp.is_distributive() == is_distributive(s));
        for (auto& e : s.elements()) CHECK(sp.contains(e));
    }
}

TEST_CASE("tensor with a distributive factor embeds") {
    std::mt19937 rng(23);
    int checked = 0;
    for (int trial = 0; trial < 60 && checked < 20; ++trial) {
        auto s = span_rows(support::random_matrix(rng, 3));
        auto t = span_rows(support::random_matrix(rng, 3));
        if (!is_distributive(s) && !is_distributive(t)) continue;
        auto full = tensor(s, t);
        auto red = reduced_tensor(s, t);
        CHECK(full.space.size() == red.space.size());
        ++checked;
    }
    CHECK(checked > 0);
}

// Brute force over small lattices: every endomorphism is a join of maps
// x -> (x <= m ? 0 : p) exactly when the lattice is distributive.
TEST_CASE("rank-one maps generate the endomorphisms of projectives") {
    std::mt19937 rng(13);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 40; ++trial) {
        auto s = span_rows(support::random_matrix(rng, 4));
        if (s.size() > 10) continue;
        ++checked;
        auto irr = irreducibles(s);
        std::size_t n = s.size();
        auto rank_one = [&](std::size_t m, std::size_t p, std::size_t x) { return s.leq(x, m) ? s.zero() : p; };

        bool all_generated = true;
        std::vector<std::size_t> img(irr.size(), 0);
        // odometer over images of the irreducibles
        for (;;) {
            std::vector<std::size_t> f(n, s.zero());
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t k = 0; k < irr.size(); ++k)
                    if (s.leq(irr[k], x)) f[x] = s.join(f[x], img[k]);
            bool hom = true;
            for (std::size_t x = 0; x < n && hom; ++x)
                for (std::size_t y = 0; y < n && hom; ++y) hom = f[s.join(x, y)] == s.join(f[x], f[y]);
            if (hom) {
                std::vector<std::size_t> g(n, s.zero());
                for (std::size_t m = 0; m < n; ++m)
                    for (std::size_t p = 0; p < n; ++p) {
                        bool below = true;
                        for (std::size_t x = 0; x < n && below; ++x) below = s.leq(rank_one(m, p, x), f[x]);
                        if (below)
                            for (std::size_t x = 0; x < n; ++x) g[x] = s.join(g[x], rank_one(m, p, x));
                    }
                all_generated = all_generated && g == f;
            }
            std::size_t k = 0;
            while (k < img.size() && ++img[k] == n) img[k++] = 0;
            if (k == img.size()) break;
        }
        CHECK(all_generated == is_distributive(s));
    }
    CHECK(checked >= 20);
}
