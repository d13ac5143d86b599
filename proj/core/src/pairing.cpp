#include "booltop/pairing.hpp"

namespace booltop::pairing {

BoolMatrix extended_gram(const PairingTheory& t) {
    const BoolMatrix& M = t.m;
    std::size_t n = cup_index(t);
    BoolMatrix g(n + 1, n + 1);
    for (std::size_t u = 0; u < M.cols(); ++u)
        for (std::size_t v = 0; v < M.rows(); ++v) {
            std::size_t i = pure_index(t, u, v);
            for (std::size_t u2 = 0; u2 < M.cols(); ++u2)
                for (std::size_t v2 = 0; v2 < M.rows(); ++v2)
                    g.set(i, pure_index(t, u2, v2), M.get(v, u2) && M.get(v2, u));
            g.set(i, n, M.get(v, u));
            g.set(n, i, M.get(v, u));
        }
    g.set(n, n, t.lambda);
    return g;
}

PairingSpace pairing_state_space(const PairingTheory& t) {
    PairingSpace s;
    s.gram = extended_gram(t);
    s.space = boolsemi::span_rows(s.gram);
    for (std::size_t i = 0; i < s.gram.rows(); ++i) s.element_of.push_back(s.space.index_of(s.gram.row(i)));
    return s;
}

theory::Evaluation dotless_theory(int case_id) {
    static const char* interval[] = {"0", "0", "1", "1"};
    static const char* circle[] = {"0", "1", "1", "0"};
    if (case_id < 1 || case_id > 4) throw Error("InvalidCase", "dotless theories are numbered 1 to 4");
    lang::Alphabet none("");
    return theory::evaluation_from_regex(none, interval[case_id - 1], circle[case_id - 1]);
}

}  // namespace booltop::pairing
