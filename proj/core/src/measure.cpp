#include "booltop/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace booltop::measure {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

double log2_of(double x) { return x <= 0 ? 0 : std::log2(x); }

// Reachable tuples of states when all automata read the same word, with a
// shortest word reaching each tuple.
std::vector<lang::Word> product_words(const std::vector<const Dfa*>& ds) {
    std::size_t k = ds.empty() ? 0 : ds[0]->alphabet.size();
    std::vector<int> start;
    for (auto* d : ds) start.push_back(d->init);
    std::map<std::vector<int>, std::size_t> seen{{start, 0}};
    std::vector<std::vector<int>> states{start};
    std::vector<lang::Word> words{{}};
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t a = 0; a < k; ++a) {
            auto next = states[i];
            for (std::size_t j = 0; j < ds.size(); ++j) next[j] = ds[j]->delta[sz(next[j])][a];
            if (seen.emplace(next, states.size()).second) {
                states.push_back(next);
                auto w = words[i];
                w.push_back(static_cast<int>(a));
                words.push_back(std::move(w));
            }
        }
    return words;
}

void same_alphabet(const std::vector<const Dfa*>& ds) {
    for (auto* d : ds)
        if (!(d->alphabet == ds[0]->alphabet)) throw AlphabetMismatch();
}

}  // namespace

Complexity complexity(const Dfa& d) {
    Complexity c;
    c.card = theory::half_state_space(d, theory::Sign::Minus).space.size();
    c.bits = log2_of(static_cast<double>(c.card));
    return c;
}

Semimodule joint_space(const std::vector<Dfa>& dfas) {
    LanguageMatrix lm;
    lm.out_labels = {"*"};
    lm.grid.emplace_back();
    for (std::size_t i = 0; i < dfas.size(); ++i) {
        lm.in_labels.push_back(std::to_string(i));
        lm.grid[0].push_back(dfas[i]);
    }
    return matrix_language_space(lm);
}

Complexity joint_complexity(const std::vector<Dfa>& dfas) {
    Complexity c;
    c.card = joint_space(dfas).size();
    c.bits = log2_of(static_cast<double>(c.card));
    return c;
}

Relative relative_complexity(const Dfa& first, const Dfa& second) {
    Relative r;
    r.base = complexity(first).card;
    r.joint = joint_space({first, second}).size();
    r.bits = log2_of(static_cast<double>(r.joint) / static_cast<double>(r.base));
    return r;
}

CircRelative circ_relative(const theory::Evaluation& ev) {
    theory::Theory th(ev);
    CircRelative r;
    auto pm = th.pm().span.count(th.limits().elements);
    if (!pm) throw SizeLimit("A(+-) has too many elements to count");
    r.card_pm = *pm;
    r.card_tensor = boolsemi::reduced_tensor(th.plus().space, th.minus().space, th.limits()).space.size();
    r.bits = log2_of(static_cast<double>(r.card_pm) / static_cast<double>(r.card_tensor));
    return r;
}

Semimodule matrix_language_space(const LanguageMatrix& lm) {
    std::vector<const Dfa*> all;
    std::vector<Dfa> ops;
    for (auto& row : lm.grid)
        for (auto& d : row) all.push_back(&d);
    if (all.empty()) return Semimodule();
    same_alphabet(all);
    for (auto* d : all) ops.push_back(lang::minimize(lang::opposite(*d)));
    std::vector<const Dfa*> op_ptrs;
    for (auto& d : ops) op_ptrs.push_back(&d);

    auto lefts = product_words(all);
    auto rights = product_words(op_ptrs);
    for (auto& w : rights) std::reverse(w.begin(), w.end());

    std::size_t n_out = lm.grid.size(), n_in = lm.grid[0].size();
    for (auto& row : lm.grid)
        if (row.size() != n_in) throw Error("InvalidGrid", "grid rows differ in length");
    std::size_t dim = n_in * rights.size();
    std::vector<BitVec> gens;
    for (auto& w : lefts)
        for (std::size_t i = 0; i < n_out; ++i) {
            BitVec v(dim);
            for (std::size_t j = 0; j < n_in; ++j)
                for (std::size_t t = 0; t < rights.size(); ++t) {
                    lang::Word full = w;
                    full.insert(full.end(), rights[t].begin(), rights[t].end());
                    v.set(j * rights.size() + t, lm.grid[i][j].accepts(full));
                }
            gens.push_back(std::move(v));
        }
    return Semimodule::span(dim, gens);
}

}  // namespace booltop::measure
