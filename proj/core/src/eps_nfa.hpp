#pragma once

#include <algorithm>
#include <vector>

#include "booltop/lang.hpp"

namespace booltop::lang {

// Internal NFA with epsilon moves. Only ever converted to an Nfa.
struct EpsNfa {
    std::size_t k;
    std::vector<std::vector<std::vector<int>>> edges;  // [state][letter]
    std::vector<std::vector<int>> eps;
    std::vector<int> inits;
    std::vector<bool> final;

    explicit EpsNfa(std::size_t letters) : k(letters) {}

    std::size_t size() const { return eps.size(); }
    int add_state() {
        edges.emplace_back(k);
        eps.emplace_back();
        return static_cast<int>(eps.size() - 1);
    }
    void add_edge(int s, int a, int t) {
        edges[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)].push_back(t);
    }
    void add_eps(int s, int t) { eps[static_cast<std::size_t>(s)].push_back(t); }

    std::vector<int> closure(std::vector<int> set) const {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        std::vector<bool> in(size(), false);
        for (int s : set) in[static_cast<std::size_t>(s)] = true;
        for (std::size_t i = 0; i < set.size(); ++i)
            for (int t : eps[static_cast<std::size_t>(set[i])])
                if (!in[static_cast<std::size_t>(t)]) {
                    in[static_cast<std::size_t>(t)] = true;
                    set.push_back(t);
                }
        std::sort(set.begin(), set.end());
        return set;
    }

    Nfa to_nfa(const Alphabet& al) const {
        Nfa n;
        n.alphabet = al;
        n.n_states = size();
        n.delta.assign(size(), std::vector<std::vector<int>>(k));
        n.accepting.assign(size(), false);
        for (std::size_t s = 0; s < size(); ++s) {
            auto cl = closure({static_cast<int>(s)});
            for (int c : cl)
                if (final[static_cast<std::size_t>(c)]) n.accepting[s] = true;
            for (std::size_t a = 0; a < k; ++a) {
                std::vector<int> step;
                for (int c : cl)
                    for (int t : edges[static_cast<std::size_t>(c)][a]) step.push_back(t);
                n.delta[s][a] = closure(step);
            }
        }
        n.inits = closure(inits);
        return n;
    }
};

}  // namespace booltop::lang
