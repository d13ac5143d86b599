#include <unordered_map>
#include <unordered_set>

#include "booltop/boolsemi.hpp"

// Tensor products of finite semilattices. The full product is realised as the
// lattice of bi-ideals of s x t generated by the principal ones; it is then
// re-encoded as an OR-closed family so it fits the Semimodule currency.
namespace booltop::boolsemi {

namespace {

class BiIdealClosure {
public:
    BiIdealClosure(const Semimodule& s, const Semimodule& t) : ns_(s.size()), nt_(t.size()) {
        down_s_ = downs(s);
        down_t_ = downs(t);
        join_s_ = joins(s);
        join_t_ = joins(t);
        nabla_ = BitVec(ns_ * nt_);
        for (std::size_t j = 0; j < nt_; ++j) nabla_.set(j);              // (0, j)
        for (std::size_t i = 0; i < ns_; ++i) nabla_.set(i * nt_);        // (i, 0)
    }

    const BitVec& nabla() const { return nabla_; }

    // Smallest bi-ideal containing base (already a bi-ideal) and the pairs in extra.
    BitVec close(BitVec base, const BitVec& extra) const {
        std::vector<std::size_t> work;
        auto add = [&](std::size_t p) {
            if (!base.test(p)) {
                base.set(p);
                work.push_back(p);
            }
        };
        extra.for_each_set(add);
        while (!work.empty()) {
            std::size_t p = work.back();
            work.pop_back();
            std::size_t a = p / nt_, b = p % nt_;
            for (auto c : down_s_[a])
                for (auto d : down_t_[b]) add(c * nt_ + d);
            for (std::size_t a2 = 0; a2 < ns_; ++a2)
                if (base.test(a2 * nt_ + b)) add(join_s_[a][a2] * nt_ + b);
            for (std::size_t b2 = 0; b2 < nt_; ++b2)
                if (base.test(a * nt_ + b2)) add(a * nt_ + join_t_[b][b2]);
        }
        return base;
    }

    BitVec principal(std::size_t a, std::size_t b) const {
        BitVec seed(ns_ * nt_);
        seed.set(a * nt_ + b);
        return close(nabla_, seed);
    }

private:
    static std::vector<std::vector<std::size_t>> downs(const Semimodule& m) {
        std::vector<std::vector<std::size_t>> d(m.size());
        for (std::size_t a = 0; a < m.size(); ++a)
            for (std::size_t c = 0; c < m.size(); ++c)
                if (m.leq(c, a)) d[a].push_back(c);
        return d;
    }
    static std::vector<std::vector<std::size_t>> joins(const Semimodule& m) {
        std::vector<std::vector<std::size_t>> j(m.size(), std::vector<std::size_t>(m.size()));
        for (std::size_t a = 0; a < m.size(); ++a)
            for (std::size_t b = a; b < m.size(); ++b) j[a][b] = j[b][a] = m.join(a, b);
        return j;
    }

    std::size_t ns_, nt_;
    std::vector<std::vector<std::size_t>> down_s_, down_t_, join_s_, join_t_;
    BitVec nabla_;
};

}  // namespace

Tensor tensor(const Semimodule& s, const Semimodule& t, const Limits& lim) {
    if (s.size() * t.size() > lim.tensor)
        throw SizeLimit("tensor product refused: |s|*|t| = " + std::to_string(s.size() * t.size()) +
                        " exceeds " + std::to_string(lim.tensor));
    BiIdealClosure cl(s, t);
    std::vector<BitVec> gens;
    for (auto a : irreducibles(s))
        for (auto b : irreducibles(t)) gens.push_back(cl.principal(a, b));

    // join-closure of the generators inside the bi-ideal lattice
    std::vector<BitVec> ideals{cl.nabla()};
    std::unordered_map<BitVec, std::size_t, BitVecHash> idx{{cl.nabla(), 0}};
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (auto& g : gens) {
            BitVec j = cl.close(ideals[i], g);
            if (idx.emplace(j, ideals.size()).second) {
                ideals.push_back(j);
                if (ideals.size() > lim.elements) throw SizeLimit("tensor product has too many elements");
            }
        }

    // x -> {y : x not<= y}; joins become ORs
    std::size_t n = ideals.size();
    auto encode = [&](const BitVec& x) {
        BitVec v(n);
        for (std::size_t y = 0; y < n; ++y)
            if (!x.subset_of(ideals[y])) v.set(y);
        return v;
    };
    std::vector<BitVec> codes;
    codes.reserve(n);
    for (auto& x : ideals) codes.push_back(encode(x));
    Semimodule wide = Semimodule::span(n, codes, n + 1);
    auto [space, remap] = compress(wide);

    Tensor out;
    out.left_size = s.size();
    out.right_size = t.size();
    out.ideals.assign(n, BitVec());
    std::vector<std::size_t> of_ideal(n);
    for (std::size_t k = 0; k < n; ++k) {
        of_ideal[k] = remap[wide.index_of(codes[k])];
        out.ideals[of_ideal[k]] = ideals[k];
    }
    out.pure.assign(s.size(), std::vector<std::size_t>(t.size()));
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < t.size(); ++b) out.pure[a][b] = of_ideal[idx.at(cl.principal(a, b))];
    out.space = std::move(space);
    return out;
}

std::optional<std::size_t> tensor_size(const Semimodule& s, const Semimodule& t, std::size_t cap) {
    BiIdealClosure cl(s, t);
    std::vector<BitVec> gens;
    for (auto a : irreducibles(s))
        for (auto b : irreducibles(t)) gens.push_back(cl.principal(a, b));
    std::vector<BitVec> ideals{cl.nabla()};
    std::unordered_set<BitVec, BitVecHash> seen{cl.nabla()};
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (auto& g : gens) {
            if (g.subset_of(ideals[i])) continue;
            BitVec j = cl.close(ideals[i], g);
            if (seen.insert(j).second) {
                ideals.push_back(std::move(j));
                if (ideals.size() > cap) return std::nullopt;
            }
        }
    return ideals.size();
}

std::vector<std::size_t> tensor_map(const Tensor& from, const Tensor& to, const std::vector<std::size_t>& left_map) {
    std::vector<std::size_t> out;
    out.reserve(from.space.size());
    for (std::size_t x = 0; x < from.space.size(); ++x) {
        BitVec acc(to.space.dim());
        from.ideals[x].for_each_set([&](std::size_t bit) {
            std::size_t a = bit / from.right_size, b = bit % from.right_size;
            acc |= to.space.at(to.pure[left_map[a]][b]);
        });
        out.push_back(to.space.index_of(acc));
    }
    return out;
}

BitVec embed(const Semimodule& s, std::size_t x, const std::vector<std::size_t>& coords) {
    BitVec v(coords.size());
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (!s.leq(x, coords[k])) v.set(k);
    return v;
}

ReducedTensor reduced_tensor(const Semimodule& s, const Semimodule& t, const Limits& lim) {
    ReducedTensor r;
    r.left_coords = meet_irreducibles(s);
    r.right_coords = meet_irreducibles(t);
    std::vector<BitVec> es, et;
    for (std::size_t a = 0; a < s.size(); ++a) es.push_back(embed(s, a, r.left_coords));
    for (std::size_t b = 0; b < t.size(); ++b) et.push_back(embed(t, b, r.right_coords));
    std::vector<BitVec> gens;
    for (auto a : irreducibles(s))
        for (auto b : irreducibles(t)) gens.push_back(es[a].kron(et[b]));
    r.space = Semimodule::span(r.left_coords.size() * r.right_coords.size(), gens, lim.elements);
    r.pure.assign(s.size(), std::vector<std::size_t>(t.size()));
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < t.size(); ++b) r.pure[a][b] = r.space.index_of(es[a].kron(et[b]));
    return r;
}

std::vector<std::size_t> canonical_surjection(const Tensor& full, const ReducedTensor& red) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < full.space.size(); ++x) {
        BitVec acc(red.space.dim());
        full.ideals[x].for_each_set([&](std::size_t bit) {
            acc |= red.space.at(red.pure[bit / full.right_size][bit % full.right_size]);
        });
        out.push_back(red.space.index_of(acc));
    }
    return out;
}

}  // namespace booltop::boolsemi
