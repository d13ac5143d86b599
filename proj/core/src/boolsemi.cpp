#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "booltop/boolsemi.hpp"

namespace booltop::boolsemi {

// ---- BoolMatrix ----

BoolMatrix BoolMatrix::from_rows(const std::vector<std::string>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    BoolMatrix m(rows.size(), c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != c) throw std::invalid_argument("ragged matrix rows");
        m.data_[r] = BitVec::from_string(rows[r]);
    }
    return m;
}

BoolMatrix BoolMatrix::from_bitvecs(std::size_t cols, const std::vector<BitVec>& rows) {
    BoolMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row width mismatch");
        m.data_[r] = rows[r];
    }
    return m;
}

BoolMatrix BoolMatrix::identity(std::size_t n) {
    BoolMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitVec BoolMatrix::col(std::size_t c) const {
    BitVec v(r_);
    for (std::size_t r = 0; r < r_; ++r)
        if (get(r, c)) v.set(r);
    return v;
}

BoolMatrix BoolMatrix::transpose() const {
    BoolMatrix t(c_, r_);
    for (std::size_t r = 0; r < r_; ++r) data_[r].for_each_set([&](std::size_t c) { t.set(c, r); });
    return t;
}

BoolMatrix BoolMatrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    BoolMatrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m.set(i, j, get(rows[i], cols[j]));
    return m;
}

bool BoolMatrix::is_symmetric() const {
    if (r_ != c_) return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = i + 1; j < c_; ++j)
            if (get(i, j) != get(j, i)) return false;
    return true;
}

std::vector<std::string> BoolMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(r_);
    for (auto& r : data_) out.push_back(r.str());
    return out;
}

// ---- Semimodule ----

Semimodule Semimodule::span(std::size_t dim, const std::vector<BitVec>& gens, std::size_t limit) {
    Semimodule s;
    s.dim_ = dim;
    s.elements_.clear();
    s.gens_.clear();
    s.index_.clear();
    std::unordered_set<BitVec, BitVecHash> seen_gen;
    for (auto& g : gens) {
        if (g.size() != dim) throw std::invalid_argument("generator width does not match ambient dimension");
        if (g.any() && seen_gen.insert(g).second) s.gens_.push_back(g);
    }
    std::unordered_set<BitVec, BitVecHash> seen;
    std::vector<BitVec> elems{BitVec(dim)};
    seen.insert(elems[0]);
    for (auto& g : s.gens_) {
        std::size_t n = elems.size();
        for (std::size_t i = 0; i < n; ++i) {
            BitVec x = elems[i] | g;
            if (seen.insert(x).second) {
                elems.push_back(std::move(x));
                if (elems.size() > limit)
                    throw SizeLimit("semimodule has more than " + std::to_string(limit) + " elements");
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    s.elements_ = std::move(elems);
    s.index_.reserve(s.elements_.size());
    for (std::size_t i = 0; i < s.elements_.size(); ++i) s.index_.emplace(s.elements_[i], i);
    return s;
}

Semimodule Semimodule::free(std::size_t n) {
    std::vector<BitVec> g;
    for (std::size_t i = 0; i < n; ++i) {
        BitVec e(n);
        e.set(i);
        g.push_back(e);
    }
    return span(n, g);
}

std::vector<std::size_t> Semimodule::generator_indices() const {
    std::vector<std::size_t> r;
    for (auto& g : gens_) r.push_back(index_of(g));
    return r;
}

std::size_t Semimodule::index_of(const BitVec& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw std::out_of_range("vector is not an element of the semimodule: " + v.str());
    return it->second;
}

std::size_t Semimodule::top() const {
    BitVec t(dim_);
    for (auto& g : gens_) t |= g;
    return index_of(t);
}

BitVec Semimodule::floor(const BitVec& v) const {
    BitVec r(dim_);
    for (auto& g : gens_)
        if (g.subset_of(v)) r |= g;
    return r;
}

// ---- Span ----

BitVec Span::join_of(const std::vector<std::size_t>& idx) const {
    BitVec r(dim_);
    for (auto i : idx) r |= gens_[i];
    return r;
}

bool Span::contains(const BitVec& v) const {
    BitVec r(dim_);
    for (auto& g : gens_)
        if (g.subset_of(v)) r |= g;
    return r == v;
}

std::vector<std::size_t> Span::irreducible_indices() const {
    std::vector<std::size_t> out;
    std::unordered_set<BitVec, BitVecHash> seen;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const BitVec& g = gens_[i];
        if (g.none() || !seen.insert(g).second) continue;
        BitVec below(dim_);
        for (auto& h : gens_)
            if (h.subset_of(g) && !(h == g)) below |= h;
        if (!(below == g)) out.push_back(i);
    }
    return out;
}

bool Span::is_free() const {
    auto irr = irreducible_indices();
    for (auto i : irr) {
        BitVec others(dim_);
        for (auto j : irr)
            if (j != i) others |= gens_[j];
        if (gens_[i].subset_of(others)) return false;
    }
    return true;
}

bool Span::is_distributive() const {
    for (auto j : irreducible_indices()) {
        BitVec avoid(dim_);
        for (auto& g : gens_)
            if (!gens_[j].subset_of(g)) avoid |= g;
        if (gens_[j].subset_of(avoid)) return false;
    }
    return true;
}

std::optional<std::size_t> Span::count(std::size_t limit) const {
    try {
        return Semimodule::span(dim_, gens_, limit).size();
    } catch (const SizeLimit&) {
        return std::nullopt;
    }
}

Semimodule Span::to_semimodule(std::size_t limit) const { return Semimodule::span(dim_, gens_, limit); }

bool map_well_defined(const Span& from, const Span& to) {
    if (from.size() != to.size()) throw std::invalid_argument("spans list different numbers of generators");
    std::size_t n = from.size();
    // every closed set of `to` must be closed for `from`
    for (std::size_t c = 0; c < to.dim(); ++c) {
        BitVec j(from.dim());
        for (std::size_t i = 0; i < n; ++i)
            if (!to[i].test(c)) j |= from[i];
        for (std::size_t i = 0; i < n; ++i)
            if (to[i].test(c) && from[i].subset_of(j)) return false;
    }
    return true;
}

bool same_closure(const Span& a, const Span& b) { return map_well_defined(a, b) && map_well_defined(b, a); }

Semimodule span_rows(const BoolMatrix& m) { return Semimodule::span(m.cols(), m.row_list()); }
Semimodule span_cols(const BoolMatrix& m) { return span_rows(m.transpose()); }

std::vector<std::size_t> irreducibles(const Semimodule& s) {
    Span sp(s.dim(), s.generators());
    std::vector<std::size_t> out;
    for (auto i : sp.irreducible_indices()) out.push_back(s.index_of(sp[i]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> meet_irreducibles(const Semimodule& s) {
    // Every element is the meet of the largest elements missing a given
    // coordinate, so the meet-irreducibles are among those.
    std::size_t d = s.dim();
    std::vector<BitVec> m(d, BitVec(d));
    for (auto& e : s.elements())
        for (std::size_t c = 0; c < d; ++c)
            if (!e.test(c)) m[c] |= e;
    const BitVec& top = s.at(s.top());
    std::vector<std::size_t> out;
    std::unordered_set<BitVec, BitVecHash> done;
    for (std::size_t c = 0; c < d; ++c) {
        if (m[c] == top || !done.insert(m[c]).second) continue;
        BitVec mask(d);
        for (std::size_t c2 = 0; c2 < d; ++c2)
            if (m[c].subset_of(m[c2]) && !(m[c] == m[c2])) mask.set(c2);
        BitVec meet(d);
        for (auto& e : s.elements())
            if (!e.intersects(mask)) meet |= e;
        if (!(meet == m[c])) out.push_back(s.index_of(m[c]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Semimodule, std::vector<std::size_t>> compress(const Semimodule& s) {
    std::size_t d = s.dim();
    std::vector<BitVec> m(d, BitVec(d));
    for (auto& e : s.elements())
        for (std::size_t c = 0; c < d; ++c)
            if (!e.test(c)) m[c] |= e;
    auto keep_elems = meet_irreducibles(s);
    std::vector<std::size_t> coords;
    for (auto k : keep_elems) {
        for (std::size_t c = 0; c < d; ++c)
            if (m[c] == s.at(k)) {
                coords.push_back(c);
                break;
            }
    }
    std::sort(coords.begin(), coords.end());
    auto project = [&](const BitVec& v) {
        BitVec r(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (v.test(coords[i])) r.set(i);
        return r;
    };
    std::vector<BitVec> gens;
    for (auto& g : s.generators()) gens.push_back(project(g));
    Semimodule out = Semimodule::span(coords.size(), gens, s.size() + 1);
    if (out.size() != s.size()) throw std::logic_error("compress lost elements");
    std::vector<std::size_t> map(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) map[i] = out.index_of(project(s.at(i)));
    return {std::move(out), std::move(map)};
}

// ---- canonical matrices ----

namespace {

// Index (into idx) of the first vector equal to the OR of the other vectors
// lying below it, or npos.
std::size_t first_reducible(const std::vector<BitVec>& vs) {
    for (std::size_t r = 0; r < vs.size(); ++r) {
        BitVec acc(vs[r].size());
        for (std::size_t q = 0; q < vs.size(); ++q)
            if (q != r && vs[q].subset_of(vs[r])) acc |= vs[q];
        if (acc == vs[r]) return r;
    }
    return static_cast<std::size_t>(-1);
}

}  // namespace

CanonicalMatrix canonical_matrix_full(const BoolMatrix& m) {
    std::vector<std::size_t> rows(m.rows()), cols(m.cols());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    for (bool changed = true; changed;) {
        changed = false;
        BoolMatrix cur = m.select(rows, cols);
        std::size_t r = first_reducible(cur.row_list());
        if (r != static_cast<std::size_t>(-1)) {
            rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
            changed = true;
            continue;
        }
        std::size_t c = first_reducible(cur.transpose().row_list());
        if (c != static_cast<std::size_t>(-1)) {
            cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
            changed = true;
        }
    }
    return {m.select(rows, cols), rows, cols};
}

// ---- duality ----

Dual dual(const Semimodule& s) {
    std::size_t n = s.size();
    std::vector<BitVec> fs;
    fs.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
        BitVec f(n);
        for (std::size_t b = 0; b < n; ++b)
            if (!s.leq(b, a)) f.set(b);
        fs.push_back(std::move(f));
    }
    Dual d;
    d.space = Semimodule::span(n, fs, n + 1);
    d.source.assign(n, 0);
    d.of_element.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t k = d.space.index_of(fs[a]);
        d.source[k] = a;
        d.of_element[a] = k;
    }
    d.pairing = BoolMatrix::from_bitvecs(n, d.space.elements());
    return d;
}

bool double_dual_isomorphic(const Semimodule& s) {
    Dual d = dual(s);
    Dual dd = dual(d.space);
    std::size_t n = s.size();
    if (dd.space.size() != n) return false;
    std::vector<BitVec> ev(n, BitVec(n));
    std::unordered_set<BitVec, BitVecHash> seen;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t k = 0; k < n; ++k)
            if (d.space.at(k).test(a)) ev[a].set(k);
        if (!dd.space.contains(ev[a]) || !seen.insert(ev[a]).second) return false;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (!((ev[a] | ev[b]) == ev[s.join(a, b)])) return false;
    return true;
}

// ---- lattice structure ----

std::size_t meet(const Semimodule& s, std::size_t a, std::size_t b) {
    return s.index_of(s.floor(s.at(a) & s.at(b)));
}

Lattice lattice(const Semimodule& s) {
    std::size_t n = s.size();
    Lattice l;
    l.meet.assign(n, std::vector<std::size_t>(n));
    l.join.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            l.meet[a][b] = l.meet[b][a] = meet(s, a, b);
            l.join[a][b] = l.join[b][a] = s.join(a, b);
        }
    l.top = s.top();
    l.bottom = s.zero();
    return l;
}

std::optional<std::array<std::size_t, 3>> distributivity_counterexample(const Semimodule& s) {
    Lattice l = lattice(s);
    std::size_t n = s.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                if (l.meet[a][l.join[b][c]] != l.join[l.meet[a][b]][l.meet[a][c]])
                    return std::array<std::size_t, 3>{a, b, c};
    return std::nullopt;
}

bool is_distributive(const Semimodule& s) {
    if (s.size() <= 128) return !distributivity_counterexample(s).has_value();
    // equivalent for finite lattices: all irreducibles are join-prime
    return Span(s.dim(), s.generators()).is_distributive();
}

bool is_join_prime(const Semimodule& s, std::size_t x) {
    BitVec avoid(s.dim());
    for (auto& g : s.generators())
        if (!s.at(x).subset_of(g)) avoid |= g;
    return !s.at(x).subset_of(avoid);
}

// ---- isomorphism ----

namespace {

struct IsoSearch {
    const Semimodule &s, &t;
    std::vector<std::size_t> is, it;  // irreducibles
    std::vector<std::vector<bool>> ls, lt;  // order among irreducibles
    std::vector<std::size_t> up_s, up_t;  // number of elements above
    std::vector<int> pi;
    std::vector<bool> used;
    std::vector<std::vector<std::size_t>> below_s;  // per element: irreducible positions below

    bool finish() {
        std::vector<BitVec> fam_s, fam_t;
        std::size_t k = is.size();
        for (std::size_t e = 0; e < s.size(); ++e) {
            BitVec d(k);
            for (std::size_t i = 0; i < k; ++i)
                if (s.leq(is[i], e)) d.set(static_cast<std::size_t>(pi[i]));
            fam_s.push_back(d);
        }
        for (std::size_t e = 0; e < t.size(); ++e) {
            BitVec d(k);
            for (std::size_t i = 0; i < k; ++i)
                if (t.leq(it[i], e)) d.set(i);
            fam_t.push_back(d);
        }
        std::sort(fam_s.begin(), fam_s.end());
        std::sort(fam_t.begin(), fam_t.end());
        return fam_s == fam_t;
    }

    bool go(std::size_t i) {
        if (i == is.size()) return finish();
        for (std::size_t j = 0; j < it.size(); ++j) {
            if (used[j] || up_s[i] != up_t[j]) continue;
            bool ok = true;
            for (std::size_t p = 0; p < i && ok; ++p) {
                auto q = static_cast<std::size_t>(pi[p]);
                ok = ls[p][i] == lt[q][j] && ls[i][p] == lt[j][q];
            }
            if (!ok) continue;
            used[j] = true;
            pi[i] = static_cast<int>(j);
            if (go(i + 1)) return true;
            used[j] = false;
        }
        return false;
    }
};

}  // namespace

bool is_isomorphic(const Semimodule& s, const Semimodule& t) {
    if (s.size() != t.size()) return false;
    IsoSearch q{s, t, irreducibles(s), irreducibles(t), {}, {}, {}, {}, {}, {}, {}};
    if (q.is.size() != q.it.size()) return false;
    std::size_t k = q.is.size();
    q.ls.assign(k, std::vector<bool>(k));
    q.lt.assign(k, std::vector<bool>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            q.ls[i][j] = s.leq(q.is[i], q.is[j]);
            q.lt[i][j] = t.leq(q.it[i], q.it[j]);
        }
    auto above = [](const Semimodule& m, std::size_t x) {
        std::size_t c = 0;
        for (std::size_t e = 0; e < m.size(); ++e) c += m.leq(x, e);
        return c;
    };
    for (auto x : q.is) q.up_s.push_back(above(s, x));
    for (auto x : q.it) q.up_t.push_back(above(t, x));
    q.pi.assign(k, -1);
    q.used.assign(k, false);
    return q.go(0);
}

// ---- projectivity ----

Coevaluation coevaluation(const Semimodule& p) {
    if (!is_distributive(p)) throw NotProjective("no coevaluation: the semimodule is not distributive");
    Coevaluation c;
    for (auto x : irreducibles(p)) {
        // largest element not above x; it is not above x exactly because x is
        // join-prime
        BitVec a(p.dim());
        for (auto& g : p.generators())
            if (!p.at(x).subset_of(g)) a |= g;
        CoevPair cp;
        cp.p = x;
        cp.f_source = p.index_of(a);
        cp.f = BitVec(p.size());
        for (std::size_t u = 0; u < p.size(); ++u)
            if (!p.leq(u, cp.f_source)) cp.f.set(u);
        c.pairs.push_back(std::move(cp));
    }
    return c;
}

bool snake_identities(const Semimodule& p, const Coevaluation& c) {
    for (std::size_t v = 0; v < p.size(); ++v) {
        BitVec acc(p.dim());
        for (auto& pr : c.pairs)
            if (pr.f.test(v)) acc |= p.at(pr.p);
        if (!(acc == p.at(v))) return false;
    }
    Dual d = dual(p);
    for (std::size_t k = 0; k < d.space.size(); ++k) {
        const BitVec& g = d.space.at(k);
        BitVec acc(p.size());
        for (auto& pr : c.pairs)
            if (g.test(pr.p)) acc |= pr.f;
        if (!(acc == g)) return false;
    }
    return true;
}

bool ev_coev(const Semimodule&, const Coevaluation& c) {
    for (auto& pr : c.pairs)
        if (pr.f.test(pr.p)) return true;
    return false;
}

std::optional<Retract> retract_of_free(const Semimodule& p) {
    Retract r;
    r.basis = irreducibles(p);
    std::size_t k = r.basis.size();
    for (std::size_t u = 0; u < p.size(); ++u) {
        BitVec v(k);
        for (std::size_t i = 0; i < k; ++i)
            if (p.leq(r.basis[i], u)) v.set(i);
        r.iota.push_back(v);
    }
    for (std::size_t u = 0; u < p.size(); ++u)
        for (std::size_t v = u + 1; v < p.size(); ++v)
            if (!((r.iota[u] | r.iota[v]) == r.iota[p.join(u, v)])) return std::nullopt;
    return r;
}

bool identity_in_psi_image(const Semimodule& p, const Limits& lim) {
    Dual d = dual(p);
    Tensor t = tensor(d.space, p, lim);
    std::size_t np = p.size();
    for (auto& ideal : t.ideals) {
        std::vector<BitVec> img(np, BitVec(p.dim()));
        ideal.for_each_set([&](std::size_t bit) {
            std::size_t f = bit / np, m = bit % np;
            for (std::size_t u = 0; u < np; ++u)
                if (d.space.at(f).test(u)) img[u] |= p.at(m);
        });
        bool id = true;
        for (std::size_t u = 0; u < np && id; ++u) id = img[u] == p.at(u);
        if (id) return true;
    }
    return false;
}

Semimodule m3_fixture() { return span_rows(BoolMatrix::from_rows({"110", "101", "011"})); }
Semimodule n5_fixture() { return span_rows(BoolMatrix::from_rows({"101", "011", "100"})); }

FlatnessReport is_flat(const Semimodule& s, const Limits& lim) {
    FlatnessReport r;
    r.flat = is_distributive(s);
    Semimodule b3 = Semimodule::free(3);
    auto probe = [&](const Semimodule& f) {
        Tensor t1 = tensor(f, s, lim);
        Tensor t2 = tensor(b3, s, lim);
        std::vector<std::size_t> left(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) left[i] = b3.index_of(f.at(i));
        auto img = tensor_map(t1, t2, left);
        std::sort(img.begin(), img.end());
        return std::unique(img.begin(), img.end()) == img.end();
    };
    r.m3_probe_injective = probe(m3_fixture());
    r.n5_probe_injective = probe(n5_fixture());
    return r;
}

}  // namespace booltop::boolsemi
