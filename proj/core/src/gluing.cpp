#include <algorithm>
#include <functional>
#include <unordered_map>

#include "booltop/theory.hpp"

namespace booltop::theory {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

Word reversed(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

void check_seq(const SignSeq& eps, const Limits& lim) {
    for (char c : eps)
        if (c != '+' && c != '-') throw Error("InvalidSigns", "sign sequences use only '+' and '-'");
    if (eps.size() > lim.eps_len)
        throw SizeLimit("sign sequence longer than " + std::to_string(lim.eps_len));
}

std::vector<int> irreducible_classes(const HalfSpace& h) {
    std::vector<int> out;
    auto irr = boolsemi::irreducibles(h.space);
    for (std::size_t q = 0; q < h.word_class.size(); ++q)
        if (std::find(irr.begin(), irr.end(), h.word_class[q]) != irr.end()) out.push_back(static_cast<int>(q));
    return out;
}

}  // namespace

SignSeq dual_seq(const SignSeq& eps) {
    SignSeq d(eps.rbegin(), eps.rend());
    for (char& c : d) c = c == '+' ? '-' : '+';
    return d;
}

Theory::Theory(Evaluation ev, Limits lim) : ev_(std::move(ev)), lim_(lim), cls_(classes(ev_.dfa_I)) {
    // The arc monoid acts on both minimal DFAs at once.
    const Dfa& I = cls_.left;
    const Dfa& C = ev_.dfa_circ;
    n_left_ = I.n_states;
    Dfa both;
    both.alphabet = ev_.alphabet;
    both.n_states = I.n_states + C.n_states;
    both.accepting.assign(both.n_states, false);
    for (std::size_t q = 0; q < I.n_states; ++q) both.delta.push_back(I.delta[q]);
    for (std::size_t q = 0; q < C.n_states; ++q) {
        both.delta.push_back(C.delta[q]);
        for (auto& t : both.delta.back()) t += static_cast<int>(n_left_);
    }
    arcs_ = lang::transition_monoid(both);

    for (std::size_t e = 0; e < arcs_.size(); ++e) {
        int q = arcs_.maps[e][n_left_ + sz(C.init)] - static_cast<int>(n_left_);
        circle_.push_back(C.accepting[sz(q)]);
        std::vector<int> row;
        Word back = reversed(arcs_.reps[e]);
        for (std::size_t p = 0; p < cls_.right.n_states; ++p) row.push_back(cls_.right.run(static_cast<int>(p), back));
        plus_after_.push_back(std::move(row));
    }
    minus_ = half_state_space(I, Sign::Minus);
    plus_ = half_state_space(I, Sign::Plus);
    minus_labels_ = irreducible_classes(minus_);
    plus_labels_ = irreducible_classes(plus_);
}

bool Theory::arc_interval(int e, int m, int p) const {
    return cls_.table.get(sz(arcs_.maps[sz(e)][sz(m)]), sz(p));
}
int Theory::plus_after(int e, int p) const { return plus_after_[sz(e)][sz(p)]; }
int Theory::minus_after(int m, int e) const { return arcs_.maps[sz(e)][sz(m)]; }

bool Theory::glue(const SignSeq& eps, const Diagram& x, const Diagram& y) const {
    std::size_t n = eps.size();
    const Diagram* side[2] = {&x, &y};
    auto sign = [&](int s, std::size_t i) { return s == 0 ? eps[i] : (eps[n - 1 - i] == '+' ? '-' : '+'); };
    std::vector<bool> seen[2] = {std::vector<bool>(n, false), std::vector<bool>(n, false)};

    // Open strands start at free minus points and end at free plus points.
    for (int s0 = 0; s0 < 2; ++s0)
        for (std::size_t i0 = 0; i0 < n; ++i0) {
            if (sign(s0, i0) != '-' || side[s0]->partner[i0] >= 0) continue;
            int state = side[s0]->label[i0];
            int s = s0;
            std::size_t i = i0;
            for (;;) {
                s = 1 - s;
                std::size_t j = n - 1 - i;
                const Diagram& d = *side[s];
                if (d.partner[j] < 0) {
                    if (!cls_.table.get(sz(state), sz(d.label[j]))) return false;
                    break;
                }
                seen[s][j] = true;
                state = arcs_.maps[sz(d.label[j])][sz(state)];
                i = sz(d.partner[j]);
            }
        }
    // What is left are closed loops made of arcs only.
    for (int s0 = 0; s0 < 2; ++s0)
        for (std::size_t i0 = 0; i0 < n; ++i0) {
            if (sign(s0, i0) != '+' || side[s0]->partner[i0] < 0 || seen[s0][i0]) continue;
            std::size_t acc = arcs_.identity;
            int s = s0;
            std::size_t j = i0;
            do {
                const Diagram& d = *side[s];
                seen[s][j] = true;
                acc = arcs_.mult[acc][sz(d.label[j])];
                std::size_t i = sz(d.partner[j]);
                s = 1 - s;
                j = n - 1 - i;
            } while (!(s == s0 && j == i0));
            if (!circle_[acc]) return false;
        }
    return true;
}

const std::vector<int>& Theory::reduced_arc_labels() const {
    if (!arc_labels_) {
        const PmStateSpace& p = pm();
        std::vector<int> labels;
        for (auto i : p.span.irreducible_indices())
            if (p.spanning[i].kind == PmDiagram::Kind::Arc) labels.push_back(p.spanning[i].e);
        std::sort(labels.begin(), labels.end());
        arc_labels_ = labels;
    }
    return *arc_labels_;
}

std::vector<Diagram> Theory::spanning(const SignSeq& eps, bool reduced) const {
    check_seq(eps, lim_);
    std::size_t n = eps.size();
    std::vector<int> all_arcs(arcs_.size()), all_plus(cls_.right.n_states), all_minus(cls_.left.n_states);
    for (std::size_t i = 0; i < all_arcs.size(); ++i) all_arcs[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < all_plus.size(); ++i) all_plus[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < all_minus.size(); ++i) all_minus[i] = static_cast<int>(i);
    bool need_arcs = eps.find('+') != SignSeq::npos && eps.find('-') != SignSeq::npos;
    const auto& arc_set = reduced && need_arcs ? reduced_arc_labels() : all_arcs;
    const auto& plus_set = reduced ? plus_labels_ : all_plus;
    const auto& minus_set = reduced ? minus_labels_ : all_minus;

    // Partial matchings of plus points to minus points.
    std::vector<std::vector<int>> matchings;
    std::vector<int> partner(n, -1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            matchings.push_back(partner);
            return;
        }
        if (eps[i] != '+') return rec(i + 1);
        rec(i + 1);
        for (std::size_t j = 0; j < n; ++j)
            if (eps[j] == '-' && partner[j] < 0) {
                partner[i] = static_cast<int>(j);
                partner[j] = static_cast<int>(i);
                rec(i + 1);
                partner[i] = partner[j] = -1;
            }
    };
    rec(0);

    auto choices = [&](std::size_t i, const std::vector<int>& m) -> const std::vector<int>* {
        if (m[i] >= 0) return eps[i] == '+' ? &arc_set : nullptr;  // arc label lives at the plus end
        return eps[i] == '+' ? &plus_set : &minus_set;
    };
    double total = 0;
    for (auto& m : matchings) {
        double c = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (auto* ch = choices(i, m)) c *= static_cast<double>(ch->size());
        total += c;
    }
    if (total > static_cast<double>(lim_.diagrams))
        throw SizeLimit("boundary " + eps + " needs " + std::to_string(static_cast<long long>(total)) +
                        " spanning diagrams, limit is " + std::to_string(lim_.diagrams));

    std::vector<Diagram> out;
    for (auto& m : matchings) {
        std::vector<std::size_t> slots;
        std::vector<const std::vector<int>*> sets;
        bool empty = false;
        for (std::size_t i = 0; i < n; ++i)
            if (auto* ch = choices(i, m)) {
                slots.push_back(i);
                sets.push_back(ch);
                empty = empty || ch->empty();
            }
        if (empty) continue;
        std::vector<std::size_t> digit(slots.size(), 0);
        for (;;) {
            Diagram d{m, std::vector<int>(n, -1)};
            for (std::size_t k = 0; k < slots.size(); ++k) d.label[slots[k]] = (*sets[k])[digit[k]];
            for (std::size_t i = 0; i < n; ++i)
                if (eps[i] == '-' && m[i] >= 0) d.label[i] = d.label[sz(m[i])];
            out.push_back(std::move(d));
            std::size_t k = 0;
            while (k < slots.size() && ++digit[k] == sets[k]->size()) digit[k++] = 0;
            if (k == slots.size()) break;
        }
    }
    return out;
}

const StateSpace& Theory::space(const SignSeq& eps, bool reduced) const {
    auto key = std::make_pair(eps, reduced);
    auto it = spaces_.find(key);
    if (it != spaces_.end()) return *it->second;
    auto s = std::make_unique<StateSpace>();
    s->eps = eps;
    s->spanning = spanning(eps, reduced);
    SignSeq d = dual_seq(eps);
    s->dual_spanning = spanning(d, reduced);
    s->gram = BoolMatrix(s->spanning.size(), s->dual_spanning.size());
    for (std::size_t i = 0; i < s->spanning.size(); ++i)
        for (std::size_t j = 0; j < s->dual_spanning.size(); ++j)
            if (glue(eps, s->spanning[i], s->dual_spanning[j])) s->gram.set(i, j);
    s->span = Span(s->dual_spanning.size(), s->gram.row_list());
    return *spaces_.emplace(key, std::move(s)).first->second;
}

const PmStateSpace& Theory::pm() const {
    if (pm_) return *pm_;
    auto out = std::make_unique<PmStateSpace>();
    std::size_t np = cls_.right.n_states, nm = cls_.left.n_states, ne = arcs_.size();
    for (std::size_t m = 0; m < nm; ++m)
        for (std::size_t p = 0; p < np; ++p)
            out->spanning.push_back({PmDiagram::Kind::Pair, 0, static_cast<int>(p), static_cast<int>(m)});
    for (std::size_t e = 0; e < ne; ++e) out->spanning.push_back({PmDiagram::Kind::Arc, static_cast<int>(e), 0, 0});
    std::size_t n = out->spanning.size();
    if (n > lim_.diagrams) throw SizeLimit("A(+-) needs " + std::to_string(n) + " spanning diagrams");

    auto as_diagram = [](const PmDiagram& d) {
        if (d.kind == PmDiagram::Kind::Arc) return Diagram{{1, 0}, {d.e, d.e}};
        return Diagram{{-1, -1}, {d.p, d.m}};
    };
    std::vector<Diagram> ds;
    for (auto& d : out->spanning) ds.push_back(as_diagram(d));
    out->gram = BoolMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (glue("+-", ds[i], ds[j])) {
                out->gram.set(i, j);
                out->gram.set(j, i);
            }
    out->span = Span(n, out->gram.row_list());

    std::unordered_map<BitVec, std::size_t, BitVecHash> cls;
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, fresh] = cls.emplace(out->gram.row(i), out->class_profile.size());
        if (fresh) out->class_profile.push_back(out->gram.row(i));
        out->class_of.push_back(it->second);
    }
    BitVec zero(n);
    auto [zit, zfresh] = cls.emplace(zero, out->class_profile.size());
    if (zfresh) out->class_profile.push_back(zero);
    out->zero_class = zit->second;

    auto arc_index = [&](std::size_t e) { return np * nm + e; };
    auto pair_index = [&](int p, int m) { return sz(m) * np + sz(p); };
    out->unit = out->class_of[arc_index(arcs_.identity)];

    // Any representative will do: the product respects the quotient.
    std::size_t nc = out->class_profile.size();
    std::vector<std::size_t> rep(nc, SIZE_MAX);
    for (std::size_t i = n; i-- > 0;) rep[out->class_of[i]] = i;
    out->mult.assign(nc, std::vector<std::size_t>(nc, out->zero_class));
    for (std::size_t c1 = 0; c1 < nc; ++c1)
        for (std::size_t c2 = 0; c2 < nc; ++c2) {
            if (rep[c1] == SIZE_MAX || rep[c2] == SIZE_MAX) continue;
            const PmDiagram& x = out->spanning[rep[c1]];
            const PmDiagram& y = out->spanning[rep[c2]];
            using K = PmDiagram::Kind;
            std::size_t r = SIZE_MAX;
            if (x.kind == K::Arc && y.kind == K::Arc)
                r = arc_index(arcs_.mult[sz(x.e)][sz(y.e)]);
            else if (x.kind == K::Arc)
                r = pair_index(plus_after(x.e, y.p), y.m);
            else if (y.kind == K::Arc)
                r = pair_index(x.p, minus_after(x.m, y.e));
            else if (cls_.table.get(sz(x.m), sz(y.p)))
                r = pair_index(x.p, y.m);
            out->mult[c1][c2] = r == SIZE_MAX ? out->zero_class : out->class_of[r];
        }
    pm_ = std::move(out);
    return *pm_;
}

std::string Theory::word(int e) const {
    const Word& w = arcs_.reps[sz(e)];
    return w.empty() ? "1" : ev_.alphabet.str(w);
}

std::string Theory::describe(const PmDiagram& d) const {
    auto show = [&](const Word& w) { return w.empty() ? std::string("1") : ev_.alphabet.str(w); };
    if (d.kind == PmDiagram::Kind::Arc) return "arc(" + word(d.e) + ")";
    return "pair(" + show(cls_.right_words[sz(d.p)]) + "," + show(cls_.left_words[sz(d.m)]) + ")";
}

std::string Theory::describe(const SignSeq& eps, const Diagram& d) const {
    auto show = [&](const Word& w) { return w.empty() ? std::string("1") : ev_.alphabet.str(w); };
    std::string s = "[";
    for (std::size_t i = 0; i < eps.size(); ++i) {
        std::string t;
        if (d.partner[i] >= 0) {
            if (eps[i] == '-') continue;
            t = std::to_string(i) + ">" + std::to_string(d.partner[i]) + ":" + word(d.label[i]);
        } else if (eps[i] == '+') {
            t = std::to_string(i) + ":|" + show(cls_.right_words[sz(d.label[i])]) + "<";
        } else {
            t = std::to_string(i) + ":<" + show(cls_.left_words[sz(d.label[i])]) + "|";
        }
        s += (s.size() > 1 ? " " : "") + t;
    }
    return s + "]";
}

PmStateSpace pm_state_space(const Evaluation& ev) { return Theory(ev).pm(); }

StateSpace general_state_space(const Evaluation& ev, const SignSeq& eps, bool reduced) {
    return Theory(ev).space(eps, reduced);
}

TensorReport tensor_compare(const Theory& th, const SignSeq& eps, const SignSeq& eps2) {
    TensorReport r;
    r.eps = eps;
    r.eps2 = eps2;
    const Limits& lim = th.limits();
    const StateSpace& A = th.space(eps);
    const StateSpace& B = th.space(eps2);
    const StateSpace& T = th.space(eps + eps2);

    // Diagrams with no arc across the cut make up the image.
    std::size_t cut = eps.size();
    std::vector<BitVec> split;
    for (std::size_t i = 0; i < T.spanning.size(); ++i) {
        const auto& p = T.spanning[i].partner;
        bool crosses = false;
        for (std::size_t k = 0; k < p.size(); ++k)
            if (p[k] >= 0 && ((k < cut) != (sz(p[k]) < cut))) crosses = true;
        if (!crosses) split.push_back(T.span[i]);
    }
    Span image(T.span.dim(), split);
    r.surjective = true;
    for (auto& g : T.span.generators())
        if (!image.contains(g)) {
            r.surjective = false;
            break;
        }
    // Cardinalities are reported when small; the decision never needs them
    // unless both factors fail to be distributive.
    r.card_image = image.count(lim.tensor);
    r.card_target = T.span.count(lim.tensor);
    std::vector<BitVec> kron;
    for (auto& a : A.span.generators())
        for (auto& b : B.span.generators()) kron.push_back(a.kron(b));
    r.card_reduced = Span(A.span.dim() * B.span.dim(), kron).count(lim.tensor);

    if (A.span.is_distributive() || B.span.is_distributive()) {
        // a distributive factor is flat, so the full and reduced products agree
        r.injective = true;
    } else {
        auto ca = A.span.count(lim.tensor), cb = B.span.count(lim.tensor);
        auto img = image.count(lim.elements);
        if (!ca || !cb || *ca * *cb > lim.tensor || !img)
            throw SizeLimit("cannot decide injectivity for " + eps + " | " + eps2 + " within the size limits");
        // the product maps onto the image, so counting past it settles the question
        r.card_full = boolsemi::tensor_size(A.span.to_semimodule(), B.span.to_semimodule(), *img);
        r.injective = r.card_full.has_value() && *r.card_full == *img;
    }
    r.iso = r.injective && r.surjective;
    return r;
}

TensorReport tensor_compare(const Evaluation& ev, const SignSeq& eps, const SignSeq& eps2) {
    return tensor_compare(Theory(ev), eps, eps2);
}

TqftReport tqft_check(const Theory& th, std::size_t max_len) {
    std::vector<SignSeq> seqs;
    for (std::size_t len = 1; len < max_len; ++len)
        for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
            SignSeq s;
            for (std::size_t i = 0; i < len; ++i) s.push_back(mask >> (len - 1 - i) & 1u ? '-' : '+');
            seqs.push_back(s);
        }
    std::vector<std::pair<SignSeq, SignSeq>> jobs{{"+", "-"}, {"-", "+"}};
    for (std::size_t total = 2; total <= max_len; ++total)
        for (auto& a : seqs)
            for (auto& b : seqs)
                if (a.size() + b.size() == total && !(total == 2 && a != b)) jobs.emplace_back(a, b);
    TqftReport rep;
    for (auto& [a, b] : jobs) {
        rep.checks.push_back(tensor_compare(th, a, b));
        if (!rep.checks.back().iso) {
            rep.holds = false;
            break;
        }
    }
    return rep;
}

TqftReport tqft_check(const Evaluation& ev, std::size_t max_len) { return tqft_check(Theory(ev), max_len); }

}  // namespace booltop::theory
