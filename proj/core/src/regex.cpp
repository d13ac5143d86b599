#include <algorithm>
#include <numeric>

#include "booltop/lang.hpp"
#include "eps_nfa.hpp"

namespace booltop::lang {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        char c = letters_[i];
        if (c < 'a' || c > 'z') throw Error("InvalidAlphabet", std::string("letters must be lowercase ASCII, got '") + c + "'");
        if (letters_.find(c) != i) throw Error("InvalidAlphabet", std::string("duplicate letter '") + c + "'");
    }
}

int Alphabet::index(char c) const {
    auto p = letters_.find(c);
    return p == std::string::npos ? -1 : static_cast<int>(p);
}

Word Alphabet::word(std::string_view s) const {
    Word w;
    for (char c : s) {
        int i = index(c);
        if (i < 0) throw UnknownLetter(std::string("letter '") + c + "' is not in the alphabet");
        w.push_back(i);
    }
    return w;
}

std::string Alphabet::str(const Word& w) const {
    std::string s;
    for (int a : w) s.push_back(letters_[static_cast<std::size_t>(a)]);
    return s;
}

Word canonical_rotation(const Word& w) {
    Word best = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        Word r(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
        r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        if (r < best) best = std::move(r);
    }
    return best;
}

std::vector<Word> words_up_to(std::size_t k, std::size_t n) {
    std::vector<Word> out{Word{}};
    std::size_t from = 0;
    for (std::size_t len = 1; len <= n; ++len) {
        std::size_t to = out.size();
        for (std::size_t i = from; i < to; ++i)
            for (std::size_t a = 0; a < k; ++a) {
                Word w = out[i];
                w.push_back(static_cast<int>(a));
                out.push_back(std::move(w));
            }
        from = to;
        if (k == 0) break;
    }
    return out;
}

// ---- regex ----

// Fully parenthesised, so it parses back to an equivalent tree.
std::string RegexAst::str(const Alphabet& al) const {
    switch (kind) {
        case Kind::Empty: return "0";
        case Kind::Eps: return "1";
        case Kind::Letter: return std::string(1, al.letter(static_cast<std::size_t>(letter)));
        case Kind::Star: return "(" + kids[0]->str(al) + ")*";
        case Kind::Union: return "(" + kids[0]->str(al) + "+" + kids[1]->str(al) + ")";
        case Kind::Concat: return "(" + kids[0]->str(al) + kids[1]->str(al) + ")";
    }
    return "0";
}

namespace {

Regex node(RegexAst::Kind k, std::vector<Regex> kids = {}, int letter = -1) {
    auto n = std::make_shared<RegexAst>();
    n->kind = k;
    n->kids = std::move(kids);
    n->letter = letter;
    return n;
}

class Parser {
public:
    Parser(std::string_view t, const Alphabet& al) : t_(t), al_(al) {}

    Regex parse() {
        Regex r = alternation();
        skip();
        if (p_ != t_.size()) throw SyntaxError(p_, std::string("unexpected '") + t_[p_] + "'");
        return r;
    }

private:
    void skip() {
        while (p_ < t_.size() && (t_[p_] == ' ' || t_[p_] == '\t')) ++p_;
    }
    char peek() {
        skip();
        return p_ < t_.size() ? t_[p_] : '\0';
    }
    static bool starts_atom(char c) { return (c >= 'a' && c <= 'z') || c == '0' || c == '1' || c == '('; }

    Regex alternation() {
        Regex r = concatenation();
        while (peek() == '+') {
            ++p_;
            r = node(RegexAst::Kind::Union, {r, concatenation()});
        }
        return r;
    }
    Regex concatenation() {
        if (!starts_atom(peek())) {
            if (p_ < t_.size()) throw SyntaxError(p_, std::string("expected an expression before '") + t_[p_] + "'");
            throw SyntaxError(p_, "unexpected end of expression");
        }
        Regex r = starred();
        while (starts_atom(peek())) r = node(RegexAst::Kind::Concat, {r, starred()});
        return r;
    }
    Regex starred() {
        Regex r = atom();
        while (peek() == '*') {
            ++p_;
            r = node(RegexAst::Kind::Star, {r});
        }
        return r;
    }
    Regex atom() {
        char c = peek();
        std::size_t at = p_;
        ++p_;
        if (c == '1') return node(RegexAst::Kind::Eps);
        if (c == '0') return node(RegexAst::Kind::Empty);
        if (c == '(') {
            Regex r = alternation();
            if (peek() != ')') throw SyntaxError(p_, "expected ')'");
            ++p_;
            return r;
        }
        int i = al_.index(c);
        if (i < 0) throw UnknownLetter(std::string("letter '") + c + "' at offset " + std::to_string(at) + " is not in the alphabet");
        return node(RegexAst::Kind::Letter, {}, i);
    }

    std::string_view t_;
    const Alphabet& al_;
    std::size_t p_ = 0;
};

// Thompson fragments over the shared epsilon-NFA.
struct Frag {
    int in, out;
};

Frag build(const RegexAst& r, EpsNfa& g) {
    using K = RegexAst::Kind;
    switch (r.kind) {
        case K::Empty: return {g.add_state(), g.add_state()};
        case K::Eps: {
            int s = g.add_state();
            return {s, s};
        }
        case K::Letter: {
            int s = g.add_state(), t = g.add_state();
            g.add_edge(s, r.letter, t);
            return {s, t};
        }
        case K::Concat: {
            Frag a = build(*r.kids[0], g), b = build(*r.kids[1], g);
            g.add_eps(a.out, b.in);
            return {a.in, b.out};
        }
        case K::Union: {
            Frag a = build(*r.kids[0], g), b = build(*r.kids[1], g);
            int s = g.add_state(), t = g.add_state();
            g.add_eps(s, a.in);
            g.add_eps(s, b.in);
            g.add_eps(a.out, t);
            g.add_eps(b.out, t);
            return {s, t};
        }
        case K::Star: {
            Frag a = build(*r.kids[0], g);
            int s = g.add_state();
            g.add_eps(s, a.in);
            g.add_eps(a.out, s);
            return {s, s};
        }
    }
    return {0, 0};
}

}  // namespace

Regex parse_regex(std::string_view text, const Alphabet& al) { return Parser(text, al).parse(); }

Nfa compile(const Regex& r, const Alphabet& al) {
    EpsNfa g(al.size());
    Frag f = build(*r, g);
    g.inits.push_back(f.in);
    g.final.assign(g.size(), false);
    g.final[static_cast<std::size_t>(f.out)] = true;
    return g.to_nfa(al);
}

Dfa dfa_from_regex(std::string_view text, const Alphabet& al) {
    return minimize(determinize(compile(parse_regex(text, al), al)));
}

}  // namespace booltop::lang
