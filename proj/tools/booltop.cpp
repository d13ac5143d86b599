// booltop: command-line front end. Every verb runs one library operation and
// prints JSON (default), DOT or a plain table. Exit codes: 0 success, 1 usage
// or input syntax, 2 domain failure with {"error","message"} on stdout.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "booltop/circauto.hpp"
#include "booltop/io.hpp"
#include "booltop/lang.hpp"
#include "booltop/measure.hpp"
#include "booltop/pairing.hpp"
#include "booltop/theory.hpp"

using json = nlohmann::ordered_json;
using namespace booltop;

namespace {

struct Options {
    std::string alphabet;
    std::vector<std::string> regex;
    std::string circ_regex;
    std::string in, out;
    std::string format;  // empty: the verb picks (DOT for circ-min, JSON elsewhere)
    std::size_t max_len = 4;
    std::uint64_t limit = 0;
    std::string eps = "+-";
    std::string letter, word;
    bool dedup = false, raw = false;
};

// Input problems that are the caller's fault rather than the mathematics'.
bool is_usage(const Error& e) {
    static const char* kinds[] = {"SyntaxError", "UnknownLetter", "InvalidAlphabet", "InvalidJson", "InvalidSigns",
                                  "InvalidCase", "Usage"};
    for (auto* k : kinds)
        if (e.kind() == k) return true;
    return false;
}

struct Usage : Error {
    explicit Usage(const std::string& m) : Error("Usage", m) {}
};

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Usage("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

json parsed(const std::string& s) { return json::parse(s); }

std::string show(const lang::Alphabet& al, const lang::Word& w) { return w.empty() ? "1" : al.str(w); }

class Runner {
public:
    explicit Runner(Options& o) : o_(o) {}

    Limits limits() const {
        Limits l = default_limits();
        if (o_.limit) {
            l.tensor = o_.limit;
            l.elements = o_.limit * 16;
            l.diagrams = o_.limit * 4;
        }
        return l;
    }
    lang::Alphabet alphabet() const { return lang::Alphabet(o_.alphabet); }
    lang::Dfa interval() const {
        if (o_.regex.empty()) throw Usage("--regex is required");
        return lang::dfa_from_regex(o_.regex[0], alphabet());
    }
    lang::Dfa circle() const {
        if (o_.circ_regex.empty()) throw Usage("--circ-regex is required");
        return lang::dfa_from_regex(o_.circ_regex, alphabet());
    }
    theory::Evaluation evaluation() const { return theory::Evaluation::make(interval(), circle()); }

    std::string min_dfa() {
        auto d = interval();
        if (o_.format == "dot") return io::dfa_dot(d);
        if (o_.format == "table") {
            std::string s = "state\tword\taccept";
            for (char c : d.alphabet.letters()) s += std::string("\t") + c;
            s += "\n";
            auto words = lang::access_words(d);
            for (std::size_t q = 0; q < d.n_states; ++q) {
                s += std::to_string(q) + "\t" + show(d.alphabet, words[q]) + "\t" + (d.accepting[q] ? "1" : "0");
                for (int t : d.delta[q]) s += "\t" + std::to_string(t);
                s += "\n";
            }
            return s;
        }
        return io::dfa_json(d) + "\n";
    }

    std::string min_nfa() {
        auto h = theory::half_state_space(interval(), theory::Sign::Minus);
        auto r = theory::minimal_nfas(h, o_.limit ? o_.limit : 1000, o_.dedup);
        if (o_.format == "dot") {
            std::string s;
            for (std::size_t i = 0; i < r.nfas.size(); ++i) s += io::nfa_dot(r.nfas[i], "nfa" + std::to_string(i));
            return s;
        }
        json j;
        json names = json::array();
        for (auto x : r.states) names.push_back(h.name(x));
        j["states"] = names;
        j["liftings"] = r.count;
        j["emitted"] = r.nfas.size();
        json nfas = json::array();
        for (auto& n : r.nfas) nfas.push_back(parsed(io::nfa_json(n)));
        j["nfas"] = nfas;
        return j.dump() + "\n";
    }

    std::string monoid() {
        auto d = interval();
        auto m = lang::syntactic_monoid(d);
        if (o_.format == "table") {
            std::string s;
            for (std::size_t x = 0; x < m.size(); ++x) {
                s += show(d.alphabet, m.reps[x]) + (m.in_language[x] ? "*" : "") + "\t";
                for (std::size_t y = 0; y < m.size(); ++y) s += (y ? " " : "") + std::to_string(m.mult[x][y]);
                s += "\n";
            }
            return s;
        }
        json j;
        j["size"] = m.size();
        json el = json::array();
        for (std::size_t x = 0; x < m.size(); ++x) el.push_back({{"word", show(d.alphabet, m.reps[x])}, {"in_language", bool(m.in_language[x])}});
        j["elements"] = el;
        j["mult"] = m.mult;
        return j.dump() + "\n";
    }

    std::string circ_min() {
        auto c = circauto::minimal_dcfa(circle());
        if (o_.format == "json") {
            json j = parsed(io::dcfa_json(c));
            json words = json::array();
            for (auto& w : circauto::state_words(c)) words.push_back(show(c.alphabet, w));
            j["words"] = words;
            return j.dump() + "\n";
        }
        return io::dcfa_dot(c);
    }

    std::string state_space() {
        theory::Theory th(evaluation(), limits());
        const auto& s = th.space(o_.eps, !o_.raw);
        if (o_.format == "table") {
            std::string t;
            for (std::size_t i = 0; i < s.spanning.size(); ++i)
                t += s.gram.row(i).str() + "\t" + th.describe(o_.eps, s.spanning[i]) + "\n";
            return t;
        }
        json j;
        j["eps"] = o_.eps;
        j["spanning"] = s.spanning.size();
        j["rank"] = s.span.rank();
        j["free"] = s.span.is_free();
        j["distributive"] = s.span.is_distributive();
        auto n = s.span.count(th.limits().elements);
        j["size"] = n ? json(*n) : json(nullptr);
        json irr = json::array();
        for (auto i : s.span.irreducible_indices()) irr.push_back(th.describe(o_.eps, s.spanning[i]));
        j["irreducibles"] = irr;
        return j.dump() + "\n";
    }

    std::string pm_space() {
        theory::Theory th(evaluation(), limits());
        const auto& pm = th.pm();
        if (o_.format == "table") {
            std::string t;
            for (std::size_t i = 0; i < pm.spanning.size(); ++i)
                t += pm.gram.row(i).str() + "\t" + th.describe(pm.spanning[i]) + "\n";
            return t;
        }
        json j;
        json names = json::array();
        for (auto& d : pm.spanning) names.push_back(th.describe(d));
        j["spanning"] = names;
        j["gram"] = parsed(io::matrix_json(pm.gram));
        j["rank"] = pm.span.rank();
        j["free"] = pm.span.is_free();
        auto n = pm.span.count(th.limits().elements);
        j["size"] = n ? json(*n) : json(nullptr);
        json irr = json::array();
        for (auto i : pm.span.irreducible_indices()) irr.push_back(th.describe(pm.spanning[i]));
        j["irreducibles"] = irr;
        j["symmetric"] = pm.gram.is_symmetric();
        return j.dump() + "\n";
    }

    std::string cuttable() {
        auto id = theory::id_decomposition(interval());
        json j;
        j["cuttable"] = true;
        j["decomposition"] = id.str();
        json terms = json::array();
        for (auto& t : id.terms) terms.push_back({{"plus", id.plus.name(t.u)}, {"minus", id.minus.name(t.v)}});
        j["terms"] = terms;
        return j.dump() + "\n";
    }

    std::string canonical_circ() {
        auto d = theory::canonical_circular(theory::id_decomposition(interval()));
        if (o_.format == "dot") return io::dfa_dot(d, "circle");
        return io::dfa_json(d) + "\n";
    }

    std::string tqft() {
        theory::Theory th(evaluation(), limits());
        auto r = theory::tqft_check(th, o_.max_len);
        json j;
        j["holds"] = r.holds;
        j["max_len"] = o_.max_len;
        json checks = json::array();
        auto opt = [](const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); };
        for (auto& c : r.checks)
            checks.push_back({{"eps", c.eps},
                              {"eps2", c.eps2},
                              {"injective", c.injective},
                              {"surjective", c.surjective},
                              {"iso", c.iso},
                              {"image", opt(c.card_image)},
                              {"target", opt(c.card_target)},
                              {"reduced", opt(c.card_reduced)}});
        j["checks"] = checks;
        return j.dump() + "\n";
    }

    std::string complexity() {
        auto c = measure::complexity(interval());
        json j{{"card", c.card}, {"bits", c.bits}};
        return j.dump() + "\n";
    }

    std::string joint() {
        if (o_.regex.empty()) throw Usage("--regex is required");
        std::vector<lang::Dfa> ds;
        json single = json::array();
        for (auto& r : o_.regex) {
            ds.push_back(lang::dfa_from_regex(r, alphabet()));
            single.push_back(measure::complexity(ds.back()).card);
        }
        auto c = measure::joint_complexity(ds);
        json j{{"card", c.card}, {"bits", c.bits}, {"single", single}};
        if (ds.size() == 2) {
            auto r = measure::relative_complexity(ds[0], ds[1]);
            j["relative_bits"] = r.bits;
        }
        return j.dump() + "\n";
    }

    std::string pairing() {
        if (o_.in.empty()) throw Usage("--in is required");
        auto t = io::pairing_from_json(read_file(o_.in));
        auto s = pairing::pairing_state_space(t);
        // Is the cup a join of pure tensors?
        BitVec acc(s.space.dim());
        const BitVec& cup = s.space.at(s.element_of[pairing::cup_index(t)]);
        for (std::size_t i = 0; i < pairing::cup_index(t); ++i)
            if (s.space.at(s.element_of[i]).subset_of(cup)) acc |= s.space.at(s.element_of[i]);
        json j;
        j["gram"] = parsed(io::matrix_json(s.gram));
        j["size"] = s.space.size();
        j["cup_in_product_span"] = acc == cup;
        return j.dump() + "\n";
    }

    std::string derive_cyclic() {
        auto al = alphabet();
        if (o_.letter.size() != 1 || al.index(o_.letter[0]) < 0) throw Usage("--letter must be one letter of the alphabet");
        int a = al.index(o_.letter[0]);
        if (!o_.word.empty() || o_.circ_regex.empty()) {
            json words = json::array();
            for (auto& w : lang::cyclic_derivative_word(al.word(o_.word), a)) words.push_back(show(al, w));
            return json{{"derivative", words}}.dump() + "\n";
        }
        auto d = lang::minimize(lang::determinize(lang::cyclic_derivative_lang(circle(), a)));
        if (o_.format == "dot") return io::dfa_dot(d, "derivative");
        return io::dfa_json(d) + "\n";
    }

    std::string validate() {
        if (o_.in.empty()) throw Usage("--in is required");
        auto c = io::dcfa_from_json(read_file(o_.in));
        auto v = circauto::validate_dcfa(c);
        if (!v.empty()) {
            json list = json::array();
            for (auto& x : v) list.push_back(x.str());
            failure_ = json{{"error", "InvalidAutomaton"}, {"message", "circular automaton axioms fail"}, {"violations", list}};
            return "";
        }
        return json{{"valid", true}, {"states", c.n_states}}.dump() + "\n";
    }

    std::optional<json> failure_;

private:
    Options& o_;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boolean state spaces of regular languages and their circular companions"};
    app.require_subcommand(1);
    Options o;

    auto fmt = [&](CLI::App* c) {
        c->add_option("--format", o.format, "json, dot or table")->check(CLI::IsMember({"json", "dot", "table"}));
        c->add_option("--out", o.out, "write the result here instead of stdout");
        c->add_option("--limit", o.limit, "size guard (or lifting limit for min-nfa)");
    };
    auto lang_opts = [&](CLI::App* c, bool interval, bool circ) {
        c->add_option("--alphabet", o.alphabet, "letters, e.g. ab")->required();
        if (interval) c->add_option("--regex", o.regex, "interval language")->required();
        if (circ) c->add_option("--circ-regex", o.circ_regex, "rotation-closed circle language")->required();
        fmt(c);
    };

    std::map<std::string, std::string (Runner::*)()> verbs;
    auto verb = [&](const std::string& name, const std::string& help, std::string (Runner::*f)()) {
        verbs[name] = f;
        return app.add_subcommand(name, help);
    };
    lang_opts(verb("min-dfa", "minimal complete DFA", &Runner::min_dfa), true, false);
    auto* nfa = verb("min-nfa", "minimal NFAs from liftings of A(-)", &Runner::min_nfa);
    lang_opts(nfa, true, false);
    nfa->add_flag("--dedup", o.dedup, "report liftings equal up to renaming once");
    lang_opts(verb("monoid", "syntactic monoid", &Runner::monoid), true, false);
    lang_opts(verb("circ-min", "minimal circular automaton", &Runner::circ_min), false, true);
    auto* ss = verb("state-space", "state space A(eps)", &Runner::state_space);
    lang_opts(ss, true, true);
    ss->add_option("--eps", o.eps, "boundary signs, e.g. +-+");
    ss->add_flag("--raw", o.raw, "use every label instead of irreducible ones");
    lang_opts(verb("pm-space", "the semiring A(+-) with its pairing", &Runner::pm_space), true, true);
    lang_opts(verb("cuttable", "decomposition of the identity", &Runner::cuttable), true, false);
    lang_opts(verb("canonical-circ", "circle language induced by the interval language", &Runner::canonical_circ), true, false);
    auto* tq = verb("tqft", "check that state spaces are tensor products", &Runner::tqft);
    lang_opts(tq, true, true);
    tq->add_option("--max-len", o.max_len, "largest total boundary length");
    lang_opts(verb("complexity", "log2 of |A(-)|", &Runner::complexity), true, false);
    lang_opts(verb("joint", "joint complexity of several languages", &Runner::joint), true, false);
    auto* pr = verb("pairing", "theory given by a pairing matrix and a circle value", &Runner::pairing);
    pr->add_option("--in", o.in, "JSON file {matrix, lambda}")->required();
    fmt(pr);
    auto* dc = verb("derive-cyclic", "cyclic derivative of a circular word or language", &Runner::derive_cyclic);
    dc->add_option("--alphabet", o.alphabet, "letters")->required();
    dc->add_option("--circ-regex", o.circ_regex, "rotation-closed language");
    dc->add_option("--letter", o.letter, "letter to remove")->required();
    dc->add_option("--word", o.word, "single circular word instead of a language");
    fmt(dc);
    auto* va = verb("validate", "check the circular automaton axioms", &Runner::validate);
    va->add_option("--in", o.in, "circular automaton JSON")->required();
    fmt(va);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    Runner run(o);
    std::string name = app.get_subcommands().front()->get_name();
    std::string result;
    try {
        result = (run.*verbs.at(name))();
    } catch (const Error& e) {
        if (is_usage(e)) {
            std::cerr << "booltop: " << e.what() << "\n";
            return 1;
        }
        json j{{"error", e.kind()}, {"message", e.what()}};
        if (auto* lim = dynamic_cast<const LimitExceeded*>(&e)) j["count"] = lim->count;
        if (auto* nc = dynamic_cast<const NotCuttable*>(&e)) j["witness"] = {nc->x, nc->a, nc->b};
        std::cout << j.dump() << "\n";
        return 2;
    }
    if (run.failure_) {
        std::cout << run.failure_->dump() << "\n";
        return 2;
    }
    if (o.out.empty()) {
        std::cout << result;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "booltop: cannot write " << o.out << "\n";
            return 1;
        }
        f << result;
    }
    return 0;
}
