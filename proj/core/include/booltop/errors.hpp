#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace booltop {

// Every domain failure carries a short machine-readable kind next to the
// human message. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg) : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(std::size_t off, const std::string& msg)
        : Error("SyntaxError", msg + " at offset " + std::to_string(off)), offset(off) {}
};
struct UnknownLetter : Error {
    explicit UnknownLetter(const std::string& msg) : Error("UnknownLetter", msg) {}
};
struct AlphabetMismatch : Error {
    AlphabetMismatch() : Error("AlphabetMismatch", "automata are over different alphabets") {}
};
struct NotCircular : Error {
    explicit NotCircular(const std::string& msg = "language is not closed under rotation")
        : Error("NotCircular", msg) {}
};
struct NotProjective : Error {
    explicit NotProjective(const std::string& msg = "semimodule is not distributive")
        : Error("NotProjective", msg) {}
};
struct SizeLimit : Error {
    explicit SizeLimit(const std::string& msg) : Error("SizeLimit", msg) {}
};
struct LimitExceeded : Error {
    std::uint64_t count;
    LimitExceeded(std::uint64_t c, std::uint64_t limit)
        : Error("LimitExceeded",
                "enumeration has " + std::to_string(c) + " items, limit is " + std::to_string(limit)),
          count(c) {}
};
struct NotCuttable : Error {
    // (x, a, b) with x <= a v b but neither x <= a nor x <= b, as element indices of A(-)
    std::size_t x, a, b;
    NotCuttable(std::size_t x_, std::size_t a_, std::size_t b_)
        : Error("NotCuttable", "A(-) is not distributive, so the identity does not decompose"), x(x_), a(a_), b(b_) {}
};
struct InvalidAutomaton : Error {
    explicit InvalidAutomaton(const std::string& msg) : Error("InvalidAutomaton", msg) {}
};

// Desk-scale ceilings. BOOLTOP_LIMIT overrides the tensor bound; the
// element ceiling for enumerations scales with it.
struct Limits {
    std::size_t tensor = 4096;
    std::size_t elements = 4096 * 16;
    std::size_t eps_len = 6;
    std::size_t diagrams = 4096 * 4;  // spanning diagrams per boundary sequence
};
Limits default_limits();

}  // namespace booltop
