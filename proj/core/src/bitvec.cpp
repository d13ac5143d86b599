#include "booltop/bitvec.hpp"

#include <stdexcept>

namespace booltop {

BitVec BitVec::from_string(std::string_view s) {
    BitVec b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            b.set(i);
        else if (s[i] != '0')
            throw std::invalid_argument("bit-string may only contain '0' and '1'");
    }
    return b;
}

BitVec BitVec::concat(const BitVec& o) const {
    BitVec r(n_ + o.n_);
    for_each_set([&](std::size_t i) { r.set(i); });
    o.for_each_set([&](std::size_t i) { r.set(n_ + i); });
    return r;
}

BitVec BitVec::kron(const BitVec& o) const {
    BitVec r(n_ * o.n_);
    for_each_set([&](std::size_t i) { o.for_each_set([&](std::size_t j) { r.set(i * o.n_ + j); }); });
    return r;
}

std::string BitVec::str() const {
    std::string s(n_, '0');
    for_each_set([&](std::size_t i) { s[i] = '1'; });
    return s;
}

bool BitVec::operator<(const BitVec& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (std::size_t k = 0; k < w_.size(); ++k) {
        std::uint64_t d = w_[k] ^ o.w_[k];
        if (d) {
            int b = std::countr_zero(d);
            // whichever has a 0 at the first differing coordinate is smaller
            return ((w_[k] >> b) & 1u) == 0;
        }
    }
    return false;
}

}  // namespace booltop
