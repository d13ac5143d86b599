#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace booltop {

// Fixed-width bit vector. Coordinate 0 is the leftmost character of the
// string form. Join is bitwise OR, order is bitwise inclusion.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec from_string(std::string_view s);

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        if (v)
            w_[i >> 6] |= (std::uint64_t{1} << (i & 63));
        else
            w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }

    BitVec& operator|=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    BitVec& operator&=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

    // this <= o bitwise
    bool subset_of(const BitVec& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const BitVec& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // Appends the coordinates of o after ours.
    BitVec concat(const BitVec& o) const;
    // Kronecker product: coordinate (i, j) lands at i * o.size() + j.
    BitVec kron(const BitVec& o) const;

    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t x = w_[k];
            while (x) {
                int b = std::countr_zero(x);
                f(k * 64 + static_cast<std::size_t>(b));
                x &= x - 1;
            }
        }
    }

    std::string str() const;

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    // Same order as comparing the string forms.
    bool operator<(const BitVec& o) const;

    std::size_t hash() const {
        std::size_t h = n_ * 0x9e3779b97f4a7c15ull;
        for (auto x : w_) h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& b) const { return b.hash(); }
};

}  // namespace booltop
