#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "mpt/errors.hpp"

namespace mpt {

// Dynamically sized bitset over a ground set {0, ..., n-1}.
// Ground sets here are small (a few dozen elements) but may exceed 64,
// so this stores a vector of words instead of a single uint64_t.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static Bitset full(std::size_t n) {
        Bitset b(n);
        for (auto& w : b.w_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    static Bitset of(std::size_t n, std::initializer_list<int> bits) {
        Bitset b(n);
        for (int i : bits) b.set(i);
        return b;
    }

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const {
        check(i);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    void set(std::size_t i) {
        check(i);
        w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        check(i);
        w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void clear() { for (auto& w : w_) w = 0; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool is_subset_of(const Bitset& o) const {
        same(o);
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        same(o);
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        same(o);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        same(o);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    Bitset complement() const {
        Bitset r(n_);
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
        r.trim();
        return r;
    }

    // Index of the lowest set bit at or after `from`, or -1 if none.
    int next(std::size_t from = 0) const {
        if (from >= n_) return -1;
        std::size_t k = from >> 6;
        std::uint64_t w = w_[k] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return static_cast<int>((k << 6) + std::countr_zero(w));
            if (++k == w_.size()) return -1;
            w = w_[k];
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (int i = next(); i >= 0; i = next(i + 1)) out.push_back(i);
        return out;
    }

    // First word; enough for the fast paths that require n <= 64.
    std::uint64_t word0() const { return w_.empty() ? 0 : w_[0]; }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    // Arbitrary but total order; used to keep face lists canonical.
    bool operator<(const Bitset& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        for (std::size_t k = w_.size(); k-- > 0;)
            if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
        return false;
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto w : w_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h ^ n_);
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i)
            if (test(i)) s[i] = '1';
        return s;
    }

private:
    void check(std::size_t i) const {
        if (i >= n_) throw error("Bitset index " + std::to_string(i) +
                                 " out of range (size " + std::to_string(n_) + ")");
    }
    void same(const Bitset& o) const {
        if (n_ != o.n_) throw error("Bitset size mismatch: " + std::to_string(n_) +
                                    " vs " + std::to_string(o.n_));
    }
    void trim() {
        if (n_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

} // namespace mpt
