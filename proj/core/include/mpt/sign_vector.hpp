#pragma once

#include <string>
#include <vector>

#include "mpt/bitset.hpp"

namespace mpt {

enum class Sign : int { minus = -1, zero = 0, plus = 1 };

inline char to_char(Sign s) {
    switch (s) {
        case Sign::minus: return '-';
        case Sign::plus:  return '+';
        default:          return '0';
    }
}

// Sign vector in {-,0,+}^E, stored as the pair (positive part, negative part).
// This is the working currency of the whole library: cocircuits, circuits and
// covectors are all SignVectors over the same ground set.
class SignVector {
public:
    SignVector() = default;
    explicit SignVector(std::size_t n) : pos_(n), neg_(n) {}
    SignVector(Bitset pos, Bitset neg) : pos_(std::move(pos)), neg_(std::move(neg)) {
        if (pos_.size() != neg_.size() || pos_.intersects(neg_))
            throw error("SignVector: positive and negative parts overlap or mismatch");
    }

    // Parse "+0-"-style strings (any of '+', '-', '0').
    static SignVector from_string(const std::string& s) {
        SignVector v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            switch (s[i]) {
                case '+': v.pos_.set(i); break;
                case '-': v.neg_.set(i); break;
                case '0': break;
                default:
                    throw error(std::string("SignVector: bad character '") + s[i] + "'");
            }
        }
        return v;
    }

    static SignVector all_plus(std::size_t n) {
        return SignVector(Bitset::full(n), Bitset(n));
    }

    std::size_t size() const { return pos_.size(); }

    Sign sign(std::size_t i) const {
        if (pos_.test(i)) return Sign::plus;
        if (neg_.test(i)) return Sign::minus;
        return Sign::zero;
    }

    void set(std::size_t i, Sign s) {
        pos_.reset(i);
        neg_.reset(i);
        if (s == Sign::plus) pos_.set(i);
        else if (s == Sign::minus) neg_.set(i);
    }

    const Bitset& positive_part() const { return pos_; }
    const Bitset& negative_part() const { return neg_; }
    Bitset support() const { return pos_ | neg_; }
    Bitset zero_set() const { return support().complement(); }
    std::size_t support_size() const { return pos_.count() + neg_.count(); }

    bool is_zero() const { return pos_.none() && neg_.none(); }
    bool is_nonnegative() const { return neg_.none(); }

    SignVector negated() const { return SignVector(neg_, pos_); }

    // Flip signs on the elements of A (reorientation).
    SignVector reoriented(const Bitset& a) const {
        SignVector r = *this;
        for (int i = a.next(); i >= 0; i = a.next(i + 1)) {
            Sign s = sign(static_cast<std::size_t>(i));
            if (s == Sign::plus) r.set(i, Sign::minus);
            else if (s == Sign::minus) r.set(i, Sign::plus);
        }
        return r;
    }

    // Composition x o y: take x's sign wherever x is nonzero, else y's.
    friend SignVector compose(const SignVector& x, const SignVector& y) {
        if (x.size() != y.size()) throw error("compose: size mismatch");
        Bitset xsupp = x.pos_ | x.neg_;
        Bitset mask = xsupp.complement();
        return SignVector(x.pos_ | (y.pos_ & mask), x.neg_ | (y.neg_ & mask));
    }

    bool operator==(const SignVector& o) const { return pos_ == o.pos_ && neg_ == o.neg_; }
    bool operator!=(const SignVector& o) const { return !(*this == o); }

    // Entrywise lexicographic order with - < 0 < +; total, used for canonical
    // storage and for picking one representative of each {v, -v} pair.
    bool operator<(const SignVector& o) const {
        if (size() != o.size()) return size() < o.size();
        for (std::size_t i = 0; i < size(); ++i) {
            int a = static_cast<int>(sign(i)), b = static_cast<int>(o.sign(i));
            if (a != b) return a < b;
        }
        return false;
    }

    std::size_t hash() const { return pos_.hash() * 1000003u ^ neg_.hash(); }

    std::string to_string() const {
        std::string s(size(), '0');
        for (std::size_t i = 0; i < size(); ++i) s[i] = to_char(sign(i));
        return s;
    }

private:
    Bitset pos_, neg_;
};

// Conformality test used by face characterizations: every nonzero entry of x
// agrees with w. Equivalently x^+ <= w^+ and x^- <= w^-.
inline bool conforms_to(const SignVector& x, const SignVector& w) {
    return x.positive_part().is_subset_of(w.positive_part()) &&
           x.negative_part().is_subset_of(w.negative_part());
}

// Cell-face relation: w_prime is a face of the cell w when its support is
// contained in w's and the signs agree there. Same predicate as conforms_to,
// named for the lattice-side reading.
inline bool is_face_cell(const SignVector& w_prime, const SignVector& w) {
    return conforms_to(w_prime, w);
}

struct SignVectorHash {
    std::size_t operator()(const SignVector& v) const { return v.hash(); }
};

} // namespace mpt
