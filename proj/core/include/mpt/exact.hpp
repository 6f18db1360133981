#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mpt/errors.hpp"

namespace mpt {

// All arithmetic on coordinates is exact. Coordinates come in as machine
// integers but minors can grow, so matrices hold arbitrary-precision values.
using BigInt = boost::multiprecision::cpp_int;

inline int sign_of(const BigInt& x) {
    if (x == 0) return 0;
    return x < 0 ? -1 : 1;
}

// Dense row-major matrix of BigInt. Deliberately minimal: the library only
// needs construction, element access and fraction-free elimination.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols_; ++c)
            a_[i * cols_ + c].swap(a_[j * cols_ + c]);
    }

    // Submatrix given by explicit row and column index lists.
    IntMatrix select(const std::vector<int>& rows, const std::vector<int>& cols) const {
        IntMatrix m(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                m(i, j) = (*this)(rows[i], cols[j]);
        return m;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

// Sign of det(m) for a square matrix, via Bareiss fraction-free elimination.
// Every division is exact, so the result is the true sign, never a rounded one.
int det_sign(IntMatrix m);

// Rank of a rectangular matrix plus one choice of pivot columns
// (the pivot columns form a column basis).
struct Elimination {
    int rank = 0;
    std::vector<int> pivot_cols;
};
Elimination eliminate(IntMatrix m);

inline int rank_of(IntMatrix m) { return eliminate(std::move(m)).rank; }

} // namespace mpt
