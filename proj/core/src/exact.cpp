#include "mpt/exact.hpp"

namespace mpt {

int det_sign(IntMatrix m) {
    if (m.rows() != m.cols()) throw error("det_sign: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1; // det of the empty matrix

    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            m.swap_rows(piv, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Bareiss update; the division by the previous pivot is exact.
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * sign_of(m(n - 1, n - 1));
}

Elimination eliminate(IntMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Elimination out;
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) m.swap_rows(piv, r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(r, c);
        out.pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    out.rank = static_cast<int>(r);
    return out;
}

} // namespace mpt
