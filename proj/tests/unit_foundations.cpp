#include <doctest.h>

#include <algorithm>
#include <random>

#include "mpt/exact.hpp"
#include "mpt/sign_vector.hpp"
#include "oracle.hpp"

using namespace mpt;

namespace {

IntMatrix to_matrix(const oracle::Matrix& m) {
    IntMatrix out(m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = m[i][j];
    return out;
}

} // namespace

TEST_CASE("bitset basics") {
    Bitset b(70); // force the two-word path
    CHECK(b.none());
    b.set(0);
    b.set(69);
    CHECK(b.count() == 2);
    CHECK(b.test(69));
    CHECK(b.next() == 0);
    CHECK(b.next(1) == 69);
    CHECK(b.next(70) == -1);
    CHECK(b.to_indices() == std::vector<int>{0, 69});

    Bitset full = Bitset::full(70);
    CHECK(full.count() == 70);
    CHECK(b.is_subset_of(full));
    CHECK(full.complement().none());
    CHECK((full & b) == b);
    CHECK((b | full) == full);
    CHECK(b.complement().count() == 68);

    CHECK_THROWS_AS(b.set(70), error);
    CHECK_THROWS_AS((void)(b & Bitset(3)), error);
}

TEST_CASE("bitset order is total and consistent with equality") {
    std::vector<Bitset> all;
    for (int m = 0; m < 32; ++m) {
        Bitset b(5);
        for (int i = 0; i < 5; ++i)
            if (m & (1 << i)) b.set(i);
        all.push_back(b);
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
        CHECK(all[i] < all[i + 1]);
        CHECK(all[i] != all[i + 1]);
    }
}

TEST_CASE("sign vector parse, compose, reorient") {
    auto v = SignVector::from_string("+0-");
    CHECK(v.sign(0) == Sign::plus);
    CHECK(v.sign(1) == Sign::zero);
    CHECK(v.sign(2) == Sign::minus);
    CHECK(v.to_string() == "+0-");
    CHECK(v.negated().to_string() == "-0+");
    CHECK(v.support_size() == 2);
    CHECK(v.zero_set() == Bitset::of(3, {1}));

    auto w = SignVector::from_string("-++");
    CHECK(compose(v, w).to_string() == "++-");
    CHECK(compose(w, v).to_string() == "-++");
    CHECK(compose(v, v) == v);

    CHECK(v.reoriented(Bitset::of(3, {0, 1})).to_string() == "-0-");
    CHECK(conforms_to(SignVector::from_string("+00"), v));
    CHECK(!conforms_to(SignVector::from_string("0+0"), v));
    CHECK(SignVector::all_plus(4).to_string() == "++++");
    CHECK_THROWS_AS(SignVector::from_string("+x"), error);
}

TEST_CASE("determinant sign matches the cofactor oracle") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> coef(-4, 4);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            oracle::Matrix m(n, std::vector<long long>(n));
            for (auto& row : m)
                for (auto& x : row) x = coef(rng);
            const long long d = oracle::det(m);
            const int want = d > 0 ? 1 : d < 0 ? -1 : 0;
            CHECK(det_sign(to_matrix(m)) == want);
        }
    }
}

TEST_CASE("elimination rank matches the submatrix oracle") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long long> coef(-3, 3);
    for (int rows = 1; rows <= 5; ++rows) {
        for (int cols = 1; cols <= 5; ++cols) {
            for (int trial = 0; trial < 25; ++trial) {
                oracle::Matrix m(rows, std::vector<long long>(cols));
                for (auto& row : m)
                    for (auto& x : row) x = coef(rng);
                CHECK(rank_of(to_matrix(m)) == oracle::rank(m));
            }
        }
    }
}

TEST_CASE("elimination pivot columns really are a column basis") {
    oracle::Matrix m = {{1, 2, 3, 5}, {2, 4, 6, 10}, {0, 1, 1, 7}};
    const auto elim = eliminate(to_matrix(m));
    CHECK(elim.rank == 2);
    REQUIRE(elim.pivot_cols.size() == 2);
    oracle::Matrix cols;
    for (const auto& row : m) {
        std::vector<long long> r;
        for (int c : elim.pivot_cols) r.push_back(row[c]);
        cols.push_back(r);
    }
    CHECK(oracle::rank(cols) == 2);
}
