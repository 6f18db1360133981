// Oriented matroid construction against the brute-force oracle: cocircuits,
// circuits, covectors, acyclicity, extremeness, reorientation, restriction.
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "mpt/cube_models.hpp"
#include "mpt/face_lattice.hpp"
#include "mpt/oriented_matroid.hpp"
#include "oracle.hpp"

using namespace mpt;

namespace {

std::set<std::string> as_strings(const std::vector<SignVector>& vs) {
    std::set<std::string> out;
    for (const auto& v : vs) out.insert(v.to_string());
    return out;
}

oracle::Matrix lifted_of(const PointConfiguration& c) {
    return oracle::lift(c.points());
}

bool om_orthogonal(const std::string& u, const std::string& v) {
    bool agree = false, disagree = false, meet = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == '0' || v[i] == '0') continue;
        meet = true;
        (u[i] == v[i] ? agree : disagree) = true;
    }
    return !meet || (agree && disagree);
}

Bitset support_of(const std::string& s) {
    Bitset b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != '0') b.set(i);
    return b;
}

} // namespace

TEST_CASE("triangle: full-rank configuration, every sign vector is a covector") {
    PointConfiguration tri("triangle", 2, {{0, 0}, {1, 0}, {0, 1}});
    auto om = OrientedMatroid::from_points(tri);
    CHECK(om.rank() == 3);
    CHECK(om.size() == 3);

    // Lifted vectors form a basis, so cocircuit supports are singletons and
    // the covector set is everything.
    auto expect = oracle::cocircuits(lifted_of(tri));
    CHECK(as_strings(om.cocircuits()) == expect);
    CHECK(om.cocircuits().size() == 6);
    for (const auto& c : om.cocircuits())
        CHECK(support_of(c.to_string()).count() == 1);

    CHECK(om.covectors().size() == 27);
    CHECK(om.topes().size() == 8);
    CHECK(om.is_covector(SignVector::from_string("+-0")));

    CHECK(om.circuits().empty());
    CHECK(oracle::circuits(lifted_of(tri)).empty());
    CHECK(om.is_acyclic());
    CHECK_FALSE(om.has_positive_circuit());
    CHECK(om.is_matroid_polytope());
}

TEST_CASE("square: cocircuits, circuits and covector count against the oracle") {
    PointConfiguration sq("square", 2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto om = OrientedMatroid::from_points(sq);
    auto lifted = lifted_of(sq);
    CHECK(om.rank() == 3);

    // 4 edge hyperplanes plus 2 diagonal ones, both orientations each.
    CHECK(as_strings(om.cocircuits()) == oracle::cocircuits(lifted));
    CHECK(om.cocircuits().size() == 12);

    // One affine dependence e1 - e2 - e3 + e4 = 0.
    auto circ = as_strings(om.circuits());
    CHECK(circ == oracle::circuits(lifted));
    CHECK(circ == std::set<std::string>{"+--+", "-++-"});

    // Corank 1, so the covector count has a closed form (here 51).
    CHECK(om.covectors().size() == oracle::corank1_covector_count(lifted));
    CHECK(om.covectors().size() == 51);

    // Edges are faces, diagonals are not.
    CHECK(om.is_covector(om.xi(Bitset::of(4, {0, 1}))));
    CHECK(om.is_covector(om.xi(Bitset::of(4, {2, 3}))));
    CHECK_FALSE(om.is_covector(om.xi(Bitset::of(4, {0, 3}))));
    CHECK_FALSE(om.is_covector(om.xi(Bitset::of(4, {1, 2}))));
    CHECK(om.is_covector(SignVector::from_string("0+-0")));
    CHECK_FALSE(om.is_covector(SignVector::from_string("0++0")));

    CHECK(om.xi(Bitset(4)).to_string() == "++++");
    CHECK(om.xi(Bitset::full(4)).to_string() == "0000");

    CHECK(om.is_acyclic());
    CHECK(om.is_matroid_polytope());
}

TEST_CASE("cocircuit families match the oracle across the corpus") {
    for (const auto& config : corpus()) {
        CAPTURE(config.name());
        auto om = OrientedMatroid::from_points(config);
        auto lifted = lifted_of(config);
        CHECK(as_strings(om.cocircuits()) == oracle::cocircuits(lifted));
        CHECK(as_strings(om.circuits()) == oracle::circuits(lifted));
        CHECK(om.rank() == oracle::rank(lifted));
        CHECK(om.is_acyclic() == oracle::acyclic(lifted));
        CHECK(om.is_acyclic() != om.has_positive_circuit());
        CHECK(om.is_matroid_polytope());
    }
}

TEST_CASE("cocircuit invariants: negation closure, support minimality, orthogonality") {
    for (const auto& config : {cube(3), prism(), square_pyramid()}) {
        CAPTURE(config.name());
        auto om = OrientedMatroid::from_points(config);
        auto cocs = as_strings(om.cocircuits());
        for (const auto& c : cocs) {
            std::string neg = c;
            for (auto& ch : neg) ch = (ch == '+') ? '-' : (ch == '-' ? '+' : '0');
            CHECK(cocs.count(neg) == 1);
        }
        for (const auto& a : cocs)
            for (const auto& b : cocs) {
                auto sa = support_of(a), sb = support_of(b);
                if (sa.is_subset_of(sb) && sa != sb)
                    FAIL("support of " << a << " inside that of " << b);
            }
        for (const auto& c : cocs)
            for (const auto& z : as_strings(om.circuits()))
                CHECK(om_orthogonal(c, z));
    }
}

TEST_CASE("collinear points: middle element is not extreme") {
    PointConfiguration line("line", 1, {{0}, {1}, {2}});
    auto om = OrientedMatroid::from_points(line);
    CHECK(om.rank() == 2);
    CHECK(as_strings(om.cocircuits()) == oracle::cocircuits(lifted_of(line)));

    // Three distinct hyperplanes in rank 2: 1 zero + 6 cocircuits + 6 topes.
    CHECK(om.covectors().size() == oracle::corank1_covector_count(lifted_of(line)));
    CHECK(om.covectors().size() == 13);

    CHECK(om.is_extreme(0));
    CHECK_FALSE(om.is_extreme(1));
    CHECK(om.is_extreme(2));
    CHECK(om.is_acyclic());
    CHECK_FALSE(om.is_matroid_polytope());
    CHECK_THROWS_AS((void)faces(om), validation_error);
}

TEST_CASE("interior point: acyclic but not a matroid polytope") {
    PointConfiguration cfg("spiked", 2, {{0, 0}, {3, 0}, {0, 3}, {1, 1}});
    auto om = OrientedMatroid::from_points(cfg);
    CHECK(om.is_acyclic());
    CHECK_FALSE(om.is_extreme(3));
    CHECK_FALSE(om.is_matroid_polytope());
    CHECK_THROWS_WITH_AS((void)faces(om), doctest::Contains("e4"), validation_error);
}

TEST_CASE("vector input with a positive circuit is not acyclic") {
    IntMatrix m(3, 2);
    m(0, 0) = 1; m(1, 0) = -1; m(2, 1) = 1;
    auto om = OrientedMatroid::from_vectors(std::move(m), {"a", "b", "c"});
    CHECK(om.has_positive_circuit());
    CHECK_FALSE(om.is_acyclic());
    CHECK_THROWS_AS((void)faces(om), validation_error);
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(PointConfiguration("dup", 2, {{0, 0}, {0, 0}}), validation_error);
    CHECK_THROWS_AS(PointConfiguration("none", 2, {}), validation_error);
    CHECK_THROWS_AS(PointConfiguration("labels", 1, {{0}, {1}}, {"a"}), validation_error);
    CHECK_THROWS_AS(OrientedMatroid::from_vectors(IntMatrix(2, 2), {"a", "b"}),
                    validation_error);
    PointConfiguration sq("square", 2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto om = OrientedMatroid::from_points(sq);
    CHECK_THROWS_AS((void)om.is_extreme(4), error);
}

TEST_CASE("single point: smallest oriented matroid") {
    PointConfiguration pt("point", 1, {{5}});
    auto om = OrientedMatroid::from_points(pt);
    CHECK(om.rank() == 1);
    CHECK(as_strings(om.cocircuits()) == std::set<std::string>{"+", "-"});
    CHECK(as_strings(om.covectors()) == std::set<std::string>{"0", "+", "-"});
    CHECK(om.is_matroid_polytope());
}

TEST_CASE("reorientation: diagonal flip of the square kills acyclicity") {
    PointConfiguration sq("square", 2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto om = OrientedMatroid::from_points(sq);

    auto flipped = om.reoriented(Bitset::of(4, {0, 3}));
    CHECK_FALSE(flipped.is_acyclic());
    CHECK(flipped.has_positive_circuit());

    // Flipping one edge endpoint keeps it acyclic.
    CHECK(om.reoriented(Bitset::of(4, {0})).is_acyclic());

    // Involution: flipping twice restores the cocircuit list.
    auto twice = flipped.reoriented(Bitset::of(4, {0, 3}));
    CHECK(as_strings(twice.cocircuits()) == as_strings(om.cocircuits()));

    // Full reorientation of an acyclic matroid polytope on this circuit
    // pattern stays acyclic.
    CHECK(om.reoriented(Bitset::full(4)).is_acyclic());
}

TEST_CASE("reorient_initial walks the initial sets of an ordering") {
    PointConfiguration sq("square", 2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto om = OrientedMatroid::from_points(sq);
    std::vector<int> order{0, 1, 3, 2}; // e1, e2, e4, e3

    CHECK(as_strings(reorient_initial(om, order, 0).cocircuits()) ==
          as_strings(om.cocircuits()));
    CHECK(reorient_initial(om, order, 1).is_acyclic());
    // Initial set {e1, e2} is an edge: oracle route via explicit negation.
    {
        auto two = reorient_initial(om, order, 2);
        auto direct = om.reoriented(Bitset::of(4, {0, 1}));
        CHECK(as_strings(two.cocircuits()) == as_strings(direct.cocircuits()));
        CHECK(two.is_acyclic());
    }
    // Initial set {e1, e2, e4} misses only e3: complement of a vertex.
    CHECK(reorient_initial(om, order, 3).is_acyclic());
    CHECK(reorient_initial(om, order, 4).is_acyclic());

    CHECK_THROWS_AS((void)reorient_initial(om, order, 5), validation_error);
    CHECK_THROWS_AS((void)reorient_initial(om, {0, 1, 2}, 1), validation_error);
    CHECK_THROWS_AS((void)reorient_initial(om, {0, 0, 2, 3}, 1), validation_error);
}

TEST_CASE("restriction to a cube facet gives the square") {
    auto om = OrientedMatroid::from_points(cube(3));
    CHECK(om.rank() == 4);

    // Bottom facet in binary counting order: first four vertices.
    auto bottom = om.restricted_to(Bitset::of(8, {0, 1, 2, 3}));
    CHECK(bottom.size() == 4);
    CHECK(bottom.rank() == 3);
    CHECK(bottom.is_matroid_polytope());

    PointConfiguration sq("square", 2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto square_om = OrientedMatroid::from_points(sq);
    CHECK(as_strings(bottom.cocircuits()) == as_strings(square_om.cocircuits()));
}

TEST_CASE("rank_of_subset agrees with the oracle on the square") {
    PointConfiguration sq("square", 2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto om = OrientedMatroid::from_points(sq);
    auto lifted = lifted_of(sq);
    for (unsigned mask = 0; mask < 16; ++mask) {
        oracle::Matrix sub;
        Bitset b(4);
        for (int i = 0; i < 4; ++i)
            if (mask >> i & 1) {
                sub.push_back(lifted[i]);
                b.set(i);
            }
        CHECK(om.rank_of_subset(b) == oracle::rank(sub));
    }
}
