// Reconstruction of the face lattice from the abstract graph: the score
// function against the oracle, the good-orientation search against a brute
// force dedupe, and full lattice recovery across the simple corpus.
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "mpt/cube_models.hpp"
#include "mpt/orderings.hpp"
#include "mpt/reconstruction.hpp"
#include "oracle.hpp"

using namespace mpt;

namespace {

struct Fixture {
    OrientedMatroid om;
    FaceLattice lat;
    PolytopeGraph g;
    explicit Fixture(const PointConfiguration& c)
        : om(OrientedMatroid::from_points(c)), lat(faces(om)), g(graph(lat)) {}
};

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Arc signature of an ordering: one char per edge, '<' when the edge points
// at its smaller-index endpoint. Independent of the library's bitmask.
std::string arc_signature(const PolytopeGraph& g, const std::vector<int>& perm) {
    std::vector<int> pos(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<int>(i);
    std::string sig;
    for (auto [u, v] : g.edges()) sig += pos[u] < pos[v] ? '<' : '>';
    return sig;
}

long long face_count(const FaceLattice& lat) {
    long long total = 0;
    for (auto f : lat.f_vector()) total += f;
    return total - 1; // nonempty faces
}

} // namespace

TEST_CASE("kalai_score agrees with the oracle on every small ordering") {
    for (const auto& config : {simplex(2), cube(2), simplex(3), prism()}) {
        CAPTURE(config.name());
        Fixture fx(config);
        for (const auto& p : all_perms(static_cast<int>(fx.g.size())))
            CHECK(kalai_score(fx.g, LinearOrdering(p)) ==
                  oracle::kalai_score(fx.g.edges(), fx.g.size(), p));
    }
}

TEST_CASE("square scores: minimum 9 hit exactly by the K-orderings") {
    Fixture fx(cube(2));
    CHECK(kalai_score(fx.g, LinearOrdering::identity(4)) == 9);
    CHECK(kalai_score(fx.g, LinearOrdering({0, 3, 1, 2})) == 10);

    for (const auto& p : all_perms(4)) {
        LinearOrdering ord(p);
        bool minimal = kalai_score(fx.g, ord) == 9;
        CHECK(minimal == is_k_ordering(fx.lat, fx.g, ord));
        CHECK(kalai_score(fx.g, ord) >= face_count(fx.lat));
    }
}

TEST_CASE("good orientations of the square: 12 arc sets from 16 orderings") {
    Fixture fx(cube(2));
    auto search = find_good_orientations(fx.g);
    CHECK(search.min_score == 9);
    CHECK(search.examined == 24);
    CHECK_FALSE(search.partial);
    CHECK(search.orientations.size() == 12);

    // Brute force the same dedupe from the oracle score.
    std::set<std::string> minimal_sigs;
    int minimizing_orderings = 0;
    for (const auto& p : all_perms(4))
        if (oracle::kalai_score(fx.g.edges(), 4, p) == 9) {
            minimal_sigs.insert(arc_signature(fx.g, p));
            ++minimizing_orderings;
        }
    CHECK(minimal_sigs.size() == 12);
    CHECK(minimizing_orderings == 16);

    std::set<std::string> engine_sigs;
    for (const auto& o : search.orientations) {
        CHECK(o.score == 9);
        engine_sigs.insert(arc_signature(fx.g, o.ordering.order()));
        // Each representative ordering is a K-ordering.
        CHECK(is_k_ordering(fx.lat, fx.g, o.ordering));
    }
    CHECK(engine_sigs == minimal_sigs);
}

TEST_CASE("good orientations of the 3-cube graph: dual-route dedupe agreement") {
    Fixture fx(cube(3));
    auto search = find_good_orientations(fx.g);
    CHECK(search.min_score == face_count(fx.lat)); // 27
    CHECK(search.examined == 40320);

    std::set<std::string> minimal_sigs;
    std::vector<int> p(8);
    std::iota(p.begin(), p.end(), 0);
    do {
        if (oracle::kalai_score(fx.g.edges(), 8, p) == 27)
            minimal_sigs.insert(arc_signature(fx.g, p));
    } while (std::next_permutation(p.begin(), p.end()));

    std::set<std::string> engine_sigs;
    for (const auto& o : search.orientations)
        engine_sigs.insert(arc_signature(fx.g, o.ordering.order()));
    CHECK(engine_sigs == minimal_sigs);
    CHECK_FALSE(engine_sigs.empty());
}

TEST_CASE("inferred rank and search validations") {
    CHECK(inferred_rank(graph(faces(OrientedMatroid::from_points(cube(2))))) == 3);
    CHECK(inferred_rank(graph(faces(OrientedMatroid::from_points(cube(3))))) == 4);
    CHECK(inferred_rank(graph(faces(OrientedMatroid::from_points(simplex(3))))) == 4);

    auto pyr = graph(faces(OrientedMatroid::from_points(square_pyramid())));
    CHECK_THROWS_AS((void)inferred_rank(pyr), validation_error);
    CHECK_THROWS_AS((void)find_good_orientations(pyr), validation_error);
    CHECK_THROWS_AS((void)kalai_score(pyr, LinearOrdering::identity(5)), validation_error);

    PolytopeGraph split(4, {{0, 1}, {2, 3}}, {"a", "b", "c", "d"});
    CHECK_THROWS_AS((void)inferred_rank(split), validation_error);

    Fixture sq(cube(2));
    CHECK_THROWS_AS((void)kalai_score(sq.g, LinearOrdering::identity(5)), validation_error);

    // Unbudgeted search refuses ground sets past the factorial cliff.
    std::vector<std::pair<int, int>> cycle;
    std::vector<std::string> names;
    for (int i = 0; i < 11; ++i) {
        cycle.push_back({i, (i + 1) % 11});
        names.push_back("v" + std::to_string(i + 1));
    }
    PolytopeGraph c11(11, cycle, names);
    CHECK_THROWS_AS((void)find_good_orientations(c11), validation_error);
    auto capped = find_good_orientations(c11, 1000);
    CHECK(capped.examined == 1000);
    CHECK(capped.partial);
}

TEST_CASE("budgeted search examines a prefix and reports partial") {
    Fixture fx(cube(2));
    auto part = find_good_orientations(fx.g, 5);
    CHECK(part.examined == 5);
    CHECK(part.partial);
    auto full = find_good_orientations(fx.g, 24);
    CHECK(full.examined == 24);
    CHECK_FALSE(full.partial);
    CHECK(full.orientations.size() == 12);
}

TEST_CASE("reconstruction recovers the face lattice across the simple corpus") {
    for (const auto& config : {simplex(2), simplex(3), cube(2), cube(3), prism()}) {
        CAPTURE(config.name());
        Fixture fx(config);

        // Abstract copy: same edges, no geometry attached.
        PolytopeGraph abstract(fx.g.size(), fx.g.edges(), fx.g.labels());
        auto search = find_good_orientations(abstract);
        auto rebuilt = reconstruct_faces(abstract, search.orientations);

        CHECK(lattices_match(rebuilt, fx.lat));
        CHECK(rebuilt.f_vector() == fx.lat.f_vector());
        CHECK(euler_check(rebuilt));
    }
}

TEST_CASE("lattices_match is a real comparison") {
    Fixture sq(cube(2));
    Fixture tri(simplex(2));
    Fixture c3(cube(3));
    CHECK(lattices_match(sq.lat, sq.lat));
    CHECK_FALSE(lattices_match(sq.lat, tri.lat));
    CHECK_FALSE(lattices_match(sq.lat, c3.lat));
}

TEST_CASE("reconstruction from one orientation alone fails the consistency checks") {
    Fixture fx(cube(2));
    auto search = find_good_orientations(fx.g);
    std::vector<GoodOrientation> one{search.orientations.front()};
    CHECK_THROWS_AS((void)reconstruct_faces(fx.g, one), reconstruction_error);
    CHECK_THROWS_AS((void)reconstruct_faces(fx.g, {}), validation_error);
}
