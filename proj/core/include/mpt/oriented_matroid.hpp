#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "mpt/point_configuration.hpp"
#include "mpt/sign_vector.hpp"

namespace mpt {

// Oriented matroid of a lifted point configuration: the rows (p_i, 1) of the
// lifted matrix are the ground set, cocircuits are the sign patterns of
// hyperplanes spanned by rank-1-deficient subsets, circuits are the signed
// minimal affine dependencies. Cocircuit and circuit lists store both
// orientations (v and -v), sorted, so output is deterministic.
//
// Instances are cheap value types: all heavy state lives in an immutable
// shared Data block, so copies are safe to pass across threads.
class OrientedMatroid {
public:
    static OrientedMatroid from_points(const PointConfiguration& config);

    // Build directly from an integer matrix whose rows are the vectors;
    // from_points delegates here with rows (p_i, 1).
    static OrientedMatroid from_vectors(IntMatrix rows, std::vector<std::string> labels);

    std::size_t size() const;              // |E|
    int rank() const;                      // rank of the lifted configuration
    const std::vector<std::string>& labels() const;

    const std::vector<SignVector>& cocircuits() const;
    const std::vector<SignVector>& circuits() const;

    // Full covector lattice via closure of cocircuits under composition.
    // Exponential in general; computed lazily and cached. Fine for the small
    // corpus, avoid on anything cube-of-dimension-4-sized.
    const std::vector<SignVector>& covectors() const;
    std::vector<SignVector> topes() const; // full-support covectors

    // Membership test that needs no closure: w is a covector iff the
    // composition of all cocircuits conforming to w reproduces w.
    bool is_covector(const SignVector& w) const;

    // Xi(F): zero on F, plus outside F. F is a face of the polytope exactly
    // when Xi(F) is a covector.
    SignVector xi(const Bitset& face) const;

    // Acyclic means the all-plus sign vector is a covector (evaluated with
    // is_covector at construction time).
    bool is_acyclic() const;
    // Equivalent characterization through the dual family; kept as an
    // independent route so the two can be checked against each other.
    bool has_positive_circuit() const;
    bool is_extreme(std::size_t e) const;
    bool is_matroid_polytope() const;      // acyclic and every element extreme

    int rank_of_subset(const Bitset& s) const;

    // Reorientation on an explicit sign-flip set.
    OrientedMatroid reoriented(const Bitset& flip) const;

    // Restrict to the elements of a subset (e.g. a face), keeping labels.
    // The result is the oriented matroid of the sub-configuration.
    OrientedMatroid restricted_to(const Bitset& subset) const;

private:
    struct Data;
    std::shared_ptr<const Data> d_;
    explicit OrientedMatroid(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
};

// Reorient on the initial set of an ordering: flip signs on order[0..k-1].
// `order` lists element indices, smallest position first, and must be a
// permutation of the ground set.
OrientedMatroid reorient_initial(const OrientedMatroid& om,
                                 const std::vector<int>& order, std::size_t k);

} // namespace mpt
