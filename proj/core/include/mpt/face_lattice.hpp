#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "mpt/oriented_matroid.hpp"

namespace mpt {

// A face is the set of ground elements lying on it, together with its matroid
// rank (rank k means dimension k-1; the empty face has rank 0).
struct Face {
    Bitset elements;
    int rank = 0;
};

// Complete face lattice of a matroid polytope, stored flat and sorted by
// (rank, elements). The f-vector is indexed by rank: f[k] counts faces of
// rank k, i.e. of dimension k-1, so f[0] = 1 is the empty face and
// f[rank()] = 1 is the polytope itself.
class FaceLattice {
public:
    FaceLattice(std::size_t ground_size, int rank,
                std::vector<std::string> labels, std::vector<Face> faces);

    std::size_t ground_size() const { return n_; }
    int rank() const { return rank_; }
    const std::vector<std::string>& labels() const { return labels_; }

    const std::vector<Face>& faces() const { return faces_; }
    // Half-open index range [first, last) into faces() for the given rank.
    std::pair<std::size_t, std::size_t> rank_range(int k) const;

    bool is_face(const Bitset& elements) const;
    const std::vector<long long>& f_vector() const { return f_; }

private:
    std::size_t n_;
    int rank_;
    std::vector<std::string> labels_;
    std::vector<Face> faces_;
    std::vector<long long> f_;
    std::vector<std::pair<std::size_t, std::size_t>> ranges_;
    std::unordered_set<Bitset, BitsetHash> lookup_;
};

// Enumerate all faces of the polytope of om: zero sets of the nonnegative
// cocircuits (the facets) closed under intersection, plus the empty face and
// the whole polytope. Throws validation_error unless om is a matroid
// polytope. Every generated face is cross-checked against the covector
// criterion (Xi(F) must be a covector).
FaceLattice faces(const OrientedMatroid& om);

long long binomial(int n, int k);

// h*-vector from the f-vector, entries l = 0 .. rank-1:
//   h*_l = sum_{i=0}^{l} (-1)^{l-i} C(r-1-i, l-i) f_{r-1-i}
// where f is indexed by dimension and r is the rank.
std::vector<long long> h_star_vector(const FaceLattice& lat);

// Inverse transform; returns the f-vector (indexed by rank, length r+1)
// determined by an h*-vector of length r:
//   f_l = sum_{i=0}^{r-1-l} C(r-1-i, l) h*_i   (l = dimension)
std::vector<long long> f_from_h_star(const std::vector<long long>& h_star);

// Alternating sum over the reduced f-vector vanishes:
//   sum_{l=-1}^{r-1} (-1)^l f_l = 0.
bool euler_check(const FaceLattice& lat);

} // namespace mpt
