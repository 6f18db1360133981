#pragma once

#include <cstdint>
#include <vector>

#include "mpt/orderings.hpp"

namespace mpt {

// Reconstruction works from an abstract graph alone: a PolytopeGraph built
// from an edge list, with no point configuration behind it. The graph must be
// connected and regular of degree r-1; the rank r is inferred from the degree.

// Rank inferred from regularity. Throws validation_error when the graph is
// not connected or not regular.
int inferred_rank(const PolytopeGraph& g);

// Score of the orientation induced by ord: sum over vertices of 2^indeg(v),
// where indeg(v) counts neighbors placed after v (arcs run larger to
// smaller, so those arcs point at v). Requires a regular graph. Good
// orientations are exactly the score minimizers; the minimum is the number
// of nonempty faces, since each set of k in-arcs at a vertex of a simple
// polytope spans one rank-(k+1) face having that vertex as a sink.
long long kalai_score(const PolytopeGraph& g, const LinearOrdering& ord);

// An acyclic orientation achieving the minimum score, remembered through one
// representative ordering. `arcs` has one bit per graph edge, in edge-list
// order: bit set means the edge (u, v) with u < v points at u (u precedes v).
struct GoodOrientation {
    LinearOrdering ordering;
    long long score = 0;
    Bitset arcs;
};

struct OrientationSearch {
    std::vector<GoodOrientation> orientations; // deduplicated by arc set
    long long min_score = 0;
    unsigned long long examined = 0;
    bool partial = false; // budget ended the walk before all n! orderings
};

// Walk orderings in lexicographic order, keeping every orientation that
// achieves the minimum Kalai score. Distinct orderings inducing one
// orientation collapse to the first representative seen. `budget` caps the
// number of orderings examined (0 = all); a cut-off sets `partial`, and a
// partial minimizer set may be wrong, which reconstruct_faces will surface.
OrientationSearch find_good_orientations(const PolytopeGraph& g, std::uint64_t budget = 0);

// Rebuild the face lattice from the graph and a set of good orientations.
// A vertex set S whose induced subgraph is connected and k-regular is
// accepted as a face of rank k+1 exactly when some good orientation directs
// every crossing edge into S. The empty face is appended; the full set
// arrives on its own as the (r-1)-regular candidate with no crossing edges.
// Throws reconstruction_error when the result is inconsistent: a vertex
// missing at rank 1, a failed Euler check, or a good orientation without a
// unique sink on some accepted face.
FaceLattice reconstruct_faces(const PolytopeGraph& g,
                              const std::vector<GoodOrientation>& good);

// Equality as ranked families of element sets over the same ground order.
bool lattices_match(const FaceLattice& a, const FaceLattice& b);

} // namespace mpt
