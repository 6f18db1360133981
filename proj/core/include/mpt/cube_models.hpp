#pragma once

#include <cstdint>
#include <vector>

#include "mpt/orderings.hpp"

namespace mpt {

// The d-cube configuration: points are {0,1}^d in binary counting order
// (point i has j-th coordinate (i >> j) & 1), labels e1..e(2^d), rank d+1.
PointConfiguration cube(int d);

// The r-simplex: origin plus the r unit points in Z^r, rank r+1.
PointConfiguration simplex(int r);

// Triangular prism: triangle {(0,0),(1,0),(0,1)} crossed with {0,1},
// bottom vertices first. Simple, rank 4.
PointConfiguration prism();

// Square pyramid (apex over the center of a square): the standard
// non-simple negative control. Rank 4, apex degree 4.
PointConfiguration square_pyramid();

// Fixed test corpus: simplices r = 2..5, cubes d = 1..4, the prism, and the
// square pyramid.
std::vector<PointConfiguration> corpus();

// Check the cube identity h*(C^d) = (C(d,0), ..., C(d,d)) and, on the
// binary-counting ordering and its reverse (both K-orderings, verified
// definitionally here), that the in- and out-degree histograms reproduce the
// same binomials.
bool cube_h_star_identity(int d);

struct ExperimentResult {
    int dim = 0;
    EnumerationSummary summary;
    // K-but-not-shelling orderings found, each re-verified through the
    // definitional checkers before being accepted here.
    std::vector<OrderingReport> witnesses;
    bool coincide_checked = false; // set on complete exhaustive d = 2 runs
    bool coincide = false;         // K set and shelling set agree
};

// Search the cube C^d for K-orderings that are not shelling orderings. Every
// witness the engine reports is recomputed with the unpruned definitional
// checkers; a disagreement throws. On a complete exhaustive d = 2 run the
// K and shelling sets must coincide, which is also enforced here.
ExperimentResult problem_experiment(int d, EnumerationMode mode, std::uint64_t seed,
                                    std::uint64_t budget, int workers = 1,
                                    std::uint64_t witness_limit = 0);

} // namespace mpt
