#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include "mpt/polytope_graph.hpp"

namespace mpt {

// Everything known about one linear ordering of a fixed matroid polytope.
struct OrderingReport {
    LinearOrdering ordering;
    bool is_k = false;
    bool is_shelling = false;
    // (face elements, sink count) for every nonempty face, in lattice order.
    std::vector<std::pair<Bitset, int>> sink_counts;
    std::vector<long long> d_plus_hist;   // d+_l = #elements with l smaller neighbors
    std::vector<long long> d_minus_hist;
};

// Definitional checkers. These iterate the stated definitions directly and
// are kept free of the fast-path machinery so they can vouch for it.

// Every nonempty face of the lattice has exactly one sink.
bool is_k_ordering(const FaceLattice& lat, const PolytopeGraph& g, const LinearOrdering& ord);

// Sink count of every nonempty face, in lattice order.
std::vector<std::pair<Bitset, int>> face_sink_counts(const FaceLattice& lat,
                                                     const PolytopeGraph& g,
                                                     const LinearOrdering& ord);

// Every initial-set reorientation of om stays acyclic.
bool is_shelling_ordering(const OrientedMatroid& om, const LinearOrdering& ord);

// Pair condition: on every face of rank >= 2, each element with an earlier
// face member must have an earlier neighbor inside the face.
bool check_sh1_prime(const FaceLattice& lat, const PolytopeGraph& g, const LinearOrdering& ord);

// Unique sink on every rank-3 face (the cube criterion; computable on any
// matroid polytope, equivalent to is_k_ordering only where claimed).
bool check_rank3_criterion(const FaceLattice& lat, const PolytopeGraph& g,
                           const LinearOrdering& ord);

// Histograms of out/in degrees under the larger-to-smaller arc convention;
// entry l counts elements of degree l. At least min_size entries.
std::pair<std::vector<long long>, std::vector<long long>>
degree_histograms(const PolytopeGraph& g, const LinearOrdering& ord, int min_size = 0);

// d+-histogram equals the h*-vector. Requires a simple matroid polytope and a
// K-ordering (validation_error otherwise): that is the theorem's hypothesis.
bool verify_h_star_theorem(const FaceLattice& lat, const PolytopeGraph& g,
                           const LinearOrdering& ord);

inline LinearOrdering reverse(const LinearOrdering& ord) { return ord.reversed(); }

enum class OrderingFilter { all, k, shelling, both, neither, k_not_shelling, shelling_not_k };
enum class EnumerationMode { exhaustive, sample };

const char* to_string(OrderingFilter f);
const char* to_string(EnumerationMode m);
OrderingFilter parse_filter(const std::string& s);       // "k-not-shelling" etc.
EnumerationMode parse_mode(const std::string& s);

struct EnumerationOptions {
    OrderingFilter filter = OrderingFilter::all;
    EnumerationMode mode = EnumerationMode::exhaustive;
    std::uint64_t seed = 0;        // sample mode only
    std::uint64_t budget = 0;      // exhaustive: max orderings examined (0 = all);
                                   // sample: number of draws (required > 0)
    std::uint64_t emit_limit = 0;  // cap on emitted reports (0 = no cap)
    int workers = 1;
    bool with_reports = true;      // false: counts only, callback never invoked
};

struct EnumerationSummary {
    unsigned long long total = 0;      // orderings accounted for (= examined)
    unsigned long long k = 0;
    unsigned long long shelling = 0;
    unsigned long long both = 0;
    unsigned long long k_not_shelling = 0;
    unsigned long long shelling_not_k = 0;
    unsigned long long neither = 0;
    unsigned long long emitted = 0;
    bool partial = false;              // budget stopped an exhaustive walk early
    bool space_known = false;
    unsigned long long space = 0;      // n! when representable
    double coverage = 0.0;             // total / space when space_known
};

// Precomputed per-polytope indexes: bitmask adjacency, the faces that need
// sink tracking (rank >= 3), and circuit masks for the prefix-acyclicity
// test. Built once, read-only afterwards, shared across worker threads.
class OrderingContext {
public:
    OrderingContext(OrientedMatroid om, FaceLattice lat, PolytopeGraph g);
    ~OrderingContext();
    OrderingContext(const OrderingContext&) = delete;
    OrderingContext& operator=(const OrderingContext&) = delete;

    const OrientedMatroid& om() const;
    const FaceLattice& lattice() const;
    const PolytopeGraph& graph() const;
    std::size_t size() const;
    int rank() const;

    // Fast full classification of one ordering (mask-based paths).
    OrderingReport classify(const LinearOrdering& ord) const;

    struct Impl;
    const Impl& impl() const { return *impl_; }

private:
    std::unique_ptr<Impl> impl_;
};

// Walk the ordering space. Exhaustive mode enumerates all n! orderings in
// lexicographic order (by element index sequence), pruning a subtree only
// once its prefix has violated both the K property and the shelling property
// (and never when the filter wants such orderings); every summary counter is
// exact for the examined space. Sample mode draws `budget` permutations from
// a seeded generator. Reports matching the filter are passed to `emit` in
// canonical order on the calling thread. Deterministic for fixed options,
// including under workers > 1.
EnumerationSummary enumerate_orderings(const OrderingContext& ctx,
                                       const EnumerationOptions& opts,
                                       const std::function<void(const OrderingReport&)>& emit);

} // namespace mpt
