#pragma once

#include <string>
#include <vector>

#include "mpt/face_lattice.hpp"

namespace mpt {

// Abstract graph on the ground set: vertices are the rank-1 faces, edges the
// rank-2 faces. Standalone-constructible so reconstruction can build one from
// a JSON edge list with no point configuration behind it.
class PolytopeGraph {
public:
    PolytopeGraph(std::size_t n, std::vector<std::pair<int, int>> edges,
                  std::vector<std::string> labels);

    std::size_t size() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const Bitset& neighbors(std::size_t v) const;
    int degree(std::size_t v) const;
    bool adjacent(std::size_t u, std::size_t v) const;
    bool is_connected() const;
    // -1 when not regular, else the common degree.
    int regular_degree() const;
    int index_of_label(const std::string& label) const; // -1 if absent

private:
    std::size_t n_;
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Bitset> adj_;
};

// Graph of a matroid polytope from its face lattice.
PolytopeGraph graph(const FaceLattice& lat);

// Simplicity: every vertex has degree exactly r-1.
bool is_simple(const PolytopeGraph& g, int rank);

// A permutation of the ground set; order()[0] is the smallest element.
class LinearOrdering {
public:
    explicit LinearOrdering(std::vector<int> order);
    static LinearOrdering identity(std::size_t n);

    std::size_t size() const { return order_.size(); }
    int at(std::size_t position) const { return order_[position]; }
    int position(int element) const;
    const std::vector<int>& order() const { return order_; }
    LinearOrdering reversed() const;

    std::vector<std::string> to_labels(const std::vector<std::string>& ground) const;
    static LinearOrdering from_labels(const std::vector<std::string>& names,
                                      const std::vector<std::string>& ground);

    bool operator==(const LinearOrdering& o) const { return order_ == o.order_; }
    bool operator<(const LinearOrdering& o) const { return order_ < o.order_; }

private:
    std::vector<int> order_;
    std::vector<int> pos_;
};

// View of (graph, ordering) as the digraph whose arcs run from the larger
// endpoint to the smaller one. Never materializes arcs; everything is
// answered from the position array.
class OrderedDigraph {
public:
    OrderedDigraph(const PolytopeGraph& g, const LinearOrdering& ord);
    // Views must not outlive their referents; reject temporaries.
    OrderedDigraph(PolytopeGraph&&, const LinearOrdering&) = delete;
    OrderedDigraph(const PolytopeGraph&, LinearOrdering&&) = delete;
    OrderedDigraph(PolytopeGraph&&, LinearOrdering&&) = delete;

    const PolytopeGraph& graph() const { return *g_; }
    const LinearOrdering& ordering() const { return *ord_; }

    // Arc u -> v present iff {u,v} is an edge and v precedes u.
    bool arc(std::size_t u, std::size_t v) const;

    // Sinks of the digraph induced on `face`: elements with no smaller
    // neighbor inside the face.
    std::vector<int> sinks(const Bitset& face) const;
    // Early-exit count, capped at `cap` (cap=2 answers "unique sink?").
    int count_sinks(const Bitset& face, int cap) const;
    std::vector<int> sinks() const;          // on the full ground set

    // Reachability form: true iff every element of `face` has a directed
    // path to e inside the face. e is the unique sink of the induced
    // digraph exactly when this holds.
    bool reaches_all(const Bitset& face, int e) const;

private:
    const PolytopeGraph* g_;
    const LinearOrdering* ord_;
};

} // namespace mpt
