#include "mpt/polytope_graph.hpp"

#include <algorithm>
#include <set>

namespace mpt {

PolytopeGraph::PolytopeGraph(std::size_t n, std::vector<std::pair<int, int>> edges,
                             std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)), edges_(std::move(edges)) {
    if (n_ == 0) throw validation_error("graph: empty vertex set");
    if (labels_.size() != n_) throw validation_error("graph: label count mismatch");
    std::set<std::pair<int, int>> seen;
    for (auto& [a, b] : edges_) {
        if (a < 0 || b < 0 || a >= static_cast<int>(n_) || b >= static_cast<int>(n_))
            throw validation_error("graph: edge endpoint out of range");
        if (a == b) throw validation_error("graph: loop edge at vertex " + labels_[a]);
        if (a > b) std::swap(a, b);
        if (!seen.insert({a, b}).second)
            throw validation_error("graph: duplicate edge " + labels_[a] + "-" + labels_[b]);
    }
    std::sort(edges_.begin(), edges_.end());
    adj_.assign(n_, Bitset(n_));
    for (auto [a, b] : edges_) {
        adj_[a].set(b);
        adj_[b].set(a);
    }
}

const Bitset& PolytopeGraph::neighbors(std::size_t v) const {
    if (v >= n_) throw error("neighbors: vertex out of range");
    return adj_[v];
}

int PolytopeGraph::degree(std::size_t v) const {
    return static_cast<int>(neighbors(v).count());
}

bool PolytopeGraph::adjacent(std::size_t u, std::size_t v) const {
    if (u >= n_ || v >= n_) throw error("adjacent: vertex out of range");
    return adj_[u].test(v);
}

bool PolytopeGraph::is_connected() const {
    Bitset seen(n_);
    std::vector<int> stack{0};
    seen.set(0);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = adj_[v].next(); u >= 0; u = adj_[v].next(u + 1)) {
            if (!seen.test(u)) {
                seen.set(u);
                stack.push_back(u);
            }
        }
    }
    return seen.count() == n_;
}

int PolytopeGraph::regular_degree() const {
    int d = degree(0);
    for (std::size_t v = 1; v < n_; ++v)
        if (degree(v) != d) return -1;
    return d;
}

int PolytopeGraph::index_of_label(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return -1;
}

PolytopeGraph graph(const FaceLattice& lat) {
    const std::size_t n = lat.ground_size();
    auto [v0, v1] = lat.rank_range(1);
    for (std::size_t i = v0; i < v1; ++i)
        if (lat.faces()[i].elements.count() != 1)
            throw validation_error("graph: rank-1 face is not a singleton");
    if (v1 - v0 != n)
        throw validation_error("graph: not every element is a vertex");

    std::vector<std::pair<int, int>> edges;
    if (lat.rank() >= 2) {
        auto [e0, e1] = lat.rank_range(2);
        for (std::size_t i = e0; i < e1; ++i) {
            const Bitset& f = lat.faces()[i].elements;
            if (f.count() != 2)
                throw validation_error("graph: collinear face (rank-2 face with " +
                                       std::to_string(f.count()) + " elements)");
            int a = f.next();
            int b = f.next(a + 1);
            edges.emplace_back(a, b);
        }
    }
    return PolytopeGraph(n, std::move(edges), lat.labels());
}

bool is_simple(const PolytopeGraph& g, int rank) {
    return g.regular_degree() == rank - 1;
}

LinearOrdering::LinearOrdering(std::vector<int> order) : order_(std::move(order)) {
    const std::size_t n = order_.size();
    if (n == 0) throw validation_error("ordering: empty");
    pos_.assign(n, -1);
    for (std::size_t p = 0; p < n; ++p) {
        int e = order_[p];
        if (e < 0 || static_cast<std::size_t>(e) >= n)
            throw validation_error("ordering: element index out of range");
        if (pos_[e] != -1)
            throw validation_error("ordering: element repeated, not a permutation");
        pos_[e] = static_cast<int>(p);
    }
}

LinearOrdering LinearOrdering::identity(std::size_t n) {
    std::vector<int> o(n);
    for (std::size_t i = 0; i < n; ++i) o[i] = static_cast<int>(i);
    return LinearOrdering(std::move(o));
}

int LinearOrdering::position(int element) const {
    if (element < 0 || static_cast<std::size_t>(element) >= pos_.size())
        throw error("position: element out of range");
    return pos_[element];
}

LinearOrdering LinearOrdering::reversed() const {
    std::vector<int> o(order_.rbegin(), order_.rend());
    return LinearOrdering(std::move(o));
}

std::vector<std::string> LinearOrdering::to_labels(const std::vector<std::string>& ground) const {
    if (ground.size() != order_.size()) throw error("to_labels: ground size mismatch");
    std::vector<std::string> out;
    out.reserve(order_.size());
    for (int e : order_) out.push_back(ground[e]);
    return out;
}

LinearOrdering LinearOrdering::from_labels(const std::vector<std::string>& names,
                                           const std::vector<std::string>& ground) {
    if (names.size() != ground.size())
        throw validation_error("ordering: expected " + std::to_string(ground.size()) +
                               " labels, got " + std::to_string(names.size()));
    std::vector<int> order;
    order.reserve(names.size());
    for (const auto& name : names) {
        auto it = std::find(ground.begin(), ground.end(), name);
        if (it == ground.end())
            throw validation_error("ordering: unknown label '" + name + "'");
        order.push_back(static_cast<int>(it - ground.begin()));
    }
    return LinearOrdering(std::move(order));
}

OrderedDigraph::OrderedDigraph(const PolytopeGraph& g, const LinearOrdering& ord)
    : g_(&g), ord_(&ord) {
    if (g.size() != ord.size())
        throw validation_error("ordered digraph: ordering size does not match graph");
}

bool OrderedDigraph::arc(std::size_t u, std::size_t v) const {
    return g_->adjacent(u, v) &&
           ord_->position(static_cast<int>(v)) < ord_->position(static_cast<int>(u));
}

std::vector<int> OrderedDigraph::sinks(const Bitset& face) const {
    std::vector<int> out;
    for (int v = face.next(); v >= 0; v = face.next(v + 1)) {
        bool sink = true;
        Bitset nb = g_->neighbors(v) & face;
        for (int u = nb.next(); u >= 0; u = nb.next(u + 1)) {
            if (ord_->position(u) < ord_->position(v)) {
                sink = false;
                break;
            }
        }
        if (sink) out.push_back(v);
    }
    return out;
}

int OrderedDigraph::count_sinks(const Bitset& face, int cap) const {
    int count = 0;
    for (int v = face.next(); v >= 0; v = face.next(v + 1)) {
        bool sink = true;
        Bitset nb = g_->neighbors(v) & face;
        for (int u = nb.next(); u >= 0; u = nb.next(u + 1)) {
            if (ord_->position(u) < ord_->position(v)) {
                sink = false;
                break;
            }
        }
        if (sink && ++count >= cap) return count;
    }
    return count;
}

std::vector<int> OrderedDigraph::sinks() const {
    return sinks(Bitset::full(g_->size()));
}

bool OrderedDigraph::reaches_all(const Bitset& face, int e) const {
    if (!face.test(e)) throw error("reaches_all: element not in face");
    Bitset seen(face.size());
    seen.set(e);
    std::vector<int> stack{e};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        // u -> v arcs for u inside the face: any larger neighbor reaches v
        Bitset nb = g_->neighbors(v) & face;
        for (int u = nb.next(); u >= 0; u = nb.next(u + 1)) {
            if (!seen.test(u) && ord_->position(u) > ord_->position(v)) {
                seen.set(u);
                stack.push_back(u);
            }
        }
    }
    return seen == face;
}

} // namespace mpt
