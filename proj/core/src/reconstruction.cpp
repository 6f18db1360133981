#include "mpt/reconstruction.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

namespace mpt {

int inferred_rank(const PolytopeGraph& g) {
    if (!g.is_connected())
        throw validation_error("abstract graph must be connected");
    const int deg = g.regular_degree();
    if (deg < 0)
        throw validation_error("abstract graph must be regular (simple polytope graph)");
    return deg + 1;
}

long long kalai_score(const PolytopeGraph& g, const LinearOrdering& ord) {
    const int deg = g.regular_degree();
    if (deg < 0)
        throw validation_error("kalai_score requires a regular graph");
    if (deg >= 62)
        throw validation_error("kalai_score: degree too large");
    if (ord.size() != g.size())
        throw validation_error("kalai_score: ordering size mismatch");
    long long score = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
        int indeg = 0;
        const Bitset& nb = g.neighbors(v);
        for (int u = nb.next(); u >= 0; u = nb.next(u + 1))
            if (ord.position(u) > ord.position(static_cast<int>(v))) ++indeg;
        score += 1LL << indeg;
    }
    return score;
}

OrientationSearch find_good_orientations(const PolytopeGraph& g, std::uint64_t budget) {
    inferred_rank(g); // connected + regular or throw
    const int n = static_cast<int>(g.size());
    if (budget == 0 && n > 10)
        throw validation_error("orientation search over " + std::to_string(n) +
                               "! orderings needs a budget");

    const auto& edges = g.edges();
    const std::size_t m = edges.size();

    OrientationSearch out;
    std::unordered_set<Bitset, BitsetHash> seen_arcs;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> pos(n);
    do {
        if (budget != 0 && out.examined == budget) {
            out.partial = true;
            break;
        }
        ++out.examined;
        for (int i = 0; i < n; ++i) pos[perm[i]] = i;

        std::vector<int> indeg(n, 0);
        Bitset arcs(m);
        for (std::size_t i = 0; i < m; ++i) {
            const auto [u, v] = edges[i];
            if (pos[u] < pos[v]) {
                arcs.set(i);
                ++indeg[u];
            } else {
                ++indeg[v];
            }
        }
        long long score = 0;
        for (int v = 0; v < n; ++v) score += 1LL << indeg[v];

        if (out.orientations.empty() || score < out.min_score) {
            out.min_score = score;
            out.orientations.clear();
            seen_arcs.clear();
        }
        if (score == out.min_score && seen_arcs.insert(arcs).second)
            out.orientations.push_back({LinearOrdering(perm), score, arcs});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

// Visit every connected induced subgraph exactly once, grown from its
// minimum vertex; `banned` holds vertices permanently excluded on this
// branch, `ext` the admissible neighbors of `cur`.
template <typename Visit>
void grow(const std::vector<std::uint64_t>& adj, std::uint64_t cur, std::uint64_t ext,
          std::uint64_t banned, const Visit& visit) {
    visit(cur);
    std::uint64_t done = 0;
    for (std::uint64_t rest = ext; rest != 0; rest &= rest - 1) {
        const int u = std::countr_zero(rest);
        const std::uint64_t child_banned = banned | done;
        const std::uint64_t grown = cur | (std::uint64_t{1} << u);
        const std::uint64_t child_ext = (ext | adj[u]) & ~grown & ~child_banned;
        grow(adj, grown, child_ext, child_banned, visit);
        done |= std::uint64_t{1} << u;
    }
}

} // namespace

FaceLattice reconstruct_faces(const PolytopeGraph& g,
                              const std::vector<GoodOrientation>& good) {
    const int r = inferred_rank(g);
    const int n = static_cast<int>(g.size());
    if (n > 64)
        throw validation_error("reconstruction supports at most 64 vertices");
    if (good.empty())
        throw validation_error("reconstruct_faces needs at least one good orientation");

    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    for (const auto& o : good)
        if (o.arcs.size() != m)
            throw validation_error("good orientation arc mask does not fit the edge list");

    std::vector<std::uint64_t> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).word0();

    std::vector<Face> faces;
    auto consider = [&](std::uint64_t mask) {
        // Regularity of the induced subgraph.
        const int first = std::countr_zero(mask);
        const int k = std::popcount(adj[first] & mask);
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
            if (std::popcount(adj[std::countr_zero(rest)] & mask) != k) return;

        // Initial-set test: every crossing edge must point into the set.
        Bitset crossing(m), required(m);
        for (std::size_t i = 0; i < m; ++i) {
            const auto [u, v] = edges[i];
            const bool uin = (mask >> u) & 1, vin = (mask >> v) & 1;
            if (uin == vin) continue;
            crossing.set(i);
            if (uin) required.set(i); // arc must point at u
        }
        const bool initial = std::any_of(good.begin(), good.end(), [&](const GoodOrientation& o) {
            return (o.arcs & crossing) == required;
        });
        if (!initial) return;

        Bitset elements(n);
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
            elements.set(std::countr_zero(rest));
        faces.push_back({std::move(elements), k + 1});
    };

    for (int root = 0; root < n; ++root) {
        const std::uint64_t low = (std::uint64_t{1} << root) - 1;
        grow(adj, std::uint64_t{1} << root, adj[root] & ~low & ~(std::uint64_t{1} << root), low,
             consider);
    }
    faces.push_back({Bitset(n), 0});

    long long rank1 = 0;
    for (const Face& f : faces) rank1 += f.rank == 1;
    if (rank1 != n)
        throw reconstruction_error(
            "reconstruction failed: some vertex is not initial in any good orientation");

    FaceLattice lat(static_cast<std::size_t>(n), r, g.labels(), std::move(faces));
    if (!euler_check(lat))
        throw reconstruction_error("reconstruction failed: Euler check rejects the lattice");
    for (const auto& o : good)
        if (!is_k_ordering(lat, g, o.ordering))
            throw reconstruction_error(
                "reconstruction failed: a good orientation lacks a unique sink on an accepted face");
    return lat;
}

bool lattices_match(const FaceLattice& a, const FaceLattice& b) {
    if (a.ground_size() != b.ground_size() || a.rank() != b.rank()) return false;
    if (a.faces().size() != b.faces().size()) return false;
    for (std::size_t i = 0; i < a.faces().size(); ++i) {
        if (a.faces()[i].rank != b.faces()[i].rank) return false;
        if (!(a.faces()[i].elements == b.faces()[i].elements)) return false;
    }
    return true;
}

} // namespace mpt
