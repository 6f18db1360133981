#include "mpt/face_lattice.hpp"

#include <algorithm>
#include <set>

namespace mpt {

FaceLattice::FaceLattice(std::size_t ground_size, int rank,
                         std::vector<std::string> labels, std::vector<Face> faces)
    : n_(ground_size), rank_(rank), labels_(std::move(labels)), faces_(std::move(faces)) {
    if (labels_.size() != n_)
        throw validation_error("face lattice: label count does not match ground size");
    std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.elements < b.elements;
    });
    for (std::size_t i = 1; i < faces_.size(); ++i)
        if (faces_[i].elements == faces_[i - 1].elements)
            throw validation_error("face lattice: duplicate face");

    f_.assign(rank_ + 1, 0);
    ranges_.assign(rank_ + 1, {0, 0});
    std::size_t i = 0;
    for (int k = 0; k <= rank_; ++k) {
        std::size_t first = i;
        while (i < faces_.size() && faces_[i].rank == k) ++i;
        ranges_[k] = {first, i};
        f_[k] = static_cast<long long>(i - first);
    }
    if (i != faces_.size())
        throw validation_error("face lattice: face rank out of range");
    for (const Face& f : faces_) lookup_.insert(f.elements);
}

std::pair<std::size_t, std::size_t> FaceLattice::rank_range(int k) const {
    if (k < 0 || k > rank_) throw error("rank_range: rank out of range");
    return ranges_[k];
}

bool FaceLattice::is_face(const Bitset& elements) const {
    return lookup_.count(elements) > 0;
}

FaceLattice faces(const OrientedMatroid& om) {
    const std::size_t n = om.size();
    if (!om.is_acyclic())
        throw validation_error("not a matroid polytope: configuration is not acyclic "
                               "(it has a nonnegative circuit)");
    for (std::size_t e = 0; e < n; ++e)
        if (!om.is_extreme(e))
            throw validation_error("not a matroid polytope: element " + om.labels()[e] +
                                   " is not extreme");

    // Facets are the zero sets of nonnegative cocircuits; all other proper
    // nonempty faces arise as intersections of facets.
    std::set<Bitset> closed;
    std::vector<Bitset> facets;
    for (const auto& c : om.cocircuits()) {
        if (!c.is_nonnegative()) continue;
        Bitset z = c.zero_set();
        if (closed.insert(z).second) facets.push_back(z);
    }
    std::vector<Bitset> queue(facets);
    while (!queue.empty()) {
        Bitset f = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : facets) {
            Bitset h = f & g;
            if (h.none()) continue;
            if (closed.insert(h).second) queue.push_back(h);
        }
    }
    closed.insert(Bitset::full(n));
    closed.insert(Bitset(n));

    std::vector<Face> out;
    out.reserve(closed.size());
    for (const auto& f : closed) {
        Face face;
        face.elements = f;
        face.rank = f.none() ? 0 : om.rank_of_subset(f);
        if (f.any() && !om.is_covector(om.xi(f)))
            throw error("internal: generated face fails the covector criterion");
        out.push_back(std::move(face));
    }
    return FaceLattice(n, om.rank(), om.labels(), std::move(out));
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<long long> h_star_vector(const FaceLattice& lat) {
    const int r = lat.rank();
    const auto& f = lat.f_vector(); // f[k] = number of faces of dimension k-1
    std::vector<long long> h(r, 0);
    for (int l = 0; l < r; ++l) {
        long long acc = 0;
        for (int i = 0; i <= l; ++i) {
            long long term = binomial(r - 1 - i, l - i) * f[r - i];
            acc += ((l - i) % 2 == 0) ? term : -term;
        }
        h[l] = acc;
    }
    return h;
}

std::vector<long long> f_from_h_star(const std::vector<long long>& h_star) {
    const int r = static_cast<int>(h_star.size());
    std::vector<long long> f(r + 1, 0);
    f[0] = 1; // empty face
    for (int l = 0; l < r; ++l) { // l = dimension, stored at rank l+1
        long long acc = 0;
        for (int i = 0; i <= r - 1 - l; ++i)
            acc += binomial(r - 1 - i, l) * h_star[i];
        f[l + 1] = acc;
    }
    return f;
}

bool euler_check(const FaceLattice& lat) {
    const auto& f = lat.f_vector();
    long long acc = 0;
    for (std::size_t k = 0; k < f.size(); ++k)
        acc += (k % 2 == 0) ? -f[k] : f[k]; // rank k has dimension k-1
    return acc == 0;
}

} // namespace mpt
