#include "mpt/oriented_matroid.hpp"

#include <algorithm>
#include <set>

namespace mpt {

struct OrientedMatroid::Data {
    std::size_t n = 0;
    int rank = 0;
    std::vector<std::string> labels;
    IntMatrix lifted;            // n x (dim+1)
    std::vector<int> basis_cols; // column basis of the lifted matrix, |basis_cols| == rank
    std::vector<SignVector> cocircuits;
    std::vector<SignVector> circuits;
    bool acyclic = false;
    Bitset extreme;

    mutable std::once_flag covectors_once;
    mutable std::vector<SignVector> covectors;
};

namespace {

// Visit all k-subsets of {0,...,n-1} in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& visit) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void insert_pair(std::set<SignVector>& out, const SignVector& v) {
    out.insert(v);
    out.insert(v.negated());
}

std::vector<SignVector> enumerate_cocircuits(const IntMatrix& lifted,
                                             const std::vector<int>& basis_cols,
                                             int rank) {
    const int n = static_cast<int>(lifted.rows());
    std::set<SignVector> out;
    for_each_subset(n, rank - 1, [&](const std::vector<int>& s) {
        if (rank_of(lifted.select(s, basis_cols)) != rank - 1) return;
        SignVector v(static_cast<std::size_t>(n));
        std::vector<int> rows = s;
        rows.push_back(0);
        for (int j = 0; j < n; ++j) {
            rows.back() = j;
            int sg = det_sign(lifted.select(rows, basis_cols));
            if (sg > 0) v.set(j, Sign::plus);
            else if (sg < 0) v.set(j, Sign::minus);
        }
        // s spans a hyperplane, so some element lies off it and v != 0
        insert_pair(out, v);
    });
    return {out.begin(), out.end()};
}

std::vector<SignVector> enumerate_circuits(const IntMatrix& lifted,
                                           const std::vector<int>& basis_cols,
                                           int rank) {
    const int n = static_cast<int>(lifted.rows());
    std::set<SignVector> out;
    const int kmax = std::min(n, rank + 1);
    for (int k = 2; k <= kmax; ++k) {
        for_each_subset(n, k, [&](const std::vector<int>& t) {
            IntMatrix sub = lifted.select(t, basis_cols);
            Elimination el = eliminate(sub);
            if (el.rank != k - 1) return; // independent, or contains a smaller circuit
            // Unique (up to sign) dependency among the rows of t, by Cramer:
            // lambda_i = (-1)^i det(sub with row i removed, pivot columns).
            SignVector v(static_cast<std::size_t>(n));
            std::vector<int> rows(k - 1);
            for (int drop = 0; drop < k; ++drop) {
                for (int i = 0, w = 0; i < k; ++i)
                    if (i != drop) rows[w++] = i;
                int sg = det_sign(sub.select(rows, el.pivot_cols));
                if (sg == 0) return; // kernel vector has a zero entry: t is not minimal
                if (drop & 1) sg = -sg;
                v.set(t[drop], sg > 0 ? Sign::plus : Sign::minus);
            }
            insert_pair(out, v);
        });
    }
    return {out.begin(), out.end()};
}

bool covector_test(const std::vector<SignVector>& cocircuits, const SignVector& w) {
    SignVector acc(w.size());
    for (const auto& c : cocircuits)
        if (conforms_to(c, w)) acc = compose(acc, c);
    return acc == w;
}

Bitset extreme_elements(std::size_t n, const std::vector<SignVector>& cocircuits) {
    Bitset out(n);
    for (std::size_t e = 0; e < n; ++e) {
        Bitset f(n);
        f.set(e);
        SignVector w(f.complement(), Bitset(n)); // Xi({e})
        if (covector_test(cocircuits, w)) out.set(e);
    }
    return out;
}

} // namespace

OrientedMatroid OrientedMatroid::from_points(const PointConfiguration& config) {
    return from_vectors(config.lifted_matrix(), config.labels());
}

OrientedMatroid OrientedMatroid::from_vectors(IntMatrix rows, std::vector<std::string> labels) {
    if (rows.rows() == 0) throw validation_error("oriented matroid: empty ground set");
    if (labels.size() != rows.rows())
        throw validation_error("oriented matroid: label count does not match row count");
    auto d = std::make_shared<Data>();
    d->n = rows.rows();
    d->labels = std::move(labels);
    d->lifted = std::move(rows);

    Elimination el = eliminate(d->lifted);
    if (el.rank == 0) throw validation_error("oriented matroid: degenerate input of rank 0");
    d->rank = el.rank;
    d->basis_cols = el.pivot_cols;

    d->cocircuits = enumerate_cocircuits(d->lifted, d->basis_cols, d->rank);
    d->circuits = enumerate_circuits(d->lifted, d->basis_cols, d->rank);
    d->acyclic = covector_test(d->cocircuits, SignVector::all_plus(d->n));
    d->extreme = extreme_elements(d->n, d->cocircuits);
    return OrientedMatroid(std::move(d));
}

std::size_t OrientedMatroid::size() const { return d_->n; }
int OrientedMatroid::rank() const { return d_->rank; }
const std::vector<std::string>& OrientedMatroid::labels() const { return d_->labels; }
const std::vector<SignVector>& OrientedMatroid::cocircuits() const { return d_->cocircuits; }
const std::vector<SignVector>& OrientedMatroid::circuits() const { return d_->circuits; }

const std::vector<SignVector>& OrientedMatroid::covectors() const {
    std::call_once(d_->covectors_once, [this] {
        std::set<SignVector> seen;
        seen.insert(SignVector(d_->n)); // zero vector
        std::vector<SignVector> queue(d_->cocircuits.begin(), d_->cocircuits.end());
        for (const auto& c : queue) seen.insert(c);
        while (!queue.empty()) {
            SignVector w = std::move(queue.back());
            queue.pop_back();
            for (const auto& c : d_->cocircuits) {
                SignVector u = compose(w, c);
                if (seen.insert(u).second) queue.push_back(u);
            }
        }
        d_->covectors.assign(seen.begin(), seen.end());
    });
    return d_->covectors;
}

std::vector<SignVector> OrientedMatroid::topes() const {
    std::vector<SignVector> out;
    for (const auto& w : covectors())
        if (w.support_size() == d_->n) out.push_back(w);
    return out;
}

bool OrientedMatroid::is_covector(const SignVector& w) const {
    if (w.size() != d_->n) throw error("is_covector: size mismatch");
    return covector_test(d_->cocircuits, w);
}

SignVector OrientedMatroid::xi(const Bitset& face) const {
    if (face.size() != d_->n) throw error("xi: size mismatch");
    return SignVector(face.complement(), Bitset(d_->n));
}

bool OrientedMatroid::is_acyclic() const { return d_->acyclic; }

bool OrientedMatroid::has_positive_circuit() const {
    return std::any_of(d_->circuits.begin(), d_->circuits.end(),
                       [](const SignVector& c) { return c.is_nonnegative(); });
}

bool OrientedMatroid::is_extreme(std::size_t e) const {
    if (e >= d_->n) throw error("is_extreme: element out of range");
    return d_->extreme.test(e);
}

bool OrientedMatroid::is_matroid_polytope() const {
    return d_->acyclic && d_->extreme.count() == d_->n;
}

int OrientedMatroid::rank_of_subset(const Bitset& s) const {
    if (s.size() != d_->n) throw error("rank_of_subset: size mismatch");
    return rank_of(d_->lifted.select(s.to_indices(), d_->basis_cols));
}

OrientedMatroid OrientedMatroid::reoriented(const Bitset& flip) const {
    if (flip.size() != d_->n) throw error("reoriented: size mismatch");
    auto nd = std::make_shared<Data>();
    nd->n = d_->n;
    nd->rank = d_->rank;
    nd->labels = d_->labels;
    nd->basis_cols = d_->basis_cols;
    nd->lifted = d_->lifted;
    for (int i = flip.next(); i >= 0; i = flip.next(i + 1))
        for (std::size_t j = 0; j < nd->lifted.cols(); ++j)
            nd->lifted(i, j) = -nd->lifted(i, j);

    nd->cocircuits.reserve(d_->cocircuits.size());
    for (const auto& c : d_->cocircuits) nd->cocircuits.push_back(c.reoriented(flip));
    std::sort(nd->cocircuits.begin(), nd->cocircuits.end());
    nd->circuits.reserve(d_->circuits.size());
    for (const auto& c : d_->circuits) nd->circuits.push_back(c.reoriented(flip));
    std::sort(nd->circuits.begin(), nd->circuits.end());

    nd->acyclic = covector_test(nd->cocircuits, SignVector::all_plus(nd->n));
    nd->extreme = extreme_elements(nd->n, nd->cocircuits);
    return OrientedMatroid(std::move(nd));
}

OrientedMatroid reorient_initial(const OrientedMatroid& om,
                                 const std::vector<int>& order, std::size_t k) {
    const std::size_t n = om.size();
    if (order.size() != n) throw validation_error("reorient_initial: ordering length mismatch");
    if (k > n) throw validation_error("reorient_initial: k out of range");
    Bitset seen(n), flip(n);
    for (std::size_t p = 0; p < n; ++p) {
        int e = order[p];
        if (e < 0 || static_cast<std::size_t>(e) >= n || seen.test(e))
            throw validation_error("reorient_initial: not a permutation of the ground set");
        seen.set(e);
        if (p < k) flip.set(e);
    }
    return om.reoriented(flip);
}

OrientedMatroid OrientedMatroid::restricted_to(const Bitset& subset) const {
    if (subset.size() != d_->n) throw error("restricted_to: size mismatch");
    if (subset.none()) throw validation_error("restricted_to: empty subset");
    std::vector<int> rows = subset.to_indices();
    std::vector<int> all_cols(d_->lifted.cols());
    for (std::size_t j = 0; j < all_cols.size(); ++j) all_cols[j] = static_cast<int>(j);
    std::vector<std::string> labels;
    labels.reserve(rows.size());
    for (int i : rows) labels.push_back(d_->labels[i]);
    return from_vectors(d_->lifted.select(rows, all_cols), std::move(labels));
}

} // namespace mpt
