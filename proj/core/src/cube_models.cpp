#include "mpt/cube_models.hpp"

#include <string>

namespace mpt {

PointConfiguration cube(int d) {
    if (d < 1) throw validation_error("cube dimension must be >= 1");
    if (d > 20) throw validation_error("cube dimension out of range");
    const std::size_t n = std::size_t{1} << d;
    std::vector<std::vector<long long>> pts(n, std::vector<long long>(d));
    for (std::size_t i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) pts[i][j] = (i >> j) & 1;
    return PointConfiguration("cube-" + std::to_string(d), d, std::move(pts));
}

PointConfiguration simplex(int r) {
    if (r < 1) throw validation_error("simplex dimension must be >= 1");
    std::vector<std::vector<long long>> pts(r + 1, std::vector<long long>(r, 0));
    for (int i = 1; i <= r; ++i) pts[i][i - 1] = 1;
    return PointConfiguration("simplex-" + std::to_string(r), r, std::move(pts));
}

PointConfiguration prism() {
    return PointConfiguration("prism", 3,
                              {{0, 0, 0}, {1, 0, 0}, {0, 1, 0},
                               {0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
}

PointConfiguration square_pyramid() {
    return PointConfiguration("square-pyramid", 3,
                              {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {2, 2, 0}, {1, 1, 2}});
}

std::vector<PointConfiguration> corpus() {
    std::vector<PointConfiguration> out;
    for (int r = 2; r <= 5; ++r) out.push_back(simplex(r));
    for (int d = 1; d <= 4; ++d) out.push_back(cube(d));
    out.push_back(prism());
    out.push_back(square_pyramid());
    return out;
}

bool cube_h_star_identity(int d) {
    const auto om = OrientedMatroid::from_points(cube(d));
    const auto lat = faces(om);
    const auto g = graph(lat);

    const auto h = h_star_vector(lat);
    if (static_cast<int>(h.size()) != d + 1) return false;
    for (int l = 0; l <= d; ++l)
        if (h[l] != binomial(d, l)) return false;

    // Binary counting order is induced by the functional sum(2^j x_j), hence
    // a K-ordering; so is its reverse. Both facts are rechecked, not assumed.
    for (const auto& ord :
         {LinearOrdering::identity(g.size()), LinearOrdering::identity(g.size()).reversed()}) {
        if (!is_k_ordering(lat, g, ord)) return false;
        const auto [dp, dm] = degree_histograms(g, ord, d + 1);
        for (int l = 0; l <= d; ++l) {
            if (dp[l] != binomial(d, l)) return false;   // d+(e) = l counts
            if (dm[d - l] != binomial(d, l)) return false; // d-(e) = d-l counts
        }
    }
    return true;
}

ExperimentResult problem_experiment(int d, EnumerationMode mode, std::uint64_t seed,
                                    std::uint64_t budget, int workers,
                                    std::uint64_t witness_limit) {
    const auto om = OrientedMatroid::from_points(cube(d));
    const auto lat = faces(om);
    const auto g = graph(lat);
    OrderingContext ctx(om, lat, g);

    EnumerationOptions opts;
    opts.filter = OrderingFilter::k_not_shelling;
    opts.mode = mode;
    opts.seed = seed;
    opts.budget = budget;
    opts.emit_limit = witness_limit;
    opts.workers = workers;
    opts.with_reports = true;

    ExperimentResult res;
    res.dim = d;
    auto accept = [&](const OrderingReport& rep) {
        if (!rep.is_k || rep.is_shelling ||
            !is_k_ordering(lat, g, rep.ordering) || is_shelling_ordering(om, rep.ordering))
            throw error("internal: a k-not-shelling witness failed definitional re-verification");
        res.witnesses.push_back(rep);
    };
    res.summary = enumerate_orderings(ctx, opts, accept);

    if (d == 2 && mode == EnumerationMode::exhaustive && !res.summary.partial) {
        res.coincide_checked = true;
        res.coincide =
            res.summary.k_not_shelling == 0 && res.summary.shelling_not_k == 0;
        if (!res.coincide)
            throw error("internal: K and shelling ordering sets of the square must coincide");
    }
    return res;
}

} // namespace mpt
