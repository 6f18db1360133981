#include "mpt/orderings.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <random>
#include <thread>

namespace mpt {

bool is_k_ordering(const FaceLattice& lat, const PolytopeGraph& g, const LinearOrdering& ord) {
    OrderedDigraph d(g, ord);
    for (const Face& f : lat.faces()) {
        if (f.elements.none()) continue;
        if (d.count_sinks(f.elements, 2) != 1) return false;
    }
    return true;
}

std::vector<std::pair<Bitset, int>> face_sink_counts(const FaceLattice& lat,
                                                     const PolytopeGraph& g,
                                                     const LinearOrdering& ord) {
    OrderedDigraph d(g, ord);
    std::vector<std::pair<Bitset, int>> out;
    for (const Face& f : lat.faces()) {
        if (f.elements.none()) continue;
        out.emplace_back(f.elements, static_cast<int>(d.sinks(f.elements).size()));
    }
    return out;
}

bool is_shelling_ordering(const OrientedMatroid& om, const LinearOrdering& ord) {
    if (ord.size() != om.size())
        throw validation_error("is_shelling_ordering: ordering size mismatch");
    for (std::size_t i = 1; i <= om.size(); ++i)
        if (!reorient_initial(om, ord.order(), i).is_acyclic()) return false;
    return true;
}

bool check_sh1_prime(const FaceLattice& lat, const PolytopeGraph& g, const LinearOrdering& ord) {
    if (g.size() != ord.size())
        throw validation_error("check_sh1_prime: ordering size mismatch");
    for (const Face& f : lat.faces()) {
        if (f.rank < 2) continue;
        int min_pos = INT_MAX;
        for (int v = f.elements.next(); v >= 0; v = f.elements.next(v + 1))
            min_pos = std::min(min_pos, ord.position(v));
        for (int v = f.elements.next(); v >= 0; v = f.elements.next(v + 1)) {
            if (ord.position(v) == min_pos) continue; // no earlier face member, no pair
            bool has_earlier_neighbor = false;
            Bitset nb = g.neighbors(v) & f.elements;
            for (int u = nb.next(); u >= 0; u = nb.next(u + 1)) {
                if (ord.position(u) < ord.position(v)) {
                    has_earlier_neighbor = true;
                    break;
                }
            }
            if (!has_earlier_neighbor) return false;
        }
    }
    return true;
}

bool check_rank3_criterion(const FaceLattice& lat, const PolytopeGraph& g,
                           const LinearOrdering& ord) {
    if (lat.rank() < 3) return true; // no rank-3 faces, vacuous
    OrderedDigraph d(g, ord);
    auto [first, last] = lat.rank_range(3);
    for (std::size_t i = first; i < last; ++i)
        if (d.count_sinks(lat.faces()[i].elements, 2) != 1) return false;
    return true;
}

std::pair<std::vector<long long>, std::vector<long long>>
degree_histograms(const PolytopeGraph& g, const LinearOrdering& ord, int min_size) {
    if (g.size() != ord.size())
        throw validation_error("degree_histograms: ordering size mismatch");
    int max_deg = 0;
    for (std::size_t v = 0; v < g.size(); ++v) max_deg = std::max(max_deg, g.degree(v));
    const int len = std::max(min_size, max_deg + 1);
    std::vector<long long> dp(len, 0), dm(len, 0);
    for (std::size_t v = 0; v < g.size(); ++v) {
        int out_deg = 0;
        const Bitset& nb = g.neighbors(v);
        for (int u = nb.next(); u >= 0; u = nb.next(u + 1))
            if (ord.position(u) < ord.position(static_cast<int>(v))) ++out_deg;
        ++dp[out_deg];
        ++dm[g.degree(v) - out_deg];
    }
    return {dp, dm};
}

bool verify_h_star_theorem(const FaceLattice& lat, const PolytopeGraph& g,
                           const LinearOrdering& ord) {
    if (!is_simple(g, lat.rank()))
        throw validation_error("h* comparison requires a simple matroid polytope");
    if (!is_k_ordering(lat, g, ord))
        throw validation_error("h* comparison requires a K-ordering");
    return degree_histograms(g, ord, lat.rank()).first == h_star_vector(lat);
}

const char* to_string(OrderingFilter f) {
    switch (f) {
        case OrderingFilter::all:            return "all";
        case OrderingFilter::k:              return "k";
        case OrderingFilter::shelling:       return "shelling";
        case OrderingFilter::both:           return "both";
        case OrderingFilter::neither:        return "neither";
        case OrderingFilter::k_not_shelling: return "k-not-shelling";
        case OrderingFilter::shelling_not_k: return "shelling-not-k";
    }
    return "?";
}

const char* to_string(EnumerationMode m) {
    return m == EnumerationMode::exhaustive ? "exhaustive" : "sample";
}

OrderingFilter parse_filter(const std::string& s) {
    std::string t = s;
    std::replace(t.begin(), t.end(), '_', '-');
    if (t == "all") return OrderingFilter::all;
    if (t == "k") return OrderingFilter::k;
    if (t == "shelling") return OrderingFilter::shelling;
    if (t == "both" || t == "k-and-shelling") return OrderingFilter::both;
    if (t == "neither") return OrderingFilter::neither;
    if (t == "k-not-shelling" || t == "k-and-not-shelling") return OrderingFilter::k_not_shelling;
    if (t == "shelling-not-k") return OrderingFilter::shelling_not_k;
    throw validation_error("unknown filter '" + s + "'");
}

EnumerationMode parse_mode(const std::string& s) {
    if (s == "exhaustive") return EnumerationMode::exhaustive;
    if (s == "sample") return EnumerationMode::sample;
    throw validation_error("unknown mode '" + s + "' (expected exhaustive or sample)");
}

namespace {

bool matches(OrderingFilter f, bool k, bool sh) {
    switch (f) {
        case OrderingFilter::all:            return true;
        case OrderingFilter::k:              return k;
        case OrderingFilter::shelling:       return sh;
        case OrderingFilter::both:           return k && sh;
        case OrderingFilter::neither:        return !k && !sh;
        case OrderingFilter::k_not_shelling: return k && !sh;
        case OrderingFilter::shelling_not_k: return sh && !k;
    }
    return false;
}

} // namespace

// Mask-based mirror of the polytope data. Everything here requires n <= 64.
struct OrderingContext::Impl {
    OrientedMatroid om;
    FaceLattice lat;
    PolytopeGraph g;
    int n = 0;
    int r = 0;
    std::vector<std::uint64_t> adj;                // per-vertex neighbor masks
    std::vector<std::uint64_t> check_faces;        // masks of faces of rank >= 3
    std::vector<std::vector<int>> faces_of_vertex; // vertex -> indices into check_faces
    std::vector<std::pair<std::uint64_t, std::uint64_t>> circuits; // (pos, neg) masks

    struct FaceEntry {
        Bitset elements;
        std::uint64_t mask = 0;
        int rank = 0;
        int check_idx = -1; // index into check_faces when rank >= 3
    };
    std::vector<FaceEntry> all_faces; // nonempty faces in lattice order

    unsigned long long fact[21];

    Impl(OrientedMatroid om_, FaceLattice lat_, PolytopeGraph g_)
        : om(std::move(om_)), lat(std::move(lat_)), g(std::move(g_)) {
        n = static_cast<int>(g.size());
        r = lat.rank();
        if (n > 64)
            throw validation_error("ordering machinery supports at most 64 elements");
        if (om.size() != g.size() || lat.ground_size() != g.size())
            throw validation_error("ordering context: mismatched component sizes");

        adj.resize(n);
        for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).word0();

        faces_of_vertex.assign(n, {});
        for (const Face& f : lat.faces()) {
            if (f.elements.none()) continue;
            FaceEntry e;
            e.elements = f.elements;
            e.mask = f.elements.word0();
            e.rank = f.rank;
            if (f.rank >= 3) {
                e.check_idx = static_cast<int>(check_faces.size());
                check_faces.push_back(e.mask);
                for (int v = f.elements.next(); v >= 0; v = f.elements.next(v + 1))
                    faces_of_vertex[v].push_back(e.check_idx);
            }
            all_faces.push_back(std::move(e));
        }

        for (const auto& c : om.circuits())
            circuits.emplace_back(c.positive_part().word0(), c.negative_part().word0());

        fact[0] = 1;
        for (int i = 1; i <= 20; ++i) fact[i] = fact[i - 1] * static_cast<unsigned long long>(i);
    }

    // Classify one complete ordering; fills per-check-face sink counts.
    void classify_order(const std::vector<int>& order, bool& k, bool& sh,
                        std::vector<int>& sinks) const {
        sinks.assign(check_faces.size(), 0);
        std::uint64_t placed = 0;
        for (int v : order) {
            for (int fi : faces_of_vertex[v])
                if ((adj[v] & check_faces[fi] & placed) == 0) ++sinks[fi];
            placed |= std::uint64_t{1} << v;
        }
        k = std::all_of(sinks.begin(), sinks.end(), [](int c) { return c == 1; });

        sh = true;
        std::uint64_t prefix = 0;
        for (int v : order) {
            prefix |= std::uint64_t{1} << v;
            for (const auto& [pos, neg] : circuits) {
                if ((neg & ~prefix) == 0 && (pos & prefix) == 0) {
                    sh = false;
                    break;
                }
            }
            if (!sh) break;
        }
    }
};

OrderingContext::OrderingContext(OrientedMatroid om, FaceLattice lat, PolytopeGraph g)
    : impl_(std::make_unique<Impl>(std::move(om), std::move(lat), std::move(g))) {}

OrderingContext::~OrderingContext() = default;

const OrientedMatroid& OrderingContext::om() const { return impl_->om; }
const FaceLattice& OrderingContext::lattice() const { return impl_->lat; }
const PolytopeGraph& OrderingContext::graph() const { return impl_->g; }
std::size_t OrderingContext::size() const { return static_cast<std::size_t>(impl_->n); }
int OrderingContext::rank() const { return impl_->r; }

namespace {

OrderingReport build_report(const OrderingContext::Impl& ix, std::vector<int> order,
                            bool k, bool sh, const std::vector<int>& sinks) {
    OrderingReport rep{LinearOrdering(std::move(order)), k, sh, {}, {}, {}};
    rep.sink_counts.reserve(ix.all_faces.size());
    for (const auto& e : ix.all_faces)
        rep.sink_counts.emplace_back(e.elements, e.check_idx >= 0 ? sinks[e.check_idx] : 1);
    auto hists = degree_histograms(ix.g, rep.ordering, ix.r);
    rep.d_plus_hist = std::move(hists.first);
    rep.d_minus_hist = std::move(hists.second);
    return rep;
}

} // namespace

OrderingReport OrderingContext::classify(const LinearOrdering& ord) const {
    if (ord.size() != static_cast<std::size_t>(impl_->n))
        throw validation_error("classify: ordering size mismatch");
    bool k = false, sh = false;
    std::vector<int> sinks;
    impl_->classify_order(ord.order(), k, sh, sinks);
    return build_report(*impl_, ord.order(), k, sh, sinks);
}

namespace {

using Impl = OrderingContext::Impl;

struct LeafRecord {
    std::vector<int> order;
    bool k = false, sh = false;
    std::vector<int> sinks;
};

struct BlockOutcome {
    EnumerationSummary sums; // count fields only
    std::vector<LeafRecord> records;
};

// Depth-first walk over the orderings that start with one fixed element.
// Sink counters per rank>=3 face are maintained incrementally: a vertex is a
// final sink of F exactly when none of its F-neighbors was placed earlier,
// which is decided at placement time and never changes afterwards.
class BlockRunner {
public:
    BlockRunner(const Impl& ix, OrderingFilter filter, bool record, std::uint64_t record_cap,
                std::uint64_t budget, bool prune_allowed)
        : ix_(ix), filter_(filter), record_(record), record_cap_(record_cap),
          budget_left_(budget), prune_(prune_allowed) {
        order_.assign(ix_.n, -1);
        sinks_.assign(ix_.check_faces.size(), 0);
    }

    BlockOutcome run(int first_element) {
        place(first_element, 0);
        dfs(1);
        unplace(first_element, 0);
        return std::move(out_);
    }

private:
    void tally_leaf(bool k, bool sh) {
        auto& s = out_.sums;
        ++s.total;
        s.k += k;
        s.shelling += sh;
        s.both += k && sh;
        s.k_not_shelling += k && !sh;
        s.shelling_not_k += sh && !k;
        s.neither += !k && !sh;
    }

    // Returns false when the budget ran out and the walk must stop.
    bool dfs(int depth) {
        if (depth == ix_.n) {
            if (budget_left_ == 0) {
                out_.sums.partial = true;
                return false;
            }
            --budget_left_;
            const bool k = k_broken_at_ < 0, sh = sh_broken_at_ < 0;
            tally_leaf(k, sh);
            if (record_ && matches(filter_, k, sh) && out_.records.size() < record_cap_)
                out_.records.push_back({order_, k, sh, sinks_});
            return true;
        }
        for (int v = 0; v < ix_.n; ++v) {
            if (used_ & (std::uint64_t{1} << v)) continue;
            place(v, depth);
            if (prune_ && k_broken_at_ >= 0 && sh_broken_at_ >= 0) {
                // Every completion shares this prefix: none is a K-ordering or
                // a shelling ordering, so the subtree only feeds two counters.
                const unsigned long long sub = ix_.fact[ix_.n - depth - 1];
                if (budget_left_ < sub) {
                    out_.sums.partial = true;
                    unplace(v, depth);
                    return false;
                }
                budget_left_ -= sub;
                out_.sums.total += sub;
                out_.sums.neither += sub;
                unplace(v, depth);
                continue;
            }
            const bool keep_going = dfs(depth + 1);
            unplace(v, depth);
            if (!keep_going) return false;
        }
        return true;
    }

    void place(int v, int depth) {
        const std::uint64_t before = used_;
        for (int fi : ix_.faces_of_vertex[v]) {
            if ((ix_.adj[v] & ix_.check_faces[fi] & before) == 0) {
                if (++sinks_[fi] == 2 && k_broken_at_ < 0) k_broken_at_ = depth;
            }
        }
        used_ |= std::uint64_t{1} << v;
        order_[depth] = v;
        if (sh_broken_at_ < 0) {
            for (const auto& [pos, neg] : ix_.circuits) {
                if ((neg & ~used_) == 0 && (pos & used_) == 0) {
                    sh_broken_at_ = depth;
                    break;
                }
            }
        }
    }

    void unplace(int v, int depth) {
        used_ &= ~(std::uint64_t{1} << v);
        for (int fi : ix_.faces_of_vertex[v])
            if ((ix_.adj[v] & ix_.check_faces[fi] & used_) == 0) --sinks_[fi];
        if (k_broken_at_ == depth) k_broken_at_ = -1;
        if (sh_broken_at_ == depth) sh_broken_at_ = -1;
    }

    const Impl& ix_;
    OrderingFilter filter_;
    bool record_;
    std::uint64_t record_cap_;
    std::uint64_t budget_left_;
    bool prune_;

    std::vector<int> order_;
    std::vector<int> sinks_;
    std::uint64_t used_ = 0;
    int k_broken_at_ = -1;
    int sh_broken_at_ = -1;
    BlockOutcome out_;
};

void accumulate(EnumerationSummary& into, const EnumerationSummary& part) {
    into.total += part.total;
    into.k += part.k;
    into.shelling += part.shelling;
    into.both += part.both;
    into.k_not_shelling += part.k_not_shelling;
    into.shelling_not_k += part.shelling_not_k;
    into.neither += part.neither;
    into.partial = into.partial || part.partial;
}

EnumerationSummary run_exhaustive(const Impl& ix, const EnumerationOptions& opts,
                                  const std::function<void(const OrderingReport&)>& emit) {
    const int n = ix.n;
    if (n > 20)
        throw validation_error("exhaustive enumeration supports at most 20 elements; use sampling");

    const bool record = opts.with_reports && static_cast<bool>(emit);
    // Subtrees whose orderings are neither K nor shelling may be skipped and
    // counted wholesale, unless the filter asks to see exactly those.
    const bool prune_allowed =
        !(record && (opts.filter == OrderingFilter::all || opts.filter == OrderingFilter::neither));
    const std::uint64_t record_cap =
        opts.emit_limit == 0 ? UINT64_MAX : opts.emit_limit;

    const unsigned long long block_size = ix.fact[n - 1];
    const unsigned long long space = ix.fact[n];
    const std::uint64_t budget = opts.budget == 0 ? space : opts.budget;

    std::vector<BlockOutcome> blocks(n);
    std::atomic<int> next{0};
    auto work = [&] {
        for (int b = next.fetch_add(1); b < n; b = next.fetch_add(1)) {
            const unsigned long long start = block_size * static_cast<unsigned long long>(b);
            if (budget <= start) {
                blocks[b].sums.partial = true;
                continue;
            }
            const std::uint64_t local = std::min<unsigned long long>(budget - start, block_size);
            BlockRunner runner(ix, opts.filter, record, record_cap, local, prune_allowed);
            blocks[b] = runner.run(b);
        }
    };

    const int workers = std::clamp(opts.workers, 1, n);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    EnumerationSummary sum;
    for (const auto& b : blocks) accumulate(sum, b.sums);
    if (record) {
        for (const auto& b : blocks) {
            for (const auto& rec : b.records) {
                if (sum.emitted >= record_cap) break;
                emit(build_report(ix, rec.order, rec.k, rec.sh, rec.sinks));
                ++sum.emitted;
            }
        }
    }
    sum.partial = sum.total < space;
    sum.space_known = true;
    sum.space = space;
    sum.coverage = static_cast<double>(sum.total) / static_cast<double>(space);
    return sum;
}

EnumerationSummary run_sample(const Impl& ix, const EnumerationOptions& opts,
                              const std::function<void(const OrderingReport&)>& emit) {
    if (opts.budget == 0)
        throw validation_error("sample mode requires --budget > 0 (number of draws)");
    const int n = ix.n;
    const std::uint64_t draws = opts.budget;

    // One sequential stream of Fisher-Yates shuffles; explicit rejection
    // sampling keeps the draws identical across platforms.
    std::mt19937_64 rng(opts.seed);
    auto below = [&rng](std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do { x = rng(); } while (x >= limit);
        return x % bound;
    };
    std::vector<std::vector<int>> perms(draws);
    for (auto& p : perms) {
        p.resize(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(p[i], p[below(static_cast<std::uint64_t>(i) + 1)]);
    }

    const bool record = opts.with_reports && static_cast<bool>(emit);
    struct DrawOutcome {
        bool k = false, sh = false;
        std::vector<int> sinks;
    };
    std::vector<DrawOutcome> outcomes(draws);

    std::atomic<std::uint64_t> cursor{0};
    constexpr std::uint64_t chunk = 256;
    auto work = [&] {
        std::vector<int> sinks;
        for (std::uint64_t at = cursor.fetch_add(chunk); at < draws; at = cursor.fetch_add(chunk)) {
            const std::uint64_t end = std::min(draws, at + chunk);
            for (std::uint64_t i = at; i < end; ++i) {
                auto& o = outcomes[i];
                ix.classify_order(perms[i], o.k, o.sh, sinks);
                o.sinks = sinks;
            }
        }
    };
    const int workers = std::max(1, opts.workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    EnumerationSummary sum;
    const std::uint64_t record_cap = opts.emit_limit == 0 ? UINT64_MAX : opts.emit_limit;
    for (std::uint64_t i = 0; i < draws; ++i) {
        const auto& o = outcomes[i];
        ++sum.total;
        sum.k += o.k;
        sum.shelling += o.sh;
        sum.both += o.k && o.sh;
        sum.k_not_shelling += o.k && !o.sh;
        sum.shelling_not_k += o.sh && !o.k;
        sum.neither += !o.k && !o.sh;
        if (record && matches(opts.filter, o.k, o.sh) && sum.emitted < record_cap) {
            emit(build_report(ix, perms[i], o.k, o.sh, o.sinks));
            ++sum.emitted;
        }
    }
    if (n <= 20) {
        sum.space_known = true;
        sum.space = ix.fact[n];
        sum.coverage = static_cast<double>(sum.total) / static_cast<double>(sum.space);
    }
    return sum;
}

} // namespace

EnumerationSummary enumerate_orderings(const OrderingContext& ctx,
                                       const EnumerationOptions& opts,
                                       const std::function<void(const OrderingReport&)>& emit) {
    if (opts.workers < 1) throw validation_error("workers must be >= 1");
    if (opts.mode == EnumerationMode::exhaustive)
        return run_exhaustive(ctx.impl(), opts, emit);
    return run_sample(ctx.impl(), opts, emit);
}

} // namespace mpt
