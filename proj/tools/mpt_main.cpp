// mpt: command-line front end. One subcommand per operation, JSON on stdout,
// diagnostics and a run manifest on stderr.
//
// Exit codes: 0 success, 1 usage error, 2 validation/consistency error,
// 3 run ended by budget (partial results printed).

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mpt/io.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct Manifest {
    std::string command;
    std::map<std::string, std::string> inputs; // path -> digest
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void add_input(const std::string& path) { inputs[path] = mpt::digest_file(path); }

    void emit() const {
        const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        mpt::json j = {{"command", command}, {"inputs", inputs},     {"seed", seed},
                       {"budget", budget},   {"version", kVersion},  {"wall_ms", wall}};
        std::cerr << j.dump() << "\n";
    }
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

struct Bundle {
    mpt::PointConfiguration config;
    mpt::OrientedMatroid om;
    mpt::FaceLattice lat;
    mpt::PolytopeGraph g;
};

Bundle load_bundle(const std::string& path, Manifest& mf) {
    mf.add_input(path);
    auto config = mpt::read_configuration(mpt::read_json_file(path));
    auto om = mpt::OrientedMatroid::from_points(config);
    auto lat = mpt::faces(om);
    auto g = mpt::graph(lat);
    return {std::move(config), std::move(om), std::move(lat), std::move(g)};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matroid polytope toolkit"};
    app.require_subcommand(1);

    std::string input_path, graph_path, oracle_path, ordering_csv;
    std::string filter_name = "all", mode_name = "exhaustive";
    std::uint64_t seed = 0, budget = 0, limit = 0;
    int workers = 1, dim = 2;
    bool counts_only = false;

    auto* c_faces = app.add_subcommand("faces", "face lattice, f- and h*-vector");
    c_faces->add_option("--input", input_path, "configuration JSON")->required();

    auto* c_fvec = app.add_subcommand("fvector", "f- and h*-vector only");
    c_fvec->add_option("--input", input_path, "configuration JSON")->required();

    auto* c_check = app.add_subcommand("check-ordering", "classify one ordering");
    c_check->add_option("--input", input_path, "configuration JSON")->required();
    c_check->add_option("--ordering", ordering_csv, "comma-separated labels, smallest first")
        ->required();

    auto* c_enum = app.add_subcommand("enumerate", "walk the ordering space");
    c_enum->add_option("--input", input_path, "configuration JSON")->required();
    c_enum->add_option("--filter", filter_name,
                       "all|k|shelling|both|neither|k-not-shelling|shelling-not-k");
    c_enum->add_option("--mode", mode_name, "exhaustive|sample");
    c_enum->add_option("--seed", seed, "sample seed");
    c_enum->add_option("--budget", budget, "orderings examined (0 = all) / sample draws");
    c_enum->add_option("--limit", limit, "cap on emitted reports (0 = no cap)");
    c_enum->add_option("--workers", workers, "worker threads");
    c_enum->add_flag("--counts-only", counts_only, "summary only, no per-ordering output");

    auto* c_rec = app.add_subcommand("reconstruct", "face lattice from the abstract graph");
    c_rec->add_option("--graph", graph_path, "graph JSON")->required();
    c_rec->add_option("--oracle", oracle_path, "configuration JSON to compare against");
    c_rec->add_option("--budget", budget, "orientation search budget (0 = all)");

    auto* c_cube = app.add_subcommand("cube", "emit the cube configuration C^d");
    c_cube->add_option("--dim", dim, "cube dimension")->required();

    auto* c_corpus = app.add_subcommand("corpus", "emit the test corpus, one JSON line each");

    auto* c_exp = app.add_subcommand("experiment", "search C^d for K-not-shelling orderings");
    c_exp->add_option("--dim", dim, "cube dimension")->required();
    c_exp->add_option("--mode", mode_name, "exhaustive|sample");
    c_exp->add_option("--seed", seed, "sample seed");
    c_exp->add_option("--budget", budget, "orderings examined (0 = all) / sample draws");
    c_exp->add_option("--limit", limit, "cap on emitted witnesses (0 = no cap)");
    c_exp->add_option("--workers", workers, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    Manifest mf;
    mf.command = app.get_subcommands().front()->get_name();
    mf.seed = seed;
    mf.budget = budget;

    try {
        int exit_code = 0;

        if (c_faces->parsed()) {
            auto b = load_bundle(input_path, mf);
            std::cout << mpt::lattice_json(b.lat).dump(2) << "\n";
        } else if (c_fvec->parsed()) {
            auto b = load_bundle(input_path, mf);
            mpt::json j = {{"name", b.config.name()},
                           {"f", b.lat.f_vector()},
                           {"h_star", mpt::h_star_vector(b.lat)},
                           {"euler_ok", mpt::euler_check(b.lat)}};
            std::cout << j.dump(2) << "\n";
        } else if (c_check->parsed()) {
            auto b = load_bundle(input_path, mf);
            const auto ord =
                mpt::LinearOrdering::from_labels(split_commas(ordering_csv), b.config.labels());
            mpt::OrderingContext ctx(b.om, b.lat, b.g);
            auto rep = ctx.classify(ord);
            if (rep.is_k != mpt::is_k_ordering(b.lat, b.g, ord) ||
                rep.is_shelling != mpt::is_shelling_ordering(b.om, ord))
                throw mpt::error("internal: fast and definitional classification disagree");
            auto j = mpt::report_json(rep, b.config.labels());
            j["sh1_prime"] = mpt::check_sh1_prime(b.lat, b.g, ord);
            if (mpt::is_simple(b.g, b.lat.rank()) && rep.is_k)
                j["h_star_match"] = mpt::verify_h_star_theorem(b.lat, b.g, ord);
            std::cout << j.dump(2) << "\n";
        } else if (c_enum->parsed()) {
            auto b = load_bundle(input_path, mf);
            mpt::OrderingContext ctx(b.om, b.lat, b.g);
            mpt::EnumerationOptions opts;
            opts.filter = mpt::parse_filter(filter_name);
            opts.mode = mpt::parse_mode(mode_name);
            opts.seed = seed;
            opts.budget = budget;
            opts.emit_limit = limit;
            opts.workers = workers;
            opts.with_reports = !counts_only;
            const auto& labels = b.config.labels();
            auto summary = mpt::enumerate_orderings(ctx, opts, [&](const mpt::OrderingReport& r) {
                std::cout << mpt::report_json(r, labels).dump() << "\n";
            });
            std::cout << mpt::summary_json(summary).dump(2) << "\n";
            if (summary.partial) exit_code = 3;
        } else if (c_rec->parsed()) {
            mf.add_input(graph_path);
            auto g = mpt::read_graph(mpt::read_json_file(graph_path));
            auto search = mpt::find_good_orientations(g, budget);
            auto lat = mpt::reconstruct_faces(g, search.orientations);
            mpt::json j = {{"lattice", mpt::lattice_json(lat)},
                           {"min_score", search.min_score},
                           {"good_orientations", search.orientations.size()},
                           {"examined", search.examined},
                           {"partial", search.partial}};
            if (!oracle_path.empty()) {
                mf.add_input(oracle_path);
                auto config = mpt::read_configuration(mpt::read_json_file(oracle_path));
                auto oracle_lat = mpt::faces(mpt::OrientedMatroid::from_points(config));
                const bool match = mpt::lattices_match(lat, oracle_lat);
                j["oracle_match"] = match;
                if (!match) exit_code = 2;
            }
            std::cout << j.dump(2) << "\n";
            if (exit_code == 0 && search.partial) exit_code = 3;
        } else if (c_cube->parsed()) {
            if (dim > 6)
                std::cerr << "warning: cube dimension " << dim
                          << " is past desk scale; downstream runs will be expensive\n";
            std::cout << mpt::configuration_json(mpt::cube(dim)).dump(2) << "\n";
        } else if (c_corpus->parsed()) {
            for (const auto& config : mpt::corpus())
                std::cout << mpt::configuration_json(config).dump() << "\n";
        } else if (c_exp->parsed()) {
            auto res = mpt::problem_experiment(dim, mpt::parse_mode(mode_name), seed, budget,
                                               workers, limit);
            const auto labels = mpt::cube(dim).labels();
            for (const auto& w : res.witnesses)
                std::cout << mpt::report_json(w, labels).dump() << "\n";
            mpt::json j = mpt::experiment_json(res, labels);
            j.erase("witnesses"); // already streamed above
            std::cout << j.dump(2) << "\n";
            if (res.summary.partial) exit_code = 3;
        }

        mf.emit();
        return exit_code;
    } catch (const mpt::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        mf.emit();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        mf.emit();
        return 2;
    }
}
