#include "mpt/io.hpp"

#include <fstream>
#include <sstream>

namespace mpt {

namespace {

std::vector<std::string> string_list(const json& j, const char* what) {
    if (!j.is_array()) throw validation_error(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw validation_error(std::string(what) + " entries must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

json labels_of(const Bitset& set, const std::vector<std::string>& labels) {
    json out = json::array();
    for (int v = set.next(); v >= 0; v = set.next(v + 1)) out.push_back(labels[v]);
    return out;
}

} // namespace

PointConfiguration read_configuration(const json& j) {
    if (!j.is_object()) throw validation_error("configuration must be a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw validation_error("configuration needs an integer \"dim\"");
    if (!j.contains("points") || !j["points"].is_array())
        throw validation_error("configuration needs a \"points\" array");

    const int dim = j["dim"].get<int>();
    std::vector<std::vector<long long>> pts;
    for (const auto& row : j["points"]) {
        if (!row.is_array()) throw validation_error("each point must be an array");
        std::vector<long long> p;
        for (const auto& c : row) {
            if (!c.is_number_integer())
                throw validation_error("coordinates must be integers (got " + c.dump() + ")");
            p.push_back(c.get<long long>());
        }
        pts.push_back(std::move(p));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = string_list(j["labels"], "labels");
    std::string name = j.value("name", std::string("input"));
    return PointConfiguration(std::move(name), dim, std::move(pts), std::move(labels));
}

PolytopeGraph read_graph(const json& j) {
    if (!j.is_object()) throw validation_error("graph must be a JSON object");
    if (!j.contains("vertices")) throw validation_error("graph needs a \"vertices\" array");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw validation_error("graph needs an \"edges\" array");

    auto labels = string_list(j["vertices"], "vertices");
    auto index_of = [&](const std::string& s) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == s) return static_cast<int>(i);
        throw validation_error("edge endpoint '" + s + "' is not a vertex");
    };
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw validation_error("each edge must be a pair of vertex labels");
        edges.emplace_back(index_of(e[0].get<std::string>()), index_of(e[1].get<std::string>()));
    }
    const std::size_t n = labels.size();
    return PolytopeGraph(n, std::move(edges), std::move(labels));
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open '" + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw validation_error("'" + path + "' is not valid JSON");
    return j;
}

json configuration_json(const PointConfiguration& config) {
    json pts = json::array();
    for (const auto& p : config.points()) pts.push_back(p);
    return {{"name", config.name()},
            {"dim", config.dim()},
            {"points", pts},
            {"labels", config.labels()}};
}

json graph_json(const PolytopeGraph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back({g.labels()[u], g.labels()[v]});
    return {{"vertices", g.labels()}, {"edges", edges}};
}

json lattice_json(const FaceLattice& lat) {
    json faces = json::array();
    for (const Face& f : lat.faces())
        faces.push_back({{"elements", labels_of(f.elements, lat.labels())}, {"rank", f.rank}});
    return {{"ground", lat.labels()},
            {"rank", lat.rank()},
            {"faces", faces},
            {"f", lat.f_vector()},
            {"h_star", h_star_vector(lat)},
            {"euler_ok", euler_check(lat)}};
}

json report_json(const OrderingReport& rep, const std::vector<std::string>& labels) {
    json sinks = json::array();
    for (const auto& [face, count] : rep.sink_counts)
        sinks.push_back({{"face", labels_of(face, labels)}, {"sinks", count}});
    return {{"ordering", rep.ordering.to_labels(labels)},
            {"is_k", rep.is_k},
            {"is_shelling", rep.is_shelling},
            {"sink_counts", sinks},
            {"d_plus_hist", rep.d_plus_hist},
            {"d_minus_hist", rep.d_minus_hist}};
}

json summary_json(const EnumerationSummary& s) {
    json out = {{"total", s.total},
                {"k", s.k},
                {"shelling", s.shelling},
                {"both", s.both},
                {"k_not_shelling", s.k_not_shelling},
                {"shelling_not_k", s.shelling_not_k},
                {"neither", s.neither},
                {"emitted", s.emitted},
                {"partial", s.partial}};
    if (s.space_known) {
        out["space"] = s.space;
        out["coverage"] = s.coverage;
    }
    return out;
}

json search_json(const OrientationSearch& s, const std::vector<std::string>& labels) {
    json list = json::array();
    for (const auto& o : s.orientations)
        list.push_back({{"ordering", o.ordering.to_labels(labels)},
                        {"score", o.score},
                        {"arcs", o.arcs.to_string()}});
    return {{"min_score", s.min_score},
            {"examined", s.examined},
            {"partial", s.partial},
            {"orientations", list}};
}

json experiment_json(const ExperimentResult& r, const std::vector<std::string>& labels) {
    json witnesses = json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(report_json(w, labels));
    json out = {{"dim", r.dim},
                {"summary", summary_json(r.summary)},
                {"witnesses", witnesses}};
    if (r.coincide_checked) out["coincide"] = r.coincide;
    return out;
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::string out(16, '0');
    for (int i = 0; i < 16; ++i) out[i] = "0123456789abcdef"[(h >> (60 - 4 * i)) & 0xf];
    return out;
}

std::string digest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return fnv1a64_hex(buf.str());
}

} // namespace mpt
