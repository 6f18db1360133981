#pragma once

#include <string>

#include <json.hpp>

#include "mpt/cube_models.hpp"
#include "mpt/reconstruction.hpp"

namespace mpt {

using nlohmann::json;

// Input schemas. Coordinates must be JSON integers (exact arithmetic end to
// end, so no floating point is accepted).
//
// configuration: { "name"?: str, "dim": int, "points": [[int,...],...],
//                  "labels"?: [str,...] }
// graph:         { "vertices": [str,...], "edges": [[str,str],...] }
PointConfiguration read_configuration(const json& j);
PolytopeGraph read_graph(const json& j);

// Parse a file; validation_error on unreadable files or malformed JSON.
json read_json_file(const std::string& path);

json configuration_json(const PointConfiguration& config);
json graph_json(const PolytopeGraph& g);
json lattice_json(const FaceLattice& lat);
json report_json(const OrderingReport& rep, const std::vector<std::string>& labels);
json summary_json(const EnumerationSummary& s);
json search_json(const OrientationSearch& s, const std::vector<std::string>& labels);
json experiment_json(const ExperimentResult& r, const std::vector<std::string>& labels);

// FNV-1a 64-bit digest of a byte string, hex-encoded; used by run manifests.
std::string fnv1a64_hex(const std::string& bytes);
std::string digest_file(const std::string& path); // validation_error if unreadable

} // namespace mpt
