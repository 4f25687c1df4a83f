#pragma once

// JSON instance files:
//   { "alpha": a, "beta": b,
//     "nodes": [{"id": i, "x": x, "y": y, "z": z, "s": s}, ...],
//     "edges": [[i, j], ...] | null }
// `"edges": null` selects the complete geometric graph.

#include <string>

#include <json.hpp>

#include "mstp/model.hpp"

namespace mstp {

nlohmann::json instance_to_json(const Network& net);
/// Throws InvalidInput on schema violations.
Network instance_from_json(const nlohmann::json& doc);

Network load_instance(const std::string& path);
void save_instance(const Network& net, const std::string& path);

/// Reads a whole file; throws IoError naming the path.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

} // namespace mstp
