#pragma once

// Persistence of scheme results: the comparison CSV, the full JSON result,
// and reading objective-vector tables back.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mstp/pipeline.hpp"

namespace mstp {

inline constexpr const char* kReportHeader = "approach,weights,L,C,Delta,Q,pareto_layer";

/// CSV text: header, then one row per entry in result order. Numbers use six
/// significant digits; weights are ';'-joined and "-" for the MST row.
std::string report_csv(const SchemeResult& result);
void write_report(const SchemeResult& result, const std::string& path);

struct VectorRow {
  std::string label;
  ObjectiveVector objectives;
  std::optional<int> pareto_layer;
};

/// Parses a CSV whose header names at least the columns L, C, Delta and Q (any
/// order). Optional columns: `approach` (row label) and `pareto_layer`.
std::vector<VectorRow> parse_vector_csv(const std::string& text);
std::vector<VectorRow> read_vector_csv(const std::string& path);

nlohmann::json result_to_json(const SchemeResult& result);
/// Rebuilds the result and recomputes every objective vector from its edge set;
/// throws InvalidInput if any stored vector differs by more than 1e-9 relative
/// or a stored layer disagrees with the recomputed layering.
SchemeResult result_from_json(const nlohmann::json& doc);

void save_result(const SchemeResult& result, const std::string& path);
SchemeResult load_result(const std::string& path);

/// |a - b| <= tol * max(1, |a|, |b|) for every component.
bool objectives_close(const ObjectiveVector& a, const ObjectiveVector& b, double tol = 1e-9);

} // namespace mstp
