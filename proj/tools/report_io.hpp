#pragma once

#include <string>

#include "rootclust/solver.hpp"

namespace rootclust {

enum class OutputFormat { json, csv, txt, svg };

/// Parses "json", "csv", "txt" or "svg"; throws std::invalid_argument.
OutputFormat parse_format(const std::string& name);

struct EmitOptions {
  /// Adds the extended counters (approx-P* outcomes, per-test timings,
  /// P* precision histogram) to json, and a stats footer to txt.
  bool detailed_stats = false;
  /// Draws each cluster's component box in svg output.
  bool draw_boxes = false;
};

/// Serializes a report. Coordinates are exact decimal expansions of the
/// stored dyadic values; "bits" records the mantissa length.
std::string emit_report(const ClusterReport& report, OutputFormat format, const EmitOptions& options = {});

/// Inverse of the json form (clusters, region, epsilon, algorithm, degree
/// and the counters of the stats block).
ClusterReport parse_report_json(const std::string& text);

}  // namespace rootclust
