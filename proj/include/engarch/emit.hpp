#ifndef ENGARCH_EMIT_HPP
#define ENGARCH_EMIT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "engarch/aggregate.hpp"
#include "engarch/graph_metrics.hpp"
#include "engarch/resolver.hpp"

namespace engarch {

// All renderers are pure text producers; repeated calls on the same input
// yield byte-identical output.

// digraph whose body rows are exactly `"<source>" -> "<target>";`,
// sorted by (source, target).
std::string render_file_graph_dot(const FileGraph& graph);

// digraph over subsystem codes; node rows first, then edges carrying
// `label="<weight>"`, all in canonical order.
std::string render_subsystem_graph_dot(const SubsystemGraph& graph);

// header `including_file,directive,reason`, rows sorted.
std::string render_unresolved_csv(std::vector<UnresolvedInclude> unresolved);

// columns `subsystem,in_degree,out_degree,betweenness`, one row per graph
// node in canonical order.
std::string render_metrics_csv(const SubsystemGraph& graph,
                               const MetricsReport& metrics);

// 17x17 comma-separated table (header row/column = canonical codes).
std::string render_heatmap_csv(const CouplingMatrix& matrix);

// columns `source,target,count,centrality_sum`.
std::string render_pairs_csv(const std::vector<FrequentPair>& pairs);

// tiers plus retained edges, one per line.
std::string render_architecture_text(const EmergentArchitecture& arch);

// 16x16 grid of <rect> cells (exactly 256), rows = including subsystem,
// shaded linearly from white (0) to dark red (n_engines), count printed in
// each cell.
std::string render_heatmap_svg(const CouplingMatrix& matrix);

// three concentric zones with nodes at deterministic angular positions and
// the retained pairs drawn as arrows.
std::string render_architecture_svg(const EmergentArchitecture& arch);

// shortest round-trippable form, stable across runs ("%.9g")
std::string format_double(double value);

std::string csv_escape(std::string_view field);
std::string dot_quote(std::string_view id);

// Throws IoError when the file cannot be written.
void write_file(const std::string& path, std::string_view content);

}  // namespace engarch

#endif
