#ifndef ENGARCH_GRAPH_METRICS_HPP
#define ENGARCH_GRAPH_METRICS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "engarch/resolver.hpp"
#include "engarch/subsystems.hpp"

namespace engarch {

// Subsystem-graph node ids: 0..15 are the canonical subsystem indices;
// 16 stands for files outside the mapping (present only when requested).
inline constexpr int kUnassignedNode = static_cast<int>(kSubsystemCount);

std::string node_label(int node);

// Weighted directed graph over the subsystems present in one engine.
// Edge weight counts distinct file-level include pairs; self-loops allowed.
struct SubsystemGraph {
  std::string engine;
  std::vector<int> nodes;                        // ascending (canonical order)
  std::map<std::pair<int, int>, int> edges;      // (source, target) -> weight

  bool has_edge(int source, int target) const {
    return edges.count({source, target}) > 0;
  }
};

// Edge (A,B) exists iff some file tagged A includes some file tagged B;
// nodes are exactly the codes with at least one tagged file. Files without
// a tag are dropped unless `include_unassigned` adds them as a pseudo-node.
SubsystemGraph build_subsystem_graph(const FileGraph& file_graph,
                                     const std::vector<TaggedFile>& tagged,
                                     std::string engine,
                                     bool include_unassigned = false);

// Distinct predecessor / successor counts; self-loops excluded.
std::map<int, int> in_degree(const SubsystemGraph& graph);
std::map<int, int> out_degree(const SubsystemGraph& graph);

// Directed, unweighted betweenness centrality (Brandes accumulation over
// BFS shortest paths); self-loops ignored. Unnormalised by default; with
// `normalize` the values are divided by (n-1)(n-2).
std::map<int, double> betweenness(const SubsystemGraph& graph,
                                  bool normalize = false);

struct MetricsReport {
  std::string engine;
  std::map<int, int> in_degree;
  std::map<int, int> out_degree;
  std::map<int, double> betweenness;
};

MetricsReport compute_metrics(const SubsystemGraph& graph,
                              bool normalize = false);

enum class Metric { InDegree, Betweenness };
enum class AveragingMode { PresentOnly, ZeroFill };

// Cross-engine averages, sorted descending; ties fall back to canonical
// code order. PresentOnly averages each code over the engines that contain
// it (codes present nowhere are omitted); ZeroFill counts absence as zero
// over all engines. The pseudo-node never participates.
std::vector<std::pair<int, double>> average_metric(
    const std::vector<MetricsReport>& reports, Metric metric,
    AveragingMode mode);

}  // namespace engarch

#endif
