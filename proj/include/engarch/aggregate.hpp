#ifndef ENGARCH_AGGREGATE_HPP
#define ENGARCH_AGGREGATE_HPP

#include <array>
#include <map>
#include <vector>

#include "engarch/graph_metrics.hpp"
#include "engarch/subsystems.hpp"

namespace engarch {

// 16x16 cross-corpus aggregation: counts[A][B] is the number of engines
// whose subsystem graph has the edge A->B (self-loops on the diagonal).
// Weights are ignored; only presence counts.
struct CouplingMatrix {
  std::array<std::array<int, kSubsystemCount>, kSubsystemCount> counts{};
  int n_engines = 0;

  int at(Subsystem source, Subsystem target) const {
    return counts[index_of(source)][index_of(target)];
  }
};

// Throws ConfigError on duplicate engine names.
CouplingMatrix aggregate_heatmap(const std::vector<SubsystemGraph>& graphs);

struct FrequentPair {
  Subsystem source;
  Subsystem target;
  int count = 0;
  double centrality_sum = 0.0;  // averaged betweenness of the two endpoints
};

// All off-diagonal cells with count >= threshold, sorted by count
// descending, then centrality_sum descending, then canonical (source,
// target) order. Threshold must be >= 1.
std::vector<FrequentPair> frequent_pairs(
    const CouplingMatrix& matrix, int threshold,
    const std::map<int, double>& average_betweenness);

// Three-tier summary: the top `inner_core_size` codes by averaged
// betweenness form the inner core (in rank order); codes appearing in any
// frequent pair but not in the inner core form the outer core; the rest is
// the periphery. The frequent pairs are retained as the diagram's edges.
struct EmergentArchitecture {
  std::vector<Subsystem> inner_core;  // centrality rank order
  std::vector<Subsystem> outer_core;  // canonical order
  std::vector<Subsystem> periphery;   // canonical order
  std::vector<FrequentPair> edges;
};

// Throws ConsistencyError when a pair endpoint is missing from the
// centrality map.
EmergentArchitecture derive_emergent_architecture(
    const std::vector<FrequentPair>& pairs,
    const std::map<int, double>& average_betweenness, int inner_core_size);

}  // namespace engarch

#endif
