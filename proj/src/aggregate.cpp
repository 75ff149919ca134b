#include "engarch/aggregate.hpp"

#include <algorithm>
#include <set>

#include "engarch/errors.hpp"

namespace engarch {

CouplingMatrix aggregate_heatmap(const std::vector<SubsystemGraph>& graphs) {
  std::set<std::string> names;
  for (const auto& graph : graphs) {
    if (!names.insert(graph.engine).second) {
      throw ConfigError("duplicate engine name in corpus: " + graph.engine);
    }
  }
  CouplingMatrix matrix;
  matrix.n_engines = static_cast<int>(graphs.size());
  for (const auto& graph : graphs) {
    for (const auto& [key, _] : graph.edges) {
      if (key.first >= static_cast<int>(kSubsystemCount) ||
          key.second >= static_cast<int>(kSubsystemCount)) {
        continue;  // pseudo-node edges stay per-engine
      }
      ++matrix.counts[key.first][key.second];
    }
  }
  return matrix;
}

std::vector<FrequentPair> frequent_pairs(
    const CouplingMatrix& matrix, int threshold,
    const std::map<int, double>& average_betweenness) {
  if (threshold < 1) {
    throw ConfigError("pair threshold must be at least 1");
  }
  auto centrality = [&](int code) {
    auto it = average_betweenness.find(code);
    return it == average_betweenness.end() ? 0.0 : it->second;
  };
  std::vector<FrequentPair> pairs;
  for (std::size_t a = 0; a < kSubsystemCount; ++a) {
    for (std::size_t b = 0; b < kSubsystemCount; ++b) {
      if (a == b) continue;  // self-coupling is heatmap-only
      int count = matrix.counts[a][b];
      if (count < threshold) continue;
      pairs.push_back({static_cast<Subsystem>(a), static_cast<Subsystem>(b),
                       count,
                       centrality(static_cast<int>(a)) +
                           centrality(static_cast<int>(b))});
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const FrequentPair& x, const FrequentPair& y) {
              if (x.count != y.count) return x.count > y.count;
              if (x.centrality_sum != y.centrality_sum) {
                return x.centrality_sum > y.centrality_sum;
              }
              if (x.source != y.source) return x.source < y.source;
              return x.target < y.target;
            });
  return pairs;
}

EmergentArchitecture derive_emergent_architecture(
    const std::vector<FrequentPair>& pairs,
    const std::map<int, double>& average_betweenness, int inner_core_size) {
  if (inner_core_size < 1) {
    throw ConfigError("inner core size must be at least 1");
  }
  for (const auto& pair : pairs) {
    for (Subsystem endpoint : {pair.source, pair.target}) {
      if (average_betweenness.count(index_of(endpoint)) == 0) {
        throw ConsistencyError(
            "centrality map is missing a code that appears in the pairs: " +
            std::string(code_of(endpoint)));
      }
    }
  }

  std::vector<std::pair<int, double>> ranking;
  for (const auto& [code, value] : average_betweenness) {
    if (code < static_cast<int>(kSubsystemCount)) ranking.emplace_back(code, value);
  }
  std::sort(ranking.begin(), ranking.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  EmergentArchitecture arch;
  std::set<Subsystem> in_inner;
  for (std::size_t i = 0;
       i < ranking.size() && i < static_cast<std::size_t>(inner_core_size);
       ++i) {
    auto code = static_cast<Subsystem>(ranking[i].first);
    arch.inner_core.push_back(code);
    in_inner.insert(code);
  }

  std::set<Subsystem> in_pairs;
  for (const auto& pair : pairs) {
    in_pairs.insert(pair.source);
    in_pairs.insert(pair.target);
  }
  for (Subsystem code : all_subsystems()) {
    if (in_inner.count(code) > 0) continue;
    if (in_pairs.count(code) > 0) {
      arch.outer_core.push_back(code);
    } else {
      arch.periphery.push_back(code);
    }
  }
  arch.edges = pairs;
  return arch;
}

}  // namespace engarch
