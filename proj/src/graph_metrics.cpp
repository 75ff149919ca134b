#include "engarch/graph_metrics.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>

#include "engarch/errors.hpp"

namespace engarch {

std::string node_label(int node) {
  if (node == kUnassignedNode) return "UNASSIGNED";
  return std::string(code_of(static_cast<Subsystem>(node)));
}

SubsystemGraph build_subsystem_graph(const FileGraph& file_graph,
                                     const std::vector<TaggedFile>& tagged,
                                     std::string engine,
                                     bool include_unassigned) {
  std::unordered_map<std::string, int> tag_of;
  tag_of.reserve(tagged.size());
  std::set<int> nodes;
  for (const auto& file : tagged) {
    int node = file.code ? index_of(*file.code) : kUnassignedNode;
    tag_of.emplace(file.path, node);
    if (node != kUnassignedNode || include_unassigned) nodes.insert(node);
  }

  auto node_for = [&](const std::string& path) {
    auto it = tag_of.find(path);
    return it == tag_of.end() ? kUnassignedNode : it->second;
  };

  SubsystemGraph graph;
  graph.engine = std::move(engine);
  for (const auto& edge : file_graph.edges) {
    int source = node_for(edge.source);
    int target = node_for(edge.target);
    if (!include_unassigned &&
        (source == kUnassignedNode || target == kUnassignedNode)) {
      continue;
    }
    // a file pair counts once, whatever the directive multiplicity
    ++graph.edges[{source, target}];
  }
  graph.nodes.assign(nodes.begin(), nodes.end());
  return graph;
}

std::map<int, int> in_degree(const SubsystemGraph& graph) {
  std::map<int, int> degrees;
  for (int node : graph.nodes) degrees[node] = 0;
  for (const auto& [key, _] : graph.edges) {
    if (key.first != key.second) ++degrees[key.second];
  }
  return degrees;
}

std::map<int, int> out_degree(const SubsystemGraph& graph) {
  std::map<int, int> degrees;
  for (int node : graph.nodes) degrees[node] = 0;
  for (const auto& [key, _] : graph.edges) {
    if (key.first != key.second) ++degrees[key.first];
  }
  return degrees;
}

std::map<int, double> betweenness(const SubsystemGraph& graph,
                                  bool normalize) {
  const int n = static_cast<int>(graph.nodes.size());
  std::unordered_map<int, int> index;
  for (int i = 0; i < n; ++i) index[graph.nodes[i]] = i;

  std::vector<std::vector<int>> adjacency(n);
  for (const auto& [key, _] : graph.edges) {
    if (key.first == key.second) continue;  // self-loops never lie on paths
    adjacency[index[key.first]].push_back(index[key.second]);
  }
  for (auto& neighbours : adjacency) {
    std::sort(neighbours.begin(), neighbours.end());
  }

  std::vector<double> centrality(n, 0.0);
  for (int s = 0; s < n; ++s) {
    // BFS from s, recording path counts and predecessors
    std::vector<int> distance(n, -1);
    std::vector<double> sigma(n, 0.0);
    std::vector<std::vector<int>> predecessors(n);
    std::vector<int> order;
    order.reserve(n);
    distance[s] = 0;
    sigma[s] = 1.0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      order.push_back(v);
      for (int w : adjacency[v]) {
        if (distance[w] < 0) {
          distance[w] = distance[v] + 1;
          queue.push(w);
        }
        if (distance[w] == distance[v] + 1) {
          sigma[w] += sigma[v];
          predecessors[w].push_back(v);
        }
      }
    }
    // dependency accumulation in reverse BFS order
    std::vector<double> delta(n, 0.0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int w = *it;
      for (int v : predecessors[w]) {
        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) centrality[w] += delta[w];
    }
  }

  if (normalize && n > 2) {
    double scale = 1.0 / (static_cast<double>(n - 1) * (n - 2));
    for (double& value : centrality) value *= scale;
  }

  std::map<int, double> result;
  for (int i = 0; i < n; ++i) result[graph.nodes[i]] = centrality[i];
  return result;
}

MetricsReport compute_metrics(const SubsystemGraph& graph, bool normalize) {
  return {graph.engine, in_degree(graph), out_degree(graph),
          betweenness(graph, normalize)};
}

std::vector<std::pair<int, double>> average_metric(
    const std::vector<MetricsReport>& reports, Metric metric,
    AveragingMode mode) {
  if (reports.empty()) {
    throw ConfigError("cannot average metrics over zero engines");
  }
  std::array<double, kSubsystemCount> sum{};
  std::array<int, kSubsystemCount> present{};
  for (const auto& report : reports) {
    auto add = [&](int node, double value) {
      if (node >= static_cast<int>(kSubsystemCount)) return;
      sum[node] += value;
      ++present[node];
    };
    switch (metric) {
      case Metric::InDegree:
        for (const auto& [node, value] : report.in_degree) add(node, value);
        break;
      case Metric::Betweenness:
        for (const auto& [node, value] : report.betweenness) add(node, value);
        break;
    }
  }

  std::vector<std::pair<int, double>> averages;
  for (std::size_t code = 0; code < kSubsystemCount; ++code) {
    if (mode == AveragingMode::PresentOnly) {
      if (present[code] > 0) {
        averages.emplace_back(static_cast<int>(code), sum[code] / present[code]);
      }
    } else {
      averages.emplace_back(static_cast<int>(code),
                            sum[code] / static_cast<double>(reports.size()));
    }
  }
  std::sort(averages.begin(), averages.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
  return averages;
}

}  // namespace engarch
