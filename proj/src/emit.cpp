#include "engarch/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "engarch/errors.hpp"

namespace engarch {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

struct NodePosition {
  double x = 0.0;
  double y = 0.0;
};

}  // namespace

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string dot_quote(std::string_view id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

std::string render_file_graph_dot(const FileGraph& graph) {
  std::string out = "digraph G {\n";
  for (const auto& edge : graph.edges) {
    out += dot_quote(edge.source);
    out += " -> ";
    out += dot_quote(edge.target);
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string render_subsystem_graph_dot(const SubsystemGraph& graph) {
  std::string out = "digraph G {\n";
  for (int node : graph.nodes) {
    out += dot_quote(node_label(node));
    out += ";\n";
  }
  for (const auto& [key, weight] : graph.edges) {
    out += dot_quote(node_label(key.first));
    out += " -> ";
    out += dot_quote(node_label(key.second));
    out += " [label=\"" + std::to_string(weight) + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string render_unresolved_csv(std::vector<UnresolvedInclude> unresolved) {
  std::vector<std::string> rows;
  rows.reserve(unresolved.size());
  for (const auto& u : unresolved) {
    rows.push_back(csv_escape(u.including_file) + "," +
                   csv_escape(u.directive_text) + "," +
                   std::string(unresolved_reason_label(u.reason)));
  }
  std::sort(rows.begin(), rows.end());
  std::string out = "including_file,directive,reason\n";
  for (const auto& row : rows) {
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_metrics_csv(const SubsystemGraph& graph,
                               const MetricsReport& metrics) {
  auto value_or_zero = [](const auto& map, int node) {
    auto it = map.find(node);
    return it == map.end() ? typename std::decay_t<decltype(map)>::mapped_type{}
                           : it->second;
  };
  std::string out = "subsystem,in_degree,out_degree,betweenness\n";
  for (int node : graph.nodes) {
    out += node_label(node);
    out += ',' + std::to_string(value_or_zero(metrics.in_degree, node));
    out += ',' + std::to_string(value_or_zero(metrics.out_degree, node));
    out += ',' + format_double(value_or_zero(metrics.betweenness, node));
    out += '\n';
  }
  return out;
}

std::string render_heatmap_csv(const CouplingMatrix& matrix) {
  std::string out;
  for (Subsystem code : all_subsystems()) {
    out += ',';
    out += code_of(code);
  }
  out += '\n';
  for (std::size_t row = 0; row < kSubsystemCount; ++row) {
    out += code_of(static_cast<Subsystem>(row));
    for (std::size_t col = 0; col < kSubsystemCount; ++col) {
      out += ',' + std::to_string(matrix.counts[row][col]);
    }
    out += '\n';
  }
  return out;
}

std::string render_pairs_csv(const std::vector<FrequentPair>& pairs) {
  std::string out = "source,target,count,centrality_sum\n";
  for (const auto& pair : pairs) {
    out += code_of(pair.source);
    out += ',';
    out += code_of(pair.target);
    out += ',' + std::to_string(pair.count);
    out += ',' + format_double(pair.centrality_sum);
    out += '\n';
  }
  return out;
}

std::string render_architecture_text(const EmergentArchitecture& arch) {
  auto tier_line = [](std::string_view label,
                      const std::vector<Subsystem>& codes) {
    std::string line(label);
    line += ": ";
    if (codes.empty()) {
      line += "(none)";
    } else {
      for (std::size_t i = 0; i < codes.size(); ++i) {
        if (i > 0) line += ", ";
        line += code_of(codes[i]);
      }
    }
    line += '\n';
    return line;
  };
  std::string out;
  out += tier_line("inner core", arch.inner_core);
  out += tier_line("outer core", arch.outer_core);
  out += tier_line("periphery", arch.periphery);
  out += "edges:\n";
  if (arch.edges.empty()) {
    out += "(none)\n";
  }
  for (const auto& edge : arch.edges) {
    out += std::string(code_of(edge.source)) + " -> " +
           std::string(code_of(edge.target)) +
           " (count=" + std::to_string(edge.count) +
           ", centrality_sum=" + format_double(edge.centrality_sum) + ")\n";
  }
  return out;
}

std::string render_heatmap_svg(const CouplingMatrix& matrix) {
  constexpr int kCell = 30;
  constexpr int kLeft = 48;
  constexpr int kTop = 36;
  constexpr int kPad = 8;
  constexpr int kWidth = kLeft + kCell * static_cast<int>(kSubsystemCount) + kPad;
  constexpr int kHeight = kTop + kCell * static_cast<int>(kSubsystemCount) + kPad;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(kWidth) + "\" height=\"" + std::to_string(kHeight) +
         "\" viewBox=\"0 0 " + std::to_string(kWidth) + " " +
         std::to_string(kHeight) + "\">\n";
  out += "<g font-family=\"monospace\" font-size=\"10\">\n";

  for (std::size_t col = 0; col < kSubsystemCount; ++col) {
    int x = kLeft + static_cast<int>(col) * kCell + kCell / 2;
    out += "<text x=\"" + std::to_string(x) + "\" y=\"" +
           std::to_string(kTop - 8) + "\" text-anchor=\"middle\">" +
           std::string(code_of(static_cast<Subsystem>(col))) + "</text>\n";
  }
  for (std::size_t row = 0; row < kSubsystemCount; ++row) {
    int y = kTop + static_cast<int>(row) * kCell + kCell / 2 + 4;
    out += "<text x=\"" + std::to_string(kLeft - 6) + "\" y=\"" +
           std::to_string(y) + "\" text-anchor=\"end\">" +
           std::string(code_of(static_cast<Subsystem>(row))) + "</text>\n";
  }

  for (std::size_t row = 0; row < kSubsystemCount; ++row) {
    for (std::size_t col = 0; col < kSubsystemCount; ++col) {
      int count = matrix.counts[row][col];
      double t = matrix.n_engines > 0
                     ? static_cast<double>(count) / matrix.n_engines
                     : 0.0;
      // white -> dark red ramp
      int r = static_cast<int>(std::lround(255.0 + (139.0 - 255.0) * t));
      int g = static_cast<int>(std::lround(255.0 * (1.0 - t)));
      int b = g;
      int x = kLeft + static_cast<int>(col) * kCell;
      int y = kTop + static_cast<int>(row) * kCell;
      out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
             "\" width=\"" + std::to_string(kCell) + "\" height=\"" +
             std::to_string(kCell) + "\" fill=\"rgb(" + std::to_string(r) +
             "," + std::to_string(g) + "," + std::to_string(b) +
             ")\" stroke=\"#999999\"/>\n";
      out += "<text x=\"" + std::to_string(x + kCell / 2) + "\" y=\"" +
             std::to_string(y + kCell / 2 + 4) +
             "\" text-anchor=\"middle\" fill=\"" +
             (t < 0.5 ? "#000000" : "#ffffff") + "\">" +
             std::to_string(count) + "</text>\n";
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string render_architecture_svg(const EmergentArchitecture& arch) {
  constexpr int kSize = 640;
  constexpr double kCentre = kSize / 2.0;
  constexpr double kNodeRadius = 18.0;
  constexpr double kInnerRing = 62.0;
  constexpr double kOuterRing = 160.0;
  constexpr double kPeripheryRing = 258.0;

  auto place = [&](const std::vector<Subsystem>& codes, double radius,
                   std::map<Subsystem, NodePosition>& positions) {
    const std::size_t n = codes.size();
    for (std::size_t i = 0; i < n; ++i) {
      double angle = -kPi / 2.0 + 2.0 * kPi * static_cast<double>(i) /
                                      static_cast<double>(n == 0 ? 1 : n);
      positions[codes[i]] = {kCentre + radius * std::cos(angle),
                             kCentre + radius * std::sin(angle)};
    }
  };

  std::map<Subsystem, NodePosition> positions;
  place(arch.inner_core, kInnerRing, positions);
  place(arch.outer_core, kOuterRing, positions);
  place(arch.periphery, kPeripheryRing, positions);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(kSize) + "\" height=\"" + std::to_string(kSize) +
         "\" viewBox=\"0 0 " + std::to_string(kSize) + " " +
         std::to_string(kSize) + "\">\n";
  out += "<defs>\n<marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" "
         "refX=\"7\" refY=\"3\" orient=\"auto\">\n"
         "<path d=\"M0,0 L7,3 L0,6 z\" fill=\"#333333\"/>\n"
         "</marker>\n</defs>\n";

  // concentric zones: periphery (white), outer core, inner core
  out += "<circle cx=\"320\" cy=\"320\" r=\"300\" fill=\"#ffffff\" "
         "stroke=\"#555555\"/>\n";
  out += "<circle cx=\"320\" cy=\"320\" r=\"208\" fill=\"#f5cfcf\" "
         "stroke=\"#555555\"/>\n";
  out += "<circle cx=\"320\" cy=\"320\" r=\"108\" fill=\"#e39a9a\" "
         "stroke=\"#555555\"/>\n";

  for (const auto& edge : arch.edges) {
    auto from = positions.find(edge.source);
    auto to = positions.find(edge.target);
    if (from == positions.end() || to == positions.end()) continue;
    double dx = to->second.x - from->second.x;
    double dy = to->second.y - from->second.y;
    double length = std::sqrt(dx * dx + dy * dy);
    if (length < 1e-9) continue;
    double ux = dx / length;
    double uy = dy / length;
    double x1 = from->second.x + ux * kNodeRadius;
    double y1 = from->second.y + uy * kNodeRadius;
    double x2 = to->second.x - ux * (kNodeRadius + 7.0);
    double y2 = to->second.y - uy * (kNodeRadius + 7.0);
    out += "<line x1=\"" + format_fixed(x1, 1) + "\" y1=\"" +
           format_fixed(y1, 1) + "\" x2=\"" + format_fixed(x2, 1) +
           "\" y2=\"" + format_fixed(y2, 1) +
           "\" stroke=\"#333333\" stroke-width=\"1.2\" "
           "marker-end=\"url(#arrow)\"/>\n";
  }

  out += "<g font-family=\"monospace\" font-size=\"11\" "
         "text-anchor=\"middle\">\n";
  auto draw_nodes = [&](const std::vector<Subsystem>& codes) {
    for (Subsystem code : codes) {
      const NodePosition& p = positions[code];
      out += "<circle cx=\"" + format_fixed(p.x, 1) + "\" cy=\"" +
             format_fixed(p.y, 1) + "\" r=\"" +
             format_fixed(kNodeRadius, 1) +
             "\" fill=\"#ffffff\" stroke=\"#222222\"/>\n";
      out += "<text x=\"" + format_fixed(p.x, 1) + "\" y=\"" +
             format_fixed(p.y + 4.0, 1) + "\">" + std::string(code_of(code)) +
             "</text>\n";
    }
  };
  draw_nodes(arch.inner_core);
  draw_nodes(arch.outer_core);
  draw_nodes(arch.periphery);
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace engarch
