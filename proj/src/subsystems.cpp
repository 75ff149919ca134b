#include "engarch/subsystems.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "engarch/errors.hpp"
#include "engarch/path_util.hpp"

namespace engarch {

namespace {

struct SubsystemInfo {
  Subsystem code;
  std::string_view id;
  std::string_view display;
};

constexpr std::array<SubsystemInfo, kSubsystemCount> kTable = {{
    {Subsystem::AUD, "AUD", "Audio"},
    {Subsystem::COR, "COR", "Core"},
    {Subsystem::DEB, "DEB", "Profiling and Debugging"},
    {Subsystem::FES, "FES", "Front End"},
    {Subsystem::GMP, "GMP", "Gameplay Foundations"},
    {Subsystem::HID, "HID", "Human Interface Devices"},
    {Subsystem::LLR, "LLR", "Low-Level Renderer"},
    {Subsystem::OMP, "OMP", "Online Multiplayer"},
    {Subsystem::PHY, "PHY", "Collision and Physics"},
    {Subsystem::PLA, "PLA", "Platform Independence Layer"},
    {Subsystem::RES, "RES", "Resources"},
    {Subsystem::SDK, "SDK", "Third-party SDKs"},
    {Subsystem::SGC, "SGC", "Scene graph/culling optimizations"},
    {Subsystem::SKA, "SKA", "Skeletal Animation"},
    {Subsystem::VFX, "VFX", "Visual Effects"},
    {Subsystem::EDI, "EDI", "World Editor"},
}};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (std::isspace(static_cast<unsigned char>(s[b])) != 0)) ++b;
  while (e > b && (std::isspace(static_cast<unsigned char>(s[e - 1])) != 0)) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

// folder,subsystem with '/' separators and no trailing slash
std::string normalize_folder(std::string_view raw) {
  std::string f = trim(raw);
  std::replace(f.begin(), f.end(), '\\', '/');
  while (!f.empty() && f.front() == '/') f.erase(f.begin());
  if (f.rfind("./", 0) == 0) f.erase(0, 2);
  while (!f.empty() && f.back() == '/') f.pop_back();
  return f;
}

}  // namespace

const std::array<Subsystem, kSubsystemCount>& all_subsystems() {
  static const std::array<Subsystem, kSubsystemCount> order = [] {
    std::array<Subsystem, kSubsystemCount> a{};
    for (std::size_t i = 0; i < kSubsystemCount; ++i) a[i] = kTable[i].code;
    return a;
  }();
  return order;
}

std::string_view code_of(Subsystem s) { return kTable[index_of(s)].id; }

std::string_view display_name_of(Subsystem s) {
  return kTable[index_of(s)].display;
}

std::optional<Subsystem> subsystem_from_code(std::string_view code) {
  for (const auto& info : kTable) {
    if (info.id == code) return info.code;
  }
  return std::nullopt;
}

SubsystemMapping parse_mapping(std::string_view text,
                               const std::string& origin) {
  SubsystemMapping mapping;
  std::map<std::string, int> seen_folders;  // folder -> line number
  bool header_seen = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "folder,subsystem") {
        throw ConfigError(origin + ":" + std::to_string(line_no) +
                          ": expected header 'folder,subsystem'");
      }
      header_seen = true;
      continue;
    }
    auto comma = line.rfind(',');
    if (comma == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(line_no) +
                        ": expected 'folder,subsystem' row");
    }
    std::string folder = normalize_folder(line.substr(0, comma));
    std::string code_str = trim(line.substr(comma + 1));
    if (folder.empty()) {
      throw ConfigError(origin + ":" + std::to_string(line_no) +
                        ": empty folder path");
    }
    auto code = subsystem_from_code(code_str);
    if (!code) {
      throw ConfigError(origin + ":" + std::to_string(line_no) +
                        ": unknown subsystem code '" + code_str + "'");
    }
    auto [it, inserted] = seen_folders.emplace(folder, line_no);
    if (!inserted) {
      throw ConfigError(origin + ":" + std::to_string(line_no) +
                        ": duplicate folder '" + folder + "' (first at line " +
                        std::to_string(it->second) + ")");
    }
    mapping.entries.push_back({std::move(folder), *code});
  }
  if (!header_seen) {
    throw ConfigError(origin + ": missing 'folder,subsystem' header");
  }
  return mapping;
}

SubsystemMapping load_mapping(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open mapping file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mapping(buf.str(), path);
}

std::optional<Subsystem> assign_subsystem(std::string_view abs_path,
                                          std::string_view repo_root,
                                          const SubsystemMapping& mapping) {
  if (!path_within(repo_root, abs_path)) return std::nullopt;
  std::string rel = relative_to(repo_root, abs_path);
  std::optional<Subsystem> best;
  std::size_t best_len = 0;
  for (const auto& entry : mapping.entries) {
    const std::string& prefix = entry.folder_prefix;
    bool matches = rel == prefix ||
                   (rel.size() > prefix.size() &&
                    rel.compare(0, prefix.size(), prefix) == 0 &&
                    rel[prefix.size()] == '/');
    if (matches && (!best || prefix.size() > best_len)) {
      best = entry.code;
      best_len = prefix.size();
    }
  }
  return best;
}

CoverageReport mapping_coverage(const std::vector<TaggedFile>& tagged) {
  CoverageReport report;
  report.total = static_cast<int>(tagged.size());
  for (const auto& file : tagged) {
    if (file.code) {
      ++report.per_code[index_of(*file.code)];
    } else {
      ++report.unassigned;
    }
  }
  if (report.total > 0) {
    report.coverage_percent =
        100.0 * (report.total - report.unassigned) / report.total;
  }
  return report;
}

std::vector<MappingEntry> suggest_mapping(const std::vector<std::string>& files,
                                          std::string_view repo_root) {
  // Collect every repo-relative directory that holds or leads to a file.
  std::set<std::string> dirs;
  for (const auto& file : files) {
    if (!path_within(repo_root, file)) continue;
    std::string rel = relative_to(repo_root, file);
    auto comps = split_components(rel);
    std::string prefix;
    for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
      if (!prefix.empty()) prefix += '/';
      prefix += comps[i];
      dirs.insert(prefix);
    }
  }
  std::vector<MappingEntry> suggestions;
  for (const auto& dir : dirs) {
    std::string name = lower(std::string(path_basename(dir)));
    if (name.size() < 3) continue;
    for (Subsystem s : all_subsystems()) {
      std::string display = lower(display_name_of(s));
      if (display.find(name) != std::string::npos ||
          name.find(display) != std::string::npos) {
        suggestions.push_back({dir, s});
      }
    }
  }
  return suggestions;
}

}  // namespace engarch
