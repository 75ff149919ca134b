#include "engarch/config.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "engarch/errors.hpp"
#include "engarch/path_util.hpp"

namespace fs = std::filesystem;

namespace engarch {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::string current;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

bool parse_bool(const std::string& value, const std::string& where) {
  if (value == "on" || value == "true" || value == "1") return true;
  if (value == "off" || value == "false" || value == "0") return false;
  throw ConfigError(where + ": expected on/off, got '" + value + "'");
}

int parse_int(const std::string& value, const std::string& where) {
  try {
    std::size_t used = 0;
    int parsed = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    throw ConfigError(where + ": expected an integer, got '" + value + "'");
  }
}

std::string resolve_path(const std::string& base_dir, const std::string& p) {
  fs::path path(p);
  if (path.is_absolute()) return path.lexically_normal().generic_string();
  return (fs::path(base_dir) / path).lexically_normal().generic_string();
}

}  // namespace

CorpusConfig parse_corpus_config(std::string_view text,
                                 const std::string& base_dir,
                                 const std::string& origin) {
  CorpusConfig config;
  RepoSpec* current = nullptr;
  std::set<std::string> names;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string line = trim(raw);
    auto hash = line.find('#');
    if (hash != std::string::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;
    std::string where = origin + ":" + std::to_string(line_no);

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + ": unclosed section");
      auto words = split_words(line.substr(1, line.size() - 2));
      if (words.size() != 2 || words[0] != "repo") {
        throw ConfigError(where + ": expected '[repo <name>]'");
      }
      if (!names.insert(words[1]).second) {
        throw ConfigError(where + ": duplicate repository name '" + words[1] +
                          "'");
      }
      config.repos.emplace_back();
      current = &config.repos.back();
      current->name = words[1];
      continue;
    }

    auto words = split_words(line);
    const std::string& key = words.front();
    std::vector<std::string> values(words.begin() + 1, words.end());
    auto single = [&]() -> const std::string& {
      if (values.size() != 1) {
        throw ConfigError(where + ": key '" + key +
                          "' takes exactly one value");
      }
      return values.front();
    };

    if (current == nullptr) {
      if (key == "output_dir") {
        config.options.output_dir = resolve_path(base_dir, single());
      } else if (key == "pair_threshold") {
        config.options.pair_threshold = parse_int(single(), where);
      } else if (key == "inner_core_size") {
        config.options.inner_core_size = parse_int(single(), where);
      } else if (key == "averaging") {
        const std::string& v = single();
        if (v == "present_only") {
          config.options.averaging = AveragingMode::PresentOnly;
        } else if (v == "zero_fill") {
          config.options.averaging = AveragingMode::ZeroFill;
        } else {
          throw ConfigError(where + ": averaging must be present_only or "
                                    "zero_fill");
        }
      } else if (key == "strict_resolve") {
        config.options.strict_resolve = parse_bool(single(), where);
      } else if (key == "normalize_centrality") {
        config.options.normalize_centrality = parse_bool(single(), where);
      } else if (key == "include_unassigned") {
        config.options.include_unassigned = parse_bool(single(), where);
      } else if (key == "jobs") {
        config.options.jobs = parse_int(single(), where);
      } else {
        throw ConfigError(where + ": unknown key '" + key + "'");
      }
    } else {
      if (key == "root") {
        current->root = resolve_path(base_dir, single());
      } else if (key == "mapping") {
        current->mapping_file = resolve_path(base_dir, single());
      } else if (key == "extensions") {
        if (values.empty()) {
          throw ConfigError(where + ": extensions needs at least one value");
        }
        for (const auto& ext : values) {
          if (ext.empty() || ext.front() != '.') {
            throw ConfigError(where + ": extensions must start with '.'");
          }
        }
        current->extensions = values;
      } else if (key == "exclude_dirs") {
        current->exclude_dirs = values;
      } else if (key == "include_dirs") {
        current->include_dirs.clear();
        for (const auto& dir : values) {
          current->include_dirs.push_back(dir);  // resolved against the root
        }
      } else {
        throw ConfigError(where + ": unknown repository key '" + key + "'");
      }
    }
  }

  if (config.options.pair_threshold < 1) {
    throw ConfigError(origin + ": pair_threshold must be at least 1");
  }
  if (config.options.inner_core_size < 1) {
    throw ConfigError(origin + ": inner_core_size must be at least 1");
  }
  if (config.options.jobs < 1) {
    throw ConfigError(origin + ": jobs must be at least 1");
  }
  for (auto& repo : config.repos) {
    if (repo.root.empty()) {
      throw ConfigError(origin + ": repository '" + repo.name +
                        "' has no root");
    }
    // repo-relative include dirs become absolute now that the root is known
    for (auto& dir : repo.include_dirs) {
      if (!fs::path(dir).is_absolute()) dir = resolve_path(repo.root, dir);
    }
  }
  return config;
}

CorpusConfig load_corpus_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open corpus config: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string base_dir =
      fs::absolute(fs::path(path)).parent_path().lexically_normal()
          .generic_string();
  return parse_corpus_config(buf.str(), base_dir, path);
}

const RepoSpec* find_repo(const CorpusConfig& config, std::string_view name) {
  auto it = std::find_if(config.repos.begin(), config.repos.end(),
                         [&](const RepoSpec& r) { return r.name == name; });
  return it == config.repos.end() ? nullptr : &*it;
}

}  // namespace engarch
