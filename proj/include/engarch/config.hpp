#ifndef ENGARCH_CONFIG_HPP
#define ENGARCH_CONFIG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "engarch/graph_metrics.hpp"
#include "engarch/scanner.hpp"

namespace engarch {

struct CorpusOptions {
  std::string output_dir = "out";
  int pair_threshold = 6;
  int inner_core_size = 4;
  AveragingMode averaging = AveragingMode::PresentOnly;
  bool strict_resolve = false;
  bool normalize_centrality = false;
  bool include_unassigned = false;
  int jobs = 1;
};

struct CorpusConfig {
  std::vector<RepoSpec> repos;
  CorpusOptions options;
};

// Line-oriented `key value` format with one `[repo <name>]` section per
// repository; `#` starts a comment. Relative paths are resolved against
// `base_dir`. Throws ConfigError with the offending line number.
CorpusConfig parse_corpus_config(std::string_view text,
                                 const std::string& base_dir,
                                 const std::string& origin);
CorpusConfig load_corpus_config(const std::string& path);

const RepoSpec* find_repo(const CorpusConfig& config, std::string_view name);

}  // namespace engarch

#endif
