#include "engarch/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "engarch/errors.hpp"
#include "engarch/parallel.hpp"
#include "engarch/path_util.hpp"

namespace engarch {

namespace {

bool read_file_bytes(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

}  // namespace

EngineScan scan_engine(const RepoSpec& spec, bool strict_resolve, int jobs) {
  EngineScan scan;
  scan.spec = spec;
  scan.spec.root = absolute_normalized(spec.root);
  scan.files = scan_repo(scan.spec);

  // extraction is pure per file; merge in sorted-path order
  std::vector<ExtractResult> extracted(scan.files.size());
  std::vector<std::string> read_errors(scan.files.size());
  parallel_for(scan.files.size(), jobs, [&](std::size_t i) {
    std::string content;
    if (read_file_bytes(scan.files[i], content)) {
      extracted[i] = extract_includes(scan.files[i], content);
    } else {
      read_errors[i] = "unreadable file, no includes extracted";
    }
  });
  for (std::size_t i = 0; i < scan.files.size(); ++i) {
    if (!read_errors[i].empty()) {
      scan.diagnostics.push_back({scan.files[i], read_errors[i]});
      continue;
    }
    auto& result = extracted[i];
    scan.includes.insert(scan.includes.end(), result.includes.begin(),
                         result.includes.end());
    scan.macro_includes.insert(scan.macro_includes.end(),
                               result.macro_includes.begin(),
                               result.macro_includes.end());
  }

  ResolverOptions options;
  options.repo_root = scan.spec.root;
  options.strict_ambiguity = strict_resolve;
  options.include_dirs.push_back(scan.spec.root);
  for (const auto& dir : scan.spec.include_dirs) {
    options.include_dirs.push_back(absolute_normalized(dir));
  }

  FileIndex index = FileIndex::build(scan.files);
  scan.resolution =
      resolve_all(scan.includes, scan.macro_includes, index, options);
  scan.graph = build_include_graph(scan.resolution.edges, scan.files);
  return scan;
}

EngineModel analyse_engine(const RepoSpec& spec, const CorpusOptions& options,
                           int jobs) {
  EngineModel model;
  model.scan = scan_engine(spec, options.strict_resolve, jobs);
  if (spec.mapping_file.empty()) {
    throw ConfigError("repository '" + spec.name + "' has no mapping file");
  }
  model.mapping = load_mapping(spec.mapping_file);

  const std::string& root = model.scan.spec.root;
  model.tagged.reserve(model.scan.graph.nodes.size());
  for (const auto& node : model.scan.graph.nodes) {
    model.tagged.push_back(
        {node, assign_subsystem(node, root, model.mapping)});
  }
  model.coverage = mapping_coverage(model.tagged);
  model.subsystem_graph =
      build_subsystem_graph(model.scan.graph, model.tagged, spec.name,
                            options.include_unassigned);
  model.metrics =
      compute_metrics(model.subsystem_graph, options.normalize_centrality);
  return model;
}

}  // namespace engarch
