#ifndef ENGARCH_PIPELINE_HPP
#define ENGARCH_PIPELINE_HPP

#include <string>
#include <vector>

#include "engarch/config.hpp"
#include "engarch/graph_metrics.hpp"
#include "engarch/resolver.hpp"
#include "engarch/scanner.hpp"
#include "engarch/subsystems.hpp"

namespace engarch {

// Scan + extraction + two-pass resolution for one repository.
struct EngineScan {
  RepoSpec spec;                    // root normalised to an absolute path
  std::vector<std::string> files;   // sorted
  std::vector<RawInclude> includes;
  std::vector<MacroInclude> macro_includes;
  std::vector<FileDiagnostic> diagnostics;  // unreadable files etc.
  ResolveReport resolution;
  FileGraph graph;
};

// `jobs` parallelises per-file extraction; output is independent of it.
EngineScan scan_engine(const RepoSpec& spec, bool strict_resolve, int jobs);

// Scan plus mapping, tagging, subsystem graph and metrics.
struct EngineModel {
  EngineScan scan;
  SubsystemMapping mapping;
  std::vector<TaggedFile> tagged;  // one entry per file-graph node
  CoverageReport coverage;
  SubsystemGraph subsystem_graph;
  MetricsReport metrics;
};

EngineModel analyse_engine(const RepoSpec& spec, const CorpusOptions& options,
                           int jobs);

}  // namespace engarch

#endif
