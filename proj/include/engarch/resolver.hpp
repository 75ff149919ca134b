#ifndef ENGARCH_RESOLVER_HPP
#define ENGARCH_RESOLVER_HPP

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "engarch/scanner.hpp"

namespace engarch {

enum class ResolvePass { First, Second };

struct IncludeEdge {
  std::string source;  // absolute, inside the repo
  std::string target;  // absolute, inside the repo
  ResolvePass pass = ResolvePass::First;
};

enum class UnresolvedReason { NotFound, AmbiguousAfterSecondPass, Macro };

struct UnresolvedInclude {
  std::string including_file;
  std::string directive_text;
  UnresolvedReason reason = UnresolvedReason::NotFound;
};

std::string_view unresolved_reason_label(UnresolvedReason reason);

using ResolveOutcome = std::variant<IncludeEdge, UnresolvedInclude>;

// Basename -> sorted absolute paths, built once over the scan result.
class FileIndex {
 public:
  static FileIndex build(const std::vector<std::string>& files);
  // nullptr when no scanned file has this basename
  const std::vector<std::string>* lookup(std::string_view basename) const;

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> by_basename_;
};

struct ResolverOptions {
  std::string repo_root;                  // absolute, normalised
  std::vector<std::string> include_dirs;  // searched in order; root first
  bool strict_ambiguity = false;          // leave multi-matches unresolved
};

// Joins the directive against the including file's directory, then each
// include directory in order; the first existing regular file inside the
// repo root wins.
ResolveOutcome resolve_first_pass(const RawInclude& raw,
                                  const ResolverOptions& options);

// Trailing-component search over the file index: candidates sharing the
// directive's basename are narrowed one parent component at a time until a
// single match remains. With several survivors and no components left, the
// default mode picks the lexicographically smallest path (the survivors are
// reported via `candidates_out`); strict mode reports the directive as
// AmbiguousAfterSecondPass instead.
ResolveOutcome resolve_second_pass(const UnresolvedInclude& unresolved,
                                   const FileIndex& index,
                                   const ResolverOptions& options,
                                   std::vector<std::string>* candidates_out =
                                       nullptr);

enum class ResolutionKind {
  FirstPass,
  SecondPass,
  SecondPassAmbiguous,  // default-mode pick among several candidates
  NotFound,
  Ambiguous,  // strict mode: left unresolved
  Macro,
};

// Per-directive record, the unit the ground-truth manifest is checked
// against.
struct Resolution {
  std::string including_file;
  std::string directive_text;
  int line = 1;
  ResolutionKind kind = ResolutionKind::NotFound;
  std::string target;                   // resolved kinds only
  std::vector<std::string> candidates;  // ambiguous kinds only
};

struct ResolveReport {
  std::vector<Resolution> resolutions;  // ordered by (file, line)
  std::vector<IncludeEdge> edges;
  std::vector<UnresolvedInclude> unresolved;
  int first_pass = 0;
  int second_pass = 0;
  int ambiguous = 0;
  int not_found = 0;
  int macro = 0;
};

ResolveReport resolve_all(const std::vector<RawInclude>& raws,
                          const std::vector<MacroInclude>& macros,
                          const FileIndex& index,
                          const ResolverOptions& options);

// File-level include graph: nodes are all scanned files plus every resolved
// target; duplicate (source, target) pairs collapse into one edge with a
// multiplicity count. Iteration order is lexicographic.
struct FileGraph {
  struct Edge {
    std::string source;
    std::string target;
    int multiplicity = 1;
  };
  std::vector<std::string> nodes;  // sorted, unique
  std::vector<Edge> edges;         // sorted by (source, target), unique
};

FileGraph build_include_graph(const std::vector<IncludeEdge>& edges,
                              const std::vector<std::string>& all_files);

}  // namespace engarch

#endif
