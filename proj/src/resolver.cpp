#include "engarch/resolver.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>

#include "engarch/path_util.hpp"

namespace fs = std::filesystem;

namespace engarch {

std::string_view unresolved_reason_label(UnresolvedReason reason) {
  switch (reason) {
    case UnresolvedReason::NotFound:
      return "NOT_FOUND";
    case UnresolvedReason::AmbiguousAfterSecondPass:
      return "AMBIGUOUS_AFTER_SECOND_PASS";
    case UnresolvedReason::Macro:
      return "MACRO";
  }
  return "NOT_FOUND";
}

FileIndex FileIndex::build(const std::vector<std::string>& files) {
  FileIndex index;
  for (const auto& file : files) {
    index.by_basename_[std::string(path_basename(file))].push_back(file);
  }
  for (auto& [_, paths] : index.by_basename_) {
    std::sort(paths.begin(), paths.end());
  }
  return index;
}

const std::vector<std::string>* FileIndex::lookup(
    std::string_view basename) const {
  auto it = by_basename_.find(basename);
  return it == by_basename_.end() ? nullptr : &it->second;
}

ResolveOutcome resolve_first_pass(const RawInclude& raw,
                                  const ResolverOptions& options) {
  std::string including_dir = parent_dir(raw.including_file);
  for (std::size_t i = 0; i <= options.include_dirs.size(); ++i) {
    const std::string& dir =
        i == 0 ? including_dir : options.include_dirs[i - 1];
    std::string candidate = join_normalized(dir, raw.directive_text);
    if (!path_within(options.repo_root, candidate)) continue;
    std::error_code ec;
    if (fs::is_regular_file(candidate, ec) && !ec) {
      return IncludeEdge{raw.including_file, candidate, ResolvePass::First};
    }
  }
  return UnresolvedInclude{raw.including_file, raw.directive_text,
                           UnresolvedReason::NotFound};
}

namespace {

// Trailing components usable for suffix matching: the run of real names
// after the last '.' or '..' segment ("../gfx/dev.h" -> ["gfx", "dev.h"]).
std::vector<std::string> usable_trailing_components(
    std::string_view directive) {
  auto comps = split_components(directive, /*split_backslash=*/true);
  std::size_t first = comps.size();
  while (first > 0 && comps[first - 1] != "." && comps[first - 1] != "..") {
    --first;
  }
  return {comps.begin() + static_cast<std::ptrdiff_t>(first), comps.end()};
}

}  // namespace

ResolveOutcome resolve_second_pass(const UnresolvedInclude& unresolved,
                                   const FileIndex& index,
                                   const ResolverOptions& options,
                                   std::vector<std::string>* candidates_out) {
  auto not_found = [&] {
    return UnresolvedInclude{unresolved.including_file,
                             unresolved.directive_text,
                             UnresolvedReason::NotFound};
  };
  auto components = usable_trailing_components(unresolved.directive_text);
  if (components.empty()) return not_found();
  const auto* bucket = index.lookup(components.back());
  if (bucket == nullptr || bucket->empty()) return not_found();

  std::vector<std::string> candidates = *bucket;  // already sorted
  std::size_t matched = 1;
  while (candidates.size() >= 2 && matched < components.size()) {
    ++matched;
    std::vector<std::string> kept;
    for (const auto& candidate : candidates) {
      if (ends_with_components(candidate, components, matched)) {
        kept.push_back(candidate);
      }
    }
    candidates.swap(kept);
    if (candidates.empty()) return not_found();
  }
  if (candidates.size() == 1) {
    return IncludeEdge{unresolved.including_file, candidates.front(),
                       ResolvePass::Second};
  }
  // several equally good matches and nothing left to discriminate on
  if (candidates_out != nullptr) *candidates_out = candidates;
  if (options.strict_ambiguity) {
    return UnresolvedInclude{unresolved.including_file,
                             unresolved.directive_text,
                             UnresolvedReason::AmbiguousAfterSecondPass};
  }
  return IncludeEdge{unresolved.including_file, candidates.front(),
                     ResolvePass::Second};
}

ResolveReport resolve_all(const std::vector<RawInclude>& raws,
                          const std::vector<MacroInclude>& macros,
                          const FileIndex& index,
                          const ResolverOptions& options) {
  ResolveReport report;
  report.resolutions.reserve(raws.size() + macros.size());

  for (const auto& raw : raws) {
    Resolution record;
    record.including_file = raw.including_file;
    record.directive_text = raw.directive_text;
    record.line = raw.line;

    ResolveOutcome outcome = resolve_first_pass(raw, options);
    if (std::holds_alternative<IncludeEdge>(outcome)) {
      record.kind = ResolutionKind::FirstPass;
      record.target = std::get<IncludeEdge>(outcome).target;
    } else {
      std::vector<std::string> candidates;
      outcome = resolve_second_pass(std::get<UnresolvedInclude>(outcome),
                                    index, options, &candidates);
      if (std::holds_alternative<IncludeEdge>(outcome)) {
        record.kind = candidates.size() >= 2
                          ? ResolutionKind::SecondPassAmbiguous
                          : ResolutionKind::SecondPass;
        record.target = std::get<IncludeEdge>(outcome).target;
        record.candidates = std::move(candidates);
      } else {
        const auto& u = std::get<UnresolvedInclude>(outcome);
        record.kind = u.reason == UnresolvedReason::AmbiguousAfterSecondPass
                          ? ResolutionKind::Ambiguous
                          : ResolutionKind::NotFound;
        record.candidates = std::move(candidates);
      }
    }

    if (std::holds_alternative<IncludeEdge>(outcome)) {
      report.edges.push_back(std::get<IncludeEdge>(outcome));
    } else {
      report.unresolved.push_back(std::get<UnresolvedInclude>(outcome));
    }
    report.resolutions.push_back(std::move(record));
  }

  for (const auto& macro : macros) {
    Resolution record;
    record.including_file = macro.including_file;
    record.directive_text = macro.token;
    record.line = macro.line;
    record.kind = ResolutionKind::Macro;
    report.unresolved.push_back(
        {macro.including_file, macro.token, UnresolvedReason::Macro});
    report.resolutions.push_back(std::move(record));
  }

  std::stable_sort(report.resolutions.begin(), report.resolutions.end(),
                   [](const Resolution& a, const Resolution& b) {
                     if (a.including_file != b.including_file) {
                       return a.including_file < b.including_file;
                     }
                     return a.line < b.line;
                   });

  for (const auto& record : report.resolutions) {
    switch (record.kind) {
      case ResolutionKind::FirstPass: ++report.first_pass; break;
      case ResolutionKind::SecondPass: ++report.second_pass; break;
      case ResolutionKind::SecondPassAmbiguous: ++report.ambiguous; break;
      case ResolutionKind::NotFound: ++report.not_found; break;
      case ResolutionKind::Ambiguous: ++report.ambiguous; break;
      case ResolutionKind::Macro: ++report.macro; break;
    }
  }
  return report;
}

FileGraph build_include_graph(const std::vector<IncludeEdge>& edges,
                              const std::vector<std::string>& all_files) {
  std::set<std::string> nodes(all_files.begin(), all_files.end());
  std::map<std::pair<std::string, std::string>, int> collapsed;
  for (const auto& edge : edges) {
    nodes.insert(edge.source);
    nodes.insert(edge.target);
    ++collapsed[{edge.source, edge.target}];
  }
  FileGraph graph;
  graph.nodes.assign(nodes.begin(), nodes.end());
  graph.edges.reserve(collapsed.size());
  for (const auto& [key, count] : collapsed) {
    graph.edges.push_back({key.first, key.second, count});
  }
  return graph;
}

}  // namespace engarch
