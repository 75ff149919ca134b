#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "engarch/aggregate.hpp"
#include "engarch/config.hpp"
#include "engarch/emit.hpp"
#include "engarch/errors.hpp"
#include "engarch/parallel.hpp"
#include "engarch/path_util.hpp"
#include "engarch/pipeline.hpp"

namespace fs = std::filesystem;
using namespace engarch;

namespace {

std::string scan_summary(const EngineScan& scan) {
  const ResolveReport& r = scan.resolution;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%s: files=%zu includes=%zu edges=%zu first_pass=%d "
                "second_pass=%d ambiguous=%d unresolved=%zu",
                scan.spec.name.c_str(), scan.files.size(),
                r.resolutions.size(), scan.graph.edges.size(), r.first_pass,
                r.second_pass, r.ambiguous, r.unresolved.size());
  return buf;
}

std::string analyse_summary(const EngineModel& model) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%s: coverage=%.1f%% (%d/%d files) nodes=%zu edges=%zu",
                model.scan.spec.name.c_str(), model.coverage.coverage_percent,
                model.coverage.total - model.coverage.unassigned,
                model.coverage.total, model.subsystem_graph.nodes.size(),
                model.subsystem_graph.edges.size());
  return buf;
}

void ensure_output_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory: " + dir);
}

void write_scan_artifacts(const EngineScan& scan, const std::string& out_dir) {
  const std::string base = out_dir + "/" + scan.spec.name;
  write_file(base + "-includes.dot", render_file_graph_dot(scan.graph));
  write_file(base + "-includes-unr.csv",
             render_unresolved_csv(scan.resolution.unresolved));
}

void write_analyse_artifacts(const EngineModel& model,
                             const std::string& out_dir) {
  write_scan_artifacts(model.scan, out_dir);
  const std::string base = out_dir + "/" + model.scan.spec.name;
  write_file(base + "-subsystems.dot",
             render_subsystem_graph_dot(model.subsystem_graph));
  write_file(base + "-metrics.csv",
             render_metrics_csv(model.subsystem_graph, model.metrics));
}

std::vector<const RepoSpec*> repos_by_name(const CorpusConfig& config) {
  std::vector<const RepoSpec*> repos;
  for (const auto& repo : config.repos) repos.push_back(&repo);
  std::sort(repos.begin(), repos.end(),
            [](const RepoSpec* a, const RepoSpec* b) { return a->name < b->name; });
  return repos;
}

// Analyses every configured repository, name order, engines in parallel.
std::vector<EngineModel> analyse_corpus(const CorpusConfig& config) {
  auto repos = repos_by_name(config);
  if (repos.empty()) {
    throw ConfigError("no repositories configured; nothing to aggregate");
  }
  std::vector<EngineModel> models(repos.size());
  parallel_for(repos.size(), config.options.jobs, [&](std::size_t i) {
    models[i] = analyse_engine(*repos[i], config.options, 1);
  });
  return models;
}

std::string run_aggregate(const std::vector<EngineModel>& models,
                          const CorpusOptions& options,
                          const std::string& out_dir) {
  std::vector<SubsystemGraph> graphs;
  std::vector<MetricsReport> reports;
  for (const auto& model : models) {
    graphs.push_back(model.subsystem_graph);
    reports.push_back(model.metrics);
  }
  CouplingMatrix matrix = aggregate_heatmap(graphs);
  auto averaged =
      average_metric(reports, Metric::Betweenness, options.averaging);
  std::map<int, double> centrality(averaged.begin(), averaged.end());
  auto pairs = frequent_pairs(matrix, options.pair_threshold, centrality);
  auto arch =
      derive_emergent_architecture(pairs, centrality, options.inner_core_size);

  write_file(out_dir + "/corpus-heatmap.csv", render_heatmap_csv(matrix));
  write_file(out_dir + "/corpus-heatmap.svg", render_heatmap_svg(matrix));
  write_file(out_dir + "/corpus-pairs.csv", render_pairs_csv(pairs));
  write_file(out_dir + "/corpus-architecture.svg",
             render_architecture_svg(arch));
  std::string text = render_architecture_text(arch);
  write_file(out_dir + "/corpus-architecture.txt", text);
  return text;
}

void print_diagnostics(const EngineScan& scan) {
  for (const auto& diagnostic : scan.diagnostics) {
    std::cerr << scan.spec.name << ": warning: " << diagnostic.path << ": "
              << diagnostic.message << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"engarch - include-graph architecture recovery for C/C++ "
               "source trees"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir;
  int jobs = 0;
  int pair_threshold = 0;
  int inner_core_size = 0;
  std::string averaging;
  bool strict_resolve = false;
  bool normalize = false;
  bool include_unassigned = false;
  std::vector<std::string> adhoc_repos;

  auto* config_opt =
      app.add_option("--config", config_path, "corpus configuration file");
  auto* out_opt = app.add_option("--out", out_dir, "output directory");
  auto* jobs_opt = app.add_option("--jobs", jobs, "worker threads")
                       ->check(CLI::PositiveNumber);
  auto* threshold_opt =
      app.add_option("--pair-threshold", pair_threshold,
                     "minimum engine count for a frequent pair")
          ->check(CLI::PositiveNumber);
  auto* core_opt = app.add_option("--inner-core-size", inner_core_size,
                                  "subsystems in the inner core")
                       ->check(CLI::PositiveNumber);
  auto* averaging_opt =
      app.add_option("--averaging", averaging, "metric averaging mode")
          ->check(CLI::IsMember({"present_only", "zero_fill"}));
  auto* strict_flag = app.add_flag("--strict-resolve", strict_resolve,
                                   "leave ambiguous includes unresolved");
  auto* normalize_flag = app.add_flag("--normalize", normalize,
                                      "normalise betweenness by (n-1)(n-2)");
  auto* unassigned_flag =
      app.add_flag("--include-unassigned", include_unassigned,
                   "keep unmapped files as an UNASSIGNED pseudo-node");
  app.add_option("--repo", adhoc_repos,
                 "add a repository as <name>=<root> (repeatable)");

  std::string repo_name;
  auto* scan_cmd =
      app.add_subcommand("scan", "extract and resolve the include graph");
  scan_cmd->add_option("repo", repo_name, "repository name")->required();
  auto* analyse_cmd = app.add_subcommand(
      "analyse", "build the subsystem model and metrics for one repository");
  analyse_cmd->add_option("repo", repo_name, "repository name")->required();
  auto* aggregate_cmd = app.add_subcommand(
      "aggregate", "aggregate analysed engines into corpus artifacts");
  auto* suggest_cmd = app.add_subcommand(
      "suggest-mapping", "print advisory folder->subsystem suggestions");
  suggest_cmd->add_option("repo", repo_name, "repository name")->required();
  auto* all_cmd =
      app.add_subcommand("all", "scan + analyse every repository, then "
                                "aggregate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CorpusConfig config;
  if (config_opt->count() > 0) {
    config = load_corpus_config(config_path);
  } else if (adhoc_repos.empty()) {
    throw ConfigError(
        "no corpus configuration: pass --config <file> or --repo "
        "<name>=<root>");
  }
  for (const auto& entry : adhoc_repos) {
    auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size()) {
      throw ConfigError("--repo expects <name>=<root>, got '" + entry + "'");
    }
    RepoSpec spec;
    spec.name = entry.substr(0, eq);
    spec.root = absolute_normalized(entry.substr(eq + 1));
    if (find_repo(config, spec.name) != nullptr) {
      throw ConfigError("duplicate repository name '" + spec.name + "'");
    }
    config.repos.push_back(std::move(spec));
  }

  CorpusOptions& options = config.options;
  if (out_opt->count() > 0) options.output_dir = absolute_normalized(out_dir);
  if (jobs_opt->count() > 0) options.jobs = jobs;
  if (threshold_opt->count() > 0) options.pair_threshold = pair_threshold;
  if (core_opt->count() > 0) options.inner_core_size = inner_core_size;
  if (averaging_opt->count() > 0) {
    options.averaging = averaging == "zero_fill" ? AveragingMode::ZeroFill
                                                 : AveragingMode::PresentOnly;
  }
  if (strict_flag->count() > 0) options.strict_resolve = true;
  if (normalize_flag->count() > 0) options.normalize_centrality = true;
  if (unassigned_flag->count() > 0) options.include_unassigned = true;

  auto required_repo = [&]() -> const RepoSpec& {
    const RepoSpec* spec = find_repo(config, repo_name);
    if (spec == nullptr) {
      throw ConfigError("unknown repository: " + repo_name);
    }
    return *spec;
  };

  if (app.got_subcommand(scan_cmd)) {
    EngineScan scan =
        scan_engine(required_repo(), options.strict_resolve, options.jobs);
    ensure_output_dir(options.output_dir);
    write_scan_artifacts(scan, options.output_dir);
    print_diagnostics(scan);
    std::cout << scan_summary(scan) << "\n";
  } else if (app.got_subcommand(analyse_cmd)) {
    EngineModel model = analyse_engine(required_repo(), options, options.jobs);
    ensure_output_dir(options.output_dir);
    write_analyse_artifacts(model, options.output_dir);
    print_diagnostics(model.scan);
    if (model.coverage.total > 0 &&
        model.coverage.total == model.coverage.unassigned) {
      std::cerr << model.scan.spec.name
                << ": warning: mapping covers zero files\n";
    }
    std::cout << scan_summary(model.scan) << "\n"
              << analyse_summary(model) << "\n";
  } else if (app.got_subcommand(suggest_cmd)) {
    const RepoSpec& spec = required_repo();
    RepoSpec normalized = spec;
    normalized.root = absolute_normalized(spec.root);
    auto files = scan_repo(normalized);
    auto suggestions = suggest_mapping(files, normalized.root);
    std::cout << "# advisory mapping suggestions for " << spec.name
              << "; review before use\n";
    std::cout << "folder,subsystem\n";
    for (const auto& suggestion : suggestions) {
      std::cout << suggestion.folder_prefix << ","
                << code_of(suggestion.code) << "\n";
    }
  } else if (app.got_subcommand(aggregate_cmd)) {
    auto models = analyse_corpus(config);
    ensure_output_dir(options.output_dir);
    std::string text = run_aggregate(models, options, options.output_dir);
    for (const auto& model : models) {
      std::cout << analyse_summary(model) << "\n";
    }
    std::cout << text;
  } else if (app.got_subcommand(all_cmd)) {
    auto models = analyse_corpus(config);
    ensure_output_dir(options.output_dir);
    for (const auto& model : models) {
      write_analyse_artifacts(model, options.output_dir);
    }
    std::string text = run_aggregate(models, options, options.output_dir);
    for (const auto& model : models) {
      print_diagnostics(model.scan);
      std::cout << scan_summary(model.scan) << "\n"
                << analyse_summary(model) << "\n";
    }
    std::cout << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
