#include <doctest.h>

#include "engarch/emit.hpp"
#include "engarch/errors.hpp"
#include "engarch/pipeline.hpp"
#include "test_support.hpp"

using namespace engarch;
using engarch::test::TempDir;

namespace {

// a small self-contained engine exercising both passes
void populate_mini_engine(TempDir& dir) {
  dir.write("src/main.cpp",
            "#include \"app.h\"\n#include <vector>\n#include \"core/eng.h\"\n");
  dir.write("src/app.h", "#include \"core/eng.h\"\n");
  dir.write("src/core/eng.h", "#include \"eng_impl.h\"\n");
  dir.write("src/core/eng_impl.h", "");
  dir.write("src/audio/mix.cpp", "#include \"core/eng.h\"\n");  // second pass
  dir.write("notes.txt", "#include \"never.h\"\n");
}

RepoSpec mini_spec(const TempDir& dir) {
  RepoSpec spec;
  spec.name = "mini";
  spec.root = dir.str();
  return spec;
}

}  // namespace

TEST_CASE("scan_engine assembles the full per-engine picture") {
  TempDir dir("pipe-scan");
  populate_mini_engine(dir);
  EngineScan scan = scan_engine(mini_spec(dir), false, 1);
  CHECK(scan.files.size() == 5);
  CHECK(scan.resolution.first_pass == 4);
  CHECK(scan.resolution.second_pass == 1);
  CHECK(scan.resolution.not_found == 1);
  CHECK(scan.graph.nodes.size() == 5);
  CHECK(scan.graph.edges.size() == 5);
}

TEST_CASE("scan_engine output is independent of the job count") {
  TempDir dir("pipe-jobs");
  populate_mini_engine(dir);
  EngineScan serial = scan_engine(mini_spec(dir), false, 1);
  EngineScan parallel = scan_engine(mini_spec(dir), false, 8);
  CHECK(render_file_graph_dot(serial.graph) ==
        render_file_graph_dot(parallel.graph));
  CHECK(render_unresolved_csv(serial.resolution.unresolved) ==
        render_unresolved_csv(parallel.resolution.unresolved));
  REQUIRE(serial.resolution.resolutions.size() ==
          parallel.resolution.resolutions.size());
  for (std::size_t i = 0; i < serial.resolution.resolutions.size(); ++i) {
    CHECK(serial.resolution.resolutions[i].kind ==
          parallel.resolution.resolutions[i].kind);
    CHECK(serial.resolution.resolutions[i].target ==
          parallel.resolution.resolutions[i].target);
  }
}

TEST_CASE("analyse_engine tags nodes and builds the model") {
  TempDir dir("pipe-analyse");
  populate_mini_engine(dir);
  auto mapping_path =
      dir.write("mapping.csv",
                "folder,subsystem\nsrc/core,COR\nsrc/audio,AUD\n"
                "src/main.cpp,GMP\nsrc/app.h,FES\n");
  RepoSpec spec = mini_spec(dir);
  spec.mapping_file = mapping_path;
  CorpusOptions options;
  EngineModel model = analyse_engine(spec, options, 1);

  CHECK(model.coverage.total == 5);
  CHECK(model.coverage.unassigned == 0);
  std::vector<int> expected_nodes = {index_of(Subsystem::AUD),
                                     index_of(Subsystem::COR),
                                     index_of(Subsystem::FES),
                                     index_of(Subsystem::GMP)};
  CHECK(model.subsystem_graph.nodes == expected_nodes);
  CHECK(model.subsystem_graph.edges.at(
            {index_of(Subsystem::GMP), index_of(Subsystem::FES)}) == 1);
  CHECK(model.subsystem_graph.edges.at(
            {index_of(Subsystem::GMP), index_of(Subsystem::COR)}) == 1);
  CHECK(model.subsystem_graph.edges.at(
            {index_of(Subsystem::AUD), index_of(Subsystem::COR)}) == 1);
  CHECK(model.subsystem_graph.edges.at(
            {index_of(Subsystem::COR), index_of(Subsystem::COR)}) == 1);
  CHECK(model.metrics.in_degree.at(index_of(Subsystem::COR)) == 3);
}

TEST_CASE("analyse_engine without a mapping file is a config error") {
  TempDir dir("pipe-nomap");
  populate_mini_engine(dir);
  CorpusOptions options;
  CHECK_THROWS_AS(analyse_engine(mini_spec(dir), options, 1), ConfigError);
}

TEST_CASE("a mapping that covers nothing still yields an empty model") {
  TempDir dir("pipe-zero");
  populate_mini_engine(dir);
  auto mapping_path =
      dir.write("mapping.csv", "folder,subsystem\nelsewhere,COR\n");
  RepoSpec spec = mini_spec(dir);
  spec.mapping_file = mapping_path;
  CorpusOptions options;
  EngineModel model = analyse_engine(spec, options, 1);
  CHECK(model.subsystem_graph.nodes.empty());
  CHECK(model.subsystem_graph.edges.empty());
  CHECK(model.coverage.unassigned == model.coverage.total);
  CHECK(model.metrics.betweenness.empty());
}
