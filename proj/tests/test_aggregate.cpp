#include <doctest.h>

#include <random>

#include "engarch/aggregate.hpp"
#include "engarch/errors.hpp"
#include "test_support.hpp"

using namespace engarch;

namespace {

SubsystemGraph engine_with(const std::string& name,
                           std::vector<std::pair<Subsystem, Subsystem>> edges,
                           int weight = 1) {
  SubsystemGraph graph;
  graph.engine = name;
  std::set<int> nodes;
  for (auto [s, t] : edges) {
    graph.edges[{index_of(s), index_of(t)}] = weight;
    nodes.insert(index_of(s));
    nodes.insert(index_of(t));
  }
  graph.nodes.assign(nodes.begin(), nodes.end());
  return graph;
}

}  // namespace

TEST_CASE("heatmap counts engines, not weights") {
  std::vector<SubsystemGraph> corpus;
  for (int i = 0; i < 10; ++i) {
    std::vector<std::pair<Subsystem, Subsystem>> edges;
    if (i < 8) edges.push_back({Subsystem::AUD, Subsystem::AUD});
    if (i < 6) edges.push_back({Subsystem::AUD, Subsystem::COR});
    edges.push_back({Subsystem::COR, Subsystem::COR});
    corpus.push_back(engine_with("engine" + std::to_string(i), edges, i + 1));
  }
  auto matrix = aggregate_heatmap(corpus);
  CHECK(matrix.n_engines == 10);
  CHECK(matrix.at(Subsystem::AUD, Subsystem::AUD) == 8);
  CHECK(matrix.at(Subsystem::AUD, Subsystem::COR) == 6);
  CHECK(matrix.at(Subsystem::COR, Subsystem::COR) == 10);
  CHECK(matrix.at(Subsystem::COR, Subsystem::AUD) == 0);
}

TEST_CASE("an edgeless engine yields a zero matrix") {
  SubsystemGraph lonely;
  lonely.engine = "lonely";
  lonely.nodes = {index_of(Subsystem::COR)};
  auto matrix = aggregate_heatmap({lonely});
  for (std::size_t a = 0; a < kSubsystemCount; ++a) {
    for (std::size_t b = 0; b < kSubsystemCount; ++b) {
      CHECK(matrix.counts[a][b] == 0);
    }
  }
}

TEST_CASE("duplicate engine names are fatal") {
  auto one = engine_with("same", {{Subsystem::COR, Subsystem::COR}});
  CHECK_THROWS_AS(aggregate_heatmap({one, one}), ConfigError);
}

TEST_CASE("heatmap ignores the unassigned pseudo-node") {
  SubsystemGraph graph;
  graph.engine = "mixed";
  graph.nodes = {index_of(Subsystem::GMP), kUnassignedNode};
  graph.edges[{index_of(Subsystem::GMP), kUnassignedNode}] = 3;
  graph.edges[{index_of(Subsystem::GMP), index_of(Subsystem::GMP)}] = 1;
  auto matrix = aggregate_heatmap({graph});
  CHECK(matrix.at(Subsystem::GMP, Subsystem::GMP) == 1);
  int total = 0;
  for (const auto& row : matrix.counts) {
    for (int cell : row) total += cell;
  }
  CHECK(total == 1);
}

TEST_CASE("heatmap equals the brute-force recount on random corpora") {
  std::mt19937 rng(13371337);
  std::uniform_int_distribution<int> corpus_size(2, 10);
  for (int round = 0; round < 50; ++round) {
    std::vector<SubsystemGraph> corpus;
    int n = corpus_size(rng);
    for (int i = 0; i < n; ++i) {
      corpus.push_back(
          test::random_subsystem_graph(rng, "e" + std::to_string(i)));
    }
    auto fast = aggregate_heatmap(corpus);
    auto slow = test::brute_force_heatmap(corpus);
    CHECK(fast.n_engines == slow.n_engines);
    CHECK(fast.counts == slow.counts);
  }
}

TEST_CASE("heatmap is invariant under graph order and weight scaling") {
  std::mt19937 rng(777);
  std::vector<SubsystemGraph> corpus;
  for (int i = 0; i < 5; ++i) {
    corpus.push_back(test::random_subsystem_graph(rng, "e" + std::to_string(i)));
  }
  auto baseline = aggregate_heatmap(corpus);

  auto shuffled = corpus;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  CHECK(aggregate_heatmap(shuffled).counts == baseline.counts);

  auto scaled = corpus;
  for (auto& graph : scaled) {
    for (auto& [_, weight] : graph.edges) weight *= 7;
  }
  CHECK(aggregate_heatmap(scaled).counts == baseline.counts);
}

TEST_CASE("frequent pairs respect threshold, diagonal and tie rules") {
  CouplingMatrix matrix;
  matrix.n_engines = 10;
  auto set = [&](Subsystem a, Subsystem b, int count) {
    matrix.counts[index_of(a)][index_of(b)] = count;
  };
  set(Subsystem::GMP, Subsystem::COR, 9);
  set(Subsystem::COR, Subsystem::LLR, 7);
  set(Subsystem::LLR, Subsystem::COR, 7);
  set(Subsystem::AUD, Subsystem::COR, 6);
  set(Subsystem::AUD, Subsystem::AUD, 8);  // diagonal, never a pair
  set(Subsystem::FES, Subsystem::COR, 5);  // below threshold

  std::map<int, double> centrality = {{index_of(Subsystem::COR), 10.0},
                                      {index_of(Subsystem::LLR), 4.0},
                                      {index_of(Subsystem::GMP), 1.0},
                                      {index_of(Subsystem::AUD), 0.5}};
  auto pairs = frequent_pairs(matrix, 6, centrality);
  REQUIRE(pairs.size() == 4);
  CHECK(pairs[0].source == Subsystem::GMP);
  CHECK(pairs[0].target == Subsystem::COR);
  CHECK(pairs[0].count == 9);
  // the two 7s tie on count and on centrality_sum; canonical order decides
  CHECK(pairs[1].source == Subsystem::COR);
  CHECK(pairs[1].target == Subsystem::LLR);
  CHECK(pairs[2].source == Subsystem::LLR);
  CHECK(pairs[2].target == Subsystem::COR);
  CHECK(pairs[3].source == Subsystem::AUD);
  CHECK(pairs[3].centrality_sum == doctest::Approx(10.5));
}

TEST_CASE("a zero matrix yields no pairs") {
  CouplingMatrix matrix;
  matrix.n_engines = 3;
  CHECK(frequent_pairs(matrix, 1, {}).empty());
}

TEST_CASE("a threshold below one is rejected") {
  CouplingMatrix matrix;
  CHECK_THROWS_AS(frequent_pairs(matrix, 0, {}), ConfigError);
}

TEST_CASE("frequent pairs match brute force on random corpora") {
  std::mt19937 rng(24681357);
  std::uniform_int_distribution<int> corpus_size(2, 10);
  for (int round = 0; round < 50; ++round) {
    std::vector<SubsystemGraph> corpus;
    int n = corpus_size(rng);
    for (int i = 0; i < n; ++i) {
      corpus.push_back(
          test::random_subsystem_graph(rng, "e" + std::to_string(i)));
    }
    auto matrix = aggregate_heatmap(corpus);
    std::map<int, double> centrality;
    std::uniform_real_distribution<double> value(0.0, 8.0);
    for (std::size_t code = 0; code < kSubsystemCount; ++code) {
      centrality[static_cast<int>(code)] = value(rng);
    }
    std::uniform_int_distribution<int> threshold_dist(1, n);
    int threshold = threshold_dist(rng);

    auto fast = frequent_pairs(matrix, threshold, centrality);
    auto slow = test::brute_force_pairs(matrix, threshold, centrality);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      CHECK(fast[i].source == slow[i].source);
      CHECK(fast[i].target == slow[i].target);
      CHECK(fast[i].count == slow[i].count);
      CHECK(fast[i].centrality_sum ==
            doctest::Approx(slow[i].centrality_sum));
    }
  }
}

TEST_CASE("emergent architecture tiers partition the vocabulary") {
  std::map<int, double> centrality = {
      {index_of(Subsystem::COR), 9.0}, {index_of(Subsystem::RES), 7.0},
      {index_of(Subsystem::EDI), 6.0}, {index_of(Subsystem::LLR), 5.0},
      {index_of(Subsystem::GMP), 2.0}, {index_of(Subsystem::FES), 1.0},
      {index_of(Subsystem::AUD), 0.0}};
  std::vector<FrequentPair> pairs = {
      {Subsystem::GMP, Subsystem::COR, 9, 11.0},
      {Subsystem::FES, Subsystem::COR, 7, 10.0},
      {Subsystem::AUD, Subsystem::COR, 6, 9.0},
  };
  auto arch = derive_emergent_architecture(pairs, centrality, 4);
  CHECK(arch.inner_core == std::vector<Subsystem>{Subsystem::COR,
                                                  Subsystem::RES,
                                                  Subsystem::EDI,
                                                  Subsystem::LLR});
  CHECK(arch.outer_core == std::vector<Subsystem>{Subsystem::AUD,
                                                  Subsystem::FES,
                                                  Subsystem::GMP});
  CHECK(arch.inner_core.size() + arch.outer_core.size() +
            arch.periphery.size() ==
        kSubsystemCount);
  std::set<Subsystem> all;
  for (auto tier : {arch.inner_core, arch.outer_core, arch.periphery}) {
    for (Subsystem code : tier) all.insert(code);
  }
  CHECK(all.size() == kSubsystemCount);
  for (const auto& edge : arch.edges) {
    auto in_tier = [&](const std::vector<Subsystem>& tier, Subsystem code) {
      return std::find(tier.begin(), tier.end(), code) != tier.end();
    };
    CHECK((in_tier(arch.inner_core, edge.source) ||
           in_tier(arch.outer_core, edge.source)));
    CHECK((in_tier(arch.inner_core, edge.target) ||
           in_tier(arch.outer_core, edge.target)));
  }
}

TEST_CASE("empty pairs leave the outer core empty") {
  std::map<int, double> centrality = {{index_of(Subsystem::COR), 3.0},
                                      {index_of(Subsystem::LLR), 1.0}};
  auto arch = derive_emergent_architecture({}, centrality, 2);
  CHECK(arch.inner_core == std::vector<Subsystem>{Subsystem::COR,
                                                  Subsystem::LLR});
  CHECK(arch.outer_core.empty());
  CHECK(arch.periphery.size() == kSubsystemCount - 2);
}

TEST_CASE("a pair code missing from the centrality map is fatal") {
  std::vector<FrequentPair> pairs = {{Subsystem::GMP, Subsystem::COR, 6, 0.0}};
  std::map<int, double> centrality = {{index_of(Subsystem::COR), 1.0}};
  CHECK_THROWS_AS(derive_emergent_architecture(pairs, centrality, 4),
                  ConsistencyError);
}
