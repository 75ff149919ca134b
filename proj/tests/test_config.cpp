#include <doctest.h>

#include "engarch/config.hpp"
#include "engarch/errors.hpp"

using namespace engarch;

TEST_CASE("parse_corpus_config reads options and repo sections") {
  std::string text =
      "# sample corpus\n"
      "output_dir results\n"
      "pair_threshold 2\n"
      "inner_core_size 3\n"
      "averaging zero_fill\n"
      "strict_resolve on\n"
      "normalize_centrality off\n"
      "include_unassigned on\n"
      "jobs 4\n"
      "\n"
      "[repo alpha]\n"
      "root corpus/alpha\n"
      "mapping mappings/alpha.csv\n"
      "extensions .h .cpp .inl\n"
      "exclude_dirs build third_party\n"
      "include_dirs engine /abs/include\n"
      "\n"
      "[repo beta]\n"
      "root /somewhere/beta\n";
  auto config = parse_corpus_config(text, "/base", "corpus.conf");

  CHECK(config.options.output_dir == "/base/results");
  CHECK(config.options.pair_threshold == 2);
  CHECK(config.options.inner_core_size == 3);
  CHECK(config.options.averaging == AveragingMode::ZeroFill);
  CHECK(config.options.strict_resolve);
  CHECK_FALSE(config.options.normalize_centrality);
  CHECK(config.options.include_unassigned);
  CHECK(config.options.jobs == 4);

  REQUIRE(config.repos.size() == 2);
  const RepoSpec& alpha = config.repos[0];
  CHECK(alpha.name == "alpha");
  CHECK(alpha.root == "/base/corpus/alpha");
  CHECK(alpha.mapping_file == "/base/mappings/alpha.csv");
  CHECK(alpha.extensions == std::vector<std::string>{".h", ".cpp", ".inl"});
  CHECK(alpha.exclude_dirs == std::vector<std::string>{"build", "third_party"});
  // repo-relative include dirs resolve against the repo root
  CHECK(alpha.include_dirs ==
        std::vector<std::string>{"/base/corpus/alpha/engine", "/abs/include"});

  CHECK(config.repos[1].extensions == std::vector<std::string>{".h", ".cpp"});
  CHECK(find_repo(config, "beta") == &config.repos[1]);
  CHECK(find_repo(config, "missing") == nullptr);
}

TEST_CASE("configs fail with precise line numbers") {
  auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_corpus_config(text, "/base", "c.conf");
      FAIL("expected ConfigError for: " << needle);
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error("mystery_key 1\n", "c.conf:1");
  expect_error("[repo a]\nroot /r\n[repo a]\nroot /r\n", "duplicate");
  expect_error("[repo a]\nroot /r\nextensions cpp\n", "start with '.'");
  expect_error("[repo a]\n", "has no root");
  expect_error("pair_threshold 0\n", "pair_threshold");
  expect_error("jobs nope\n", "integer");
  expect_error("[broken\n", "unclosed");
}

TEST_CASE("unset keys fall back to the documented defaults") {
  auto config = parse_corpus_config("[repo x]\nroot /r\n", "/base", "c.conf");
  const RepoSpec& spec = config.repos[0];
  CHECK(spec.extensions == std::vector<std::string>{".h", ".cpp"});
  CHECK(spec.exclude_dirs.empty());
  CHECK(spec.include_dirs.empty());
  CHECK(spec.mapping_file.empty());
  CHECK(config.options.pair_threshold == 6);
  CHECK(config.options.inner_core_size == 4);
  CHECK(config.options.averaging == AveragingMode::PresentOnly);
}
