// Copyright 2026 The spatch-lite Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "spl/batch.h"
#include "spl/catalog.h"

namespace spl {
namespace {

TEST(BatchTest, ParallelEqualsSerialOnCatalog) {
  std::vector<Fixture> fixtures = LoadCatalog(SPL_CATALOG_DIR);
  // One rule set over every fixture input, in both dialects.
  RuleSet rules = ParseSmpl(ReadFile(fixtures.front().rule_path()));
  std::vector<std::string> paths;
  for (const Fixture& f : fixtures) {
    paths.push_back(f.input_path().string());
    paths.push_back(f.expected_path().string());
  }
  for (Dialect d : {Dialect::kC, Dialect::kCExt}) {
    std::vector<FileOutcome> serial = RunSerial(rules, paths, d);
    for (int jobs : {1, 2, 8}) {
      std::vector<FileOutcome> parallel = RunParallel(rules, paths, d, jobs);
      ASSERT_EQ(serial.size(), parallel.size());
      for (size_t i = 0; i < serial.size(); ++i) {
        EXPECT_EQ(serial[i].path, parallel[i].path);
        EXPECT_EQ(serial[i].status, parallel[i].status);
        EXPECT_EQ(serial[i].error, parallel[i].error);
        EXPECT_EQ(serial[i].result.output, parallel[i].result.output);
        EXPECT_EQ(serial[i].result.match_counts, parallel[i].result.match_counts);
        EXPECT_EQ(serial[i].result.warnings, parallel[i].result.warnings);
      }
    }
  }
}

TEST(BatchTest, EachFixtureThroughTheParallelDriver) {
  std::vector<Fixture> fixtures = LoadCatalog(SPL_CATALOG_DIR);
  for (const Fixture& f : fixtures) {
    RuleSet rules = ParseSmpl(ReadFile(f.rule_path()));
    std::vector<FileOutcome> out =
        RunParallel(rules, {f.input_path().string()}, *ParseDialect(f.dialect), 4);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0].result.output, ReadFile(f.expected_path())) << f.id;
  }
}

TEST(BatchTest, CollectTargetsSortsAndFilters) {
  std::vector<std::string> errors;
  std::vector<Target> t = CollectTargets(
      {std::string(SPL_CATALOG_DIR) + "/fx_mdspan__simple",
       std::string(SPL_CATALOG_DIR) + "/fx_bloat__mixed_file/input.c",
       std::string(SPL_CATALOG_DIR) + "/no_such_dir"},
      &errors);
  ASSERT_EQ(errors.size(), 1u);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_TRUE(t[0].explicit_file);
  EXPECT_NE(t[0].path.find("fx_bloat__mixed_file/input.c"), std::string::npos);
  EXPECT_NE(t[1].path.find("fx_mdspan__simple/expected.c"), std::string::npos);
  EXPECT_FALSE(t[1].explicit_file);
}

}  // namespace
}  // namespace spl
