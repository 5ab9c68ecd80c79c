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

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "spl/catalog.h"
#include "spl/transform.h"

namespace spl {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

class CliTest : public testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("spl_cli_" + std::string(testing::UnitTest::GetInstance()
                                         ->current_test_info()
                                         ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  CliRun Run(const std::string& args) {
    fs::path err = dir_ / "stderr.txt";
    std::string cmd = std::string("'") + SPL_CLI_PATH + "' " + args + " 2>'" +
                      err.string() + "'";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = ReadFile(err);
    return r;
  }

  std::string Catalog(const std::string& id, const std::string& file) {
    return (fs::path(SPL_CATALOG_DIR) / id / file).string();
  }

  fs::path Copy(const std::string& id, const std::string& name) {
    fs::path to = dir_ / name;
    fs::create_directories(to.parent_path());
    fs::copy_file(Catalog(id, "input.c"), to, fs::copy_options::overwrite_existing);
    return to;
  }

  fs::path dir_;
};

TEST_F(CliTest, DiffModePrintsDiffAndLeavesFile) {
  fs::path f = Copy("fx_mdspan__simple", "m.c");
  CliRun r = Run("--sp-file '" + Catalog("fx_mdspan__simple", "rule.cocci") +
                 "' '" + f.string() + "'");
  EXPECT_EQ(r.code, 0) << r.err;
  std::string before = ReadFile(Catalog("fx_mdspan__simple", "input.c"));
  EXPECT_EQ(r.out, EmitDiff(before, ReadFile(Catalog("fx_mdspan__simple", "expected.c")),
                            f.string()));
  EXPECT_EQ(ReadFile(f), before);
}

TEST_F(CliTest, InPlaceTwiceIsStable) {
  fs::path f = Copy("fx_librsb__two_functions", "r.c");
  std::string rule = Catalog("fx_librsb__two_functions", "rule.cocci");
  CliRun first = Run("--in-place --sp-file '" + rule + "' '" + f.string() + "'");
  EXPECT_EQ(first.code, 0);
  EXPECT_TRUE(first.out.empty());
  EXPECT_EQ(ReadFile(f), ReadFile(Catalog("fx_librsb__two_functions", "expected.c")));
  auto stamp = fs::last_write_time(f);
  CliRun second = Run("--in-place --sp-file '" + rule + "' '" + f.string() + "'");
  EXPECT_EQ(second.code, 0);
  EXPECT_EQ(ReadFile(f), ReadFile(Catalog("fx_librsb__two_functions", "expected.c")));
  EXPECT_EQ(fs::last_write_time(f), stamp);
}

TEST_F(CliTest, DryRunPrintsCountsAndWritesNothing) {
  fs::path f = Copy("fx_bloat__one_of_each", "b.c");
  CliRun r = Run("--dry-run --sp-file '" + Catalog("fx_bloat__one_of_each", "rule.cocci") +
                 "' '" + dir_.string() + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "file\trule\tmatches\n" + f.string() + "\tc\t2\n" + f.string() +
                       "\td\t1\n");
  EXPECT_EQ(ReadFile(f), ReadFile(Catalog("fx_bloat__one_of_each", "input.c")));
}

TEST_F(CliTest, JobsGiveSameOutputAsSerial) {
  for (int i = 0; i < 12; ++i) {
    Copy(i % 2 ? "fx_likwid__two_blocks" : "fx_likwid__no_omp_include",
         "d" + std::to_string(i % 3) + "/f" + std::to_string(i) + ".c");
  }
  std::string rule = Catalog("fx_likwid__two_blocks", "rule.cocci");
  CliRun serial = Run("--sp-file '" + rule + "' '" + dir_.string() + "'");
  CliRun parallel = Run("--jobs 4 --sp-file '" + rule + "' '" + dir_.string() + "'");
  EXPECT_EQ(serial.code, 0);
  EXPECT_EQ(parallel.code, 0);
  EXPECT_FALSE(serial.out.empty());
  EXPECT_EQ(serial.out, parallel.out);
  // Sorted by path.
  EXPECT_LT(serial.out.find("d0/f0.c"), serial.out.find("d0/f3.c"));
  EXPECT_LT(serial.out.find("d0/f9.c"), serial.out.find("d1/f1.c"));
}

TEST_F(CliTest, UnparsableFileInWalkIsSkippedUnlessAsked) {
  Copy("fx_mdspan__simple", "good.c");
  WriteFile(dir_ / "bad.c", "int f( {\n");
  std::string rule = Catalog("fx_mdspan__simple", "rule.cocci");
  CliRun walk = Run("--sp-file '" + rule + "' '" + dir_.string() + "'");
  EXPECT_EQ(walk.code, 0);
  EXPECT_NE(walk.err.find("warning: skipping"), std::string::npos);
  EXPECT_NE(walk.out.find("good.c"), std::string::npos);
  CliRun strict =
      Run("--fail-on-parse-error --sp-file '" + rule + "' '" + dir_.string() + "'");
  EXPECT_EQ(strict.code, 1);
  CliRun named = Run("--sp-file '" + rule + "' '" + (dir_ / "bad.c").string() + "'");
  EXPECT_EQ(named.code, 1);
  EXPECT_NE(named.err.find("bad.c:1:"), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitOne) {
  std::string rule = Catalog("fx_mdspan__simple", "rule.cocci");
  EXPECT_EQ(Run("'" + Catalog("fx_mdspan__simple", "input.c") + "'").code, 1);
  EXPECT_EQ(Run("--sp-file '" + rule + "' '" + (dir_ / "missing.c").string() + "'").code,
            1);
  EXPECT_EQ(Run("--sp-file '" + (dir_ / "missing.cocci").string() + "' x.c").code, 1);
  EXPECT_EQ(Run("--sp-file '" + rule + "' --dialect c++ x.c").code, 1);
  EXPECT_EQ(Run("--sp-file '" + rule + "' --in-place --dry-run x.c").code, 1);
  WriteFile(dir_ / "broken.cocci", "@r@\nidentifier x;\n@@\n- y(x\n");
  CliRun broken = Run("--sp-file '" + (dir_ / "broken.cocci").string() + "' x.c");
  EXPECT_EQ(broken.code, 1);
  EXPECT_TRUE(broken.out.empty());
  EXPECT_FALSE(broken.err.empty());
}

TEST_F(CliTest, PatchHintSetsDialectUnlessOverridden) {
  fs::path f = Copy("fx_mdspan__simple", "m.c");
  std::string rule = Catalog("fx_mdspan__simple", "rule.cocci");
  EXPECT_EQ(Run("--sp-file '" + rule + "' '" + f.string() + "'").code, 0);
  CliRun forced = Run("--dialect c --sp-file '" + rule + "' '" + f.string() + "'");
  EXPECT_EQ(forced.code, 1);
  EXPECT_NE(forced.err.find("c-ext"), std::string::npos);
}

TEST_F(CliTest, WarningsGoToStderr) {
  fs::path f = Copy("fx_cuda2hip__type", "t.cu");
  CliRun r = Run("--sp-file '" + Catalog("fx_cuda2hip__type", "rule.cocci") + "' '" +
                 f.string() + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning: "), std::string::npos);
  EXPECT_EQ(r.out.find("warning"), std::string::npos);
  EXPECT_NE(r.out.find("+  rocblas_half h;"), std::string::npos);
}

}  // namespace
}  // namespace spl
