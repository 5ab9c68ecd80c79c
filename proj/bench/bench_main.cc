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

#include <benchmark/benchmark.h>

#include <filesystem>
#include <string>
#include <vector>

#include "spl/batch.h"
#include "spl/catalog.h"
#include "spl/engine.h"
#include "spl/smpl.h"

namespace spl {
namespace {

namespace fs = std::filesystem;

std::string LikwidRule() {
  return ReadFile(std::string(SPL_CATALOG_DIR) + "/fx_likwid__two_blocks/rule.cocci");
}

// A file with `functions` instrumentable parallel regions.
std::string SyntheticSource(int functions) {
  std::string s = "#include <omp.h>\n\n";
  for (int i = 0; i < functions; ++i) {
    std::string n = std::to_string(i);
    s += "void work" + n + "(double *x, int n)\n{\n#pragma omp parallel\n  {\n"
         "    for (int i = 0; i < n; i++)\n      x[i] = x[i] * " + n + " + 1;\n"
         "  }\n}\n\n";
  }
  return s;
}

const std::vector<std::string>& Corpus() {
  static const std::vector<std::string> paths = [] {
    fs::path dir = fs::temp_directory_path() / "spl_bench_corpus";
    fs::create_directories(dir);
    std::vector<std::string> out;
    for (int i = 0; i < 64; ++i) {
      fs::path p = dir / ("f" + std::to_string(i) + ".c");
      WriteFile(p, SyntheticSource(20 + i % 7));
      out.push_back(p.string());
    }
    return out;
  }();
  return paths;
}

void BM_SingleFile(benchmark::State& state) {
  RuleSet rules = ParseSmpl(LikwidRule());
  std::string src = SyntheticSource(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    RunResult r = RunRules(rules, src);
    benchmark::DoNotOptimize(r.output);
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(src.size()));
}
BENCHMARK(BM_SingleFile)->Arg(10)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_BatchSerial(benchmark::State& state) {
  RuleSet rules = ParseSmpl(LikwidRule());
  for (auto _ : state) {
    auto out = RunSerial(rules, Corpus(), Dialect::kC);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(Corpus().size()));
}
BENCHMARK(BM_BatchSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_BatchParallel(benchmark::State& state) {
  RuleSet rules = ParseSmpl(LikwidRule());
  int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto out = RunParallel(rules, Corpus(), Dialect::kC, jobs);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(Corpus().size()));
}
BENCHMARK(BM_BatchParallel)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace spl

BENCHMARK_MAIN();
