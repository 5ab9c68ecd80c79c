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

#ifndef SPL_BATCH_H_
#define SPL_BATCH_H_

#include <string>
#include <vector>

#include "spl/engine.h"
#include "spl/smpl.h"

namespace spl {

struct Target {
  std::string path;
  // Named on the command line, as opposed to found by a directory walk.
  bool explicit_file = false;
};

// Expands directories (recursively, .c/.h/.cu/.cpp) and returns targets
// sorted by path. Missing paths are reported in `errors`.
std::vector<Target> CollectTargets(const std::vector<std::string>& paths,
                                   std::vector<std::string>* errors);

struct FileOutcome {
  enum class Status { kOk, kUnreadable, kParseError, kError };
  std::string path;
  Status status = Status::kOk;
  std::string error;
  std::string original;
  RunResult result;  // result.output is the rewritten text when kOk

  bool changed() const {
    return status == Status::kOk && result.output != original;
  }
};

FileOutcome ProcessFile(const RuleSet& rules, const std::string& path,
                        Dialect dialect);

// Both return outcomes in the order of `paths`.
std::vector<FileOutcome> RunSerial(const RuleSet& rules,
                                   const std::vector<std::string>& paths,
                                   Dialect dialect);
std::vector<FileOutcome> RunParallel(const RuleSet& rules,
                                     const std::vector<std::string>& paths,
                                     Dialect dialect, int jobs);

}  // namespace spl

#endif  // SPL_BATCH_H_
