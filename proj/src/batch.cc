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

#include "spl/batch.h"

#include <omp.h>

#include <algorithm>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "spl/catalog.h"
#include "spl/syntax_tree.h"
#include "spl/transform.h"

namespace spl {
namespace {

namespace fs = std::filesystem;

bool HasSourceExtension(const fs::path& p) {
  static const std::set<std::string> kExt = {".c", ".h", ".cu", ".cpp"};
  return kExt.count(p.extension().string()) > 0;
}

}  // namespace

std::vector<Target> CollectTargets(const std::vector<std::string>& paths,
                                   std::vector<std::string>* errors) {
  std::vector<Target> out;
  for (const std::string& p : paths) {
    std::error_code ec;
    fs::file_status st = fs::status(p, ec);
    if (ec || !fs::exists(st)) {
      errors->push_back(p + ": no such file or directory");
      continue;
    }
    if (fs::is_directory(st)) {
      for (auto it = fs::recursive_directory_iterator(p, ec);
           !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (it->is_regular_file() && HasSourceExtension(it->path())) {
          out.push_back({it->path().string(), false});
        }
      }
      if (ec) errors->push_back(p + ": " + ec.message());
    } else {
      out.push_back({p, true});
    }
  }
  std::sort(out.begin(), out.end(), [](const Target& a, const Target& b) {
    return a.path < b.path || (a.path == b.path && a.explicit_file > b.explicit_file);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Target& a, const Target& b) {
                          return a.path == b.path;
                        }),
            out.end());
  return out;
}

FileOutcome ProcessFile(const RuleSet& rules, const std::string& path,
                        Dialect dialect) {
  FileOutcome out;
  out.path = path;
  try {
    out.original = ReadFile(path);
  } catch (const std::exception& e) {
    out.status = FileOutcome::Status::kUnreadable;
    out.error = e.what();
    return out;
  }
  RunOptions options;
  options.dialect = dialect;
  options.path = path;
  try {
    out.result = RunRules(rules, out.original, options);
  } catch (const SyntaxError& e) {
    out.status = FileOutcome::Status::kParseError;
    out.error = e.what();
  } catch (const std::exception& e) {
    out.status = FileOutcome::Status::kError;
    out.error = path + ": " + e.what();
  }
  return out;
}

std::vector<FileOutcome> RunSerial(const RuleSet& rules,
                                   const std::vector<std::string>& paths,
                                   Dialect dialect) {
  std::vector<FileOutcome> out;
  out.reserve(paths.size());
  for (const std::string& p : paths) out.push_back(ProcessFile(rules, p, dialect));
  return out;
}

std::vector<FileOutcome> RunParallel(const RuleSet& rules,
                                     const std::vector<std::string>& paths,
                                     Dialect dialect, int jobs) {
  std::vector<FileOutcome> out(paths.size());
  const long n = static_cast<long>(paths.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
  for (long i = 0; i < n; ++i) {
    out[i] = ProcessFile(rules, paths[i], dialect);
  }
  return out;
}

}  // namespace spl
