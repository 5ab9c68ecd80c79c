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

#ifndef SPL_CATALOG_H_
#define SPL_CATALOG_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "spl/engine.h"

namespace spl {

// One rule + input + golden triple from the catalog directory.
struct Fixture {
  std::string id;      // directory name, e.g. fx_mdspan__simple
  std::string family;  // e.g. fx_mdspan
  std::filesystem::path dir;
  std::string dialect = "c";
  std::map<std::string, int> expected_matches;  // per rule name
  bool experimental = false;

  std::filesystem::path rule_path() const { return dir / "rule.cocci"; }
  std::filesystem::path input_path() const { return dir / "input.c"; }
  std::filesystem::path expected_path() const { return dir / "expected.c"; }
};

// Reads every `<root>/<id>/meta`; fixtures come back sorted by id. Throws
// std::runtime_error on a malformed meta file.
std::vector<Fixture> LoadCatalog(const std::filesystem::path& root);

// Whole-file read; throws std::runtime_error when unreadable.
std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, const std::string& bytes);

// Runs the fixture's rule over `source` in the fixture's dialect.
RunResult RunFixture(const Fixture& fixture, const std::string& source);

}  // namespace spl

#endif  // SPL_CATALOG_H_
