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

#include "spl/catalog.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spl {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << bytes;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

namespace {

Fixture ParseMeta(const std::filesystem::path& dir) {
  Fixture f;
  f.dir = dir;
  f.id = dir.filename().string();
  std::istringstream in(ReadFile(dir / "meta"));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error((dir / "meta").string() + ":" +
                               std::to_string(line_no) + ": expected key=value");
    }
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "family") {
      f.family = value;
    } else if (key == "dialect") {
      if (!ParseDialect(value)) {
        throw std::runtime_error((dir / "meta").string() + ": bad dialect " +
                                 value);
      }
      f.dialect = value;
    } else if (key == "experimental") {
      f.experimental = value == "true";
    } else if (key.rfind("matches.", 0) == 0) {
      f.expected_matches[key.substr(8)] = std::stoi(value);
    } else {
      throw std::runtime_error((dir / "meta").string() + ": unknown key " + key);
    }
  }
  if (f.family.empty()) {
    throw std::runtime_error((dir / "meta").string() + ": missing family");
  }
  return f;
}

}  // namespace

std::vector<Fixture> LoadCatalog(const std::filesystem::path& root) {
  std::vector<Fixture> out;
  for (const auto& entry : std::filesystem::directory_iterator(root)) {
    if (entry.is_directory() && std::filesystem::exists(entry.path() / "meta")) {
      out.push_back(ParseMeta(entry.path()));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Fixture& a, const Fixture& b) { return a.id < b.id; });
  return out;
}

RunResult RunFixture(const Fixture& fixture, const std::string& source) {
  RuleSet rules = ParseSmpl(ReadFile(fixture.rule_path()));
  RunOptions options;
  options.dialect = ParseDialect(fixture.dialect).value_or(Dialect::kC);
  options.path = fixture.input_path().string();
  return RunRules(rules, source, options);
}

}  // namespace spl
