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

// spatch-lite: apply a semantic patch to C sources.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "spl/batch.h"
#include "spl/catalog.h"
#include "spl/engine.h"
#include "spl/smpl.h"
#include "spl/transform.h"

namespace {

using spl::FileOutcome;

void PrintCounts(const spl::RuleSet& rules, const FileOutcome& f) {
  for (const spl::Rule& r : rules.rules) {
    if (r.kind == spl::Rule::Kind::kInitializer) continue;
    auto it = f.result.match_counts.find(r.name);
    size_t n = it == f.result.match_counts.end() ? 0 : it->second;
    std::cout << f.path << '\t' << r.name << '\t' << n << '\n';
  }
}

int Main(int argc, char** argv) {
  CLI::App app{"Apply a semantic patch to C sources."};
  std::string sp_file;
  bool in_place = false;
  bool dry_run = false;
  std::string dialect_text;
  int jobs = 1;
  bool fail_on_parse_error = false;
  std::vector<std::string> targets;

  app.add_option("--sp-file", sp_file, "Semantic patch file")->required();
  auto* in_place_opt =
      app.add_flag("--in-place", in_place, "Rewrite files that change");
  app.add_flag("--dry-run", dry_run, "Print per-rule match counts per file")
      ->excludes(in_place_opt);
  app.add_option("--dialect", dialect_text, "c or c-ext")
      ->check(CLI::IsMember({"c", "c-ext"}));
  app.add_option("--jobs", jobs, "Files processed in parallel")
      ->check(CLI::PositiveNumber);
  app.add_flag("--fail-on-parse-error", fail_on_parse_error,
               "Treat unparsable files found by a directory walk as errors");
  app.add_option("targets", targets, "Files or directories")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "spatch-lite: " << e.what() << "\n"
              << "Run with --help for usage.\n";
    return 1;
  }

  spl::RuleSet rules;
  try {
    rules = spl::ParseSmpl(spl::ReadFile(sp_file));
  } catch (const spl::SmplError& e) {
    std::cerr << sp_file << ":" << e.line() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "spatch-lite: " << e.what() << "\n";
    return 1;
  }
  std::vector<spl::SmplDiagnostic> diags = spl::Validate(rules);
  for (const spl::SmplDiagnostic& d : diags) {
    std::cerr << sp_file << ":" << d.line << ": rule " << d.rule << ": "
              << d.message << "\n";
  }
  if (!diags.empty()) return 1;

  std::optional<spl::Dialect> chosen;
  if (!dialect_text.empty()) chosen = spl::ParseDialect(dialect_text);
  spl::Dialect dialect = spl::EffectiveDialect(rules, chosen);

  int status = 0;
  std::vector<std::string> errors;
  std::vector<spl::Target> found = spl::CollectTargets(targets, &errors);
  for (const std::string& e : errors) std::cerr << "spatch-lite: " << e << "\n";
  if (!errors.empty()) status = 1;

  std::vector<std::string> paths;
  for (const spl::Target& t : found) paths.push_back(t.path);
  std::vector<FileOutcome> outcomes =
      jobs > 1 ? spl::RunParallel(rules, paths, dialect, jobs)
               : spl::RunSerial(rules, paths, dialect);

  if (dry_run) std::cout << "file\trule\tmatches\n";
  for (size_t i = 0; i < outcomes.size(); ++i) {
    const FileOutcome& f = outcomes[i];
    switch (f.status) {
      case FileOutcome::Status::kUnreadable:
        std::cerr << "spatch-lite: " << f.error << "\n";
        status = 1;
        continue;
      case FileOutcome::Status::kParseError:
        if (found[i].explicit_file || fail_on_parse_error) {
          std::cerr << f.error << "\n";
          status = 1;
        } else {
          std::cerr << "warning: skipping " << f.error << "\n";
        }
        continue;
      case FileOutcome::Status::kError:
        std::cerr << f.error << "\n";
        status = 1;
        continue;
      case FileOutcome::Status::kOk:
        break;
    }
    for (const std::string& w : f.result.warnings) {
      std::cerr << "warning: " << w << "\n";
    }
    if (dry_run) {
      PrintCounts(rules, f);
    } else if (in_place) {
      if (f.changed()) {
        try {
          spl::WriteFile(f.path, f.result.output);
        } catch (const std::exception& e) {
          std::cerr << "spatch-lite: " << e.what() << "\n";
          status = 1;
        }
      }
    } else {
      std::cout << spl::EmitDiff(f.original, f.result.output, f.path);
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) { return Main(argc, argv); }
