// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// signed_toric <command> FILE [options]

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "signed_toric/cli/commands.h"
#include "signed_toric/cli/input.h"
#include "signed_toric/errors.h"

namespace {

using signed_toric::cli::CommandOptions;

size_t DefaultLimit() {
  const char* env = std::getenv("SIGNED_TORIC_LIMIT");
  if (env == nullptr || *env == '\0') return signed_toric::kDefaultEnumerationLimit;
  try {
    size_t pos = 0;
    unsigned long value = std::stoul(env, &pos);
    if (pos == std::string(env).size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  std::cerr << "warning: ignoring invalid SIGNED_TORIC_LIMIT '" << env << "'\n";
  return signed_toric::kDefaultEnumerationLimit;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = signed_toric::cli;
  CLI::App app{"Class groups, conic divisorial ideals and Gorenstein tests for "
               "toric rings of signed posets"};
  app.require_subcommand(1);
  // Global flags may also follow the subcommand.
  app.fallthrough();
  bool json = false;
  bool strict = false;
  CommandOptions options;
  options.limit = DefaultLimit();
  app.add_flag("--json", json, "Print the machine-readable report");
  app.add_option("--limit", options.limit, "Cap on edges for exponential enumerations")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", options.seed, "Seed for randomized checks in verify");
  app.add_flag("--strict-poset", strict,
               "Require signed_poset roots to be closed instead of closing them");

  std::string file;
  for (const std::string& name : cli::CommandNames()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("FILE", file, "Input file")->required();
    if (name == "conic") {
      sub->add_flag("--points", options.points, "List the lattice points");
      sub->add_flag("--count", options.count, "Print the number of conic classes");
    }
    if (name == "orientations") {
      sub->add_option("--source", options.source, "Unique source vertex (1-based)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    cli::InputDocument doc = cli::ParseInputFile(file);
    cli::Instance instance = cli::BuildInstance(doc, {strict});
    cli::Json report = cli::RunCommand(command, instance, options);
    if (json) {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << cli::RenderText(report);
    }
    return cli::ReportExitCode(report);
  } catch (const signed_toric::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return cli::kExitParse;
  } catch (const signed_toric::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return cli::kExitValidation;
  } catch (const signed_toric::LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return cli::kExitLimit;
  } catch (const signed_toric::InvariantFailure& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return cli::kExitInvariant;
  }
}
