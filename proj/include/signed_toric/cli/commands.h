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

// Report-producing commands. Every command builds a JSON report; the text
// output is rendered from that report alone.

#ifndef SIGNED_TORIC_CLI_COMMANDS_H_
#define SIGNED_TORIC_CLI_COMMANDS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "signed_toric/cli/input.h"
#include "signed_toric/int_matrix.h"

namespace signed_toric::cli {

using Json = nlohmann::ordered_json;

inline constexpr char kReportSchema[] = "signed_toric.report/1";

enum ExitCode {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitLimit = 4,
  kExitInvariant = 5,
};

struct CommandOptions {
  size_t limit = 20;
  bool points = false;
  bool count = false;
  int source = 1;  // 1-based
  uint64_t seed = 1;
};

// The command names accepted by RunCommand.
const std::vector<std::string>& CommandNames();

// Runs one command. The report carries "schema", "command", "input" and
// "ok"; ok == false means a cross-check failed. Throws the core exceptions.
Json RunCommand(const std::string& command, const Instance& instance,
                const CommandOptions& options);

// The full invariant suite behind `verify`.
Json RunVerify(const Instance& instance, const CommandOptions& options);

std::string RenderText(const Json& report);

// kExitOk, or kExitInvariant when the report is not ok.
int ReportExitCode(const Json& report);

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json IntegerJson(const Integer& x);
Json VectorJson(const IntVector& v);
std::string JsonIntegerText(const Json& x);
std::string JsonVectorText(const Json& v);  // "(1,-2)"

}  // namespace signed_toric::cli

#endif  // SIGNED_TORIC_CLI_COMMANDS_H_
