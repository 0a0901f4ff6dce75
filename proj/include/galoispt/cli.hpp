// Copyright 2026 The galoispt Authors
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

#ifndef GALOISPT_CLI_HPP
#define GALOISPT_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "galoispt/galois.hpp"

namespace galoispt {

enum class Command { CheckInner, CheckOuter, Transfer, Oracle, Resolvent, Content };

std::string_view to_string(Command c);

struct Job {
  Command command = Command::CheckInner;
  std::string field_text = "Q";
  std::optional<Field> field;
  std::string poly_text;
  std::optional<Form> form;
  std::vector<Element> point;  // defaults to (1, 0, ..., 0)
  bool assume_irreducible = false;
  int ext_degree = 1;
  int trials = 16;
  std::vector<std::uint64_t> targets;
  std::optional<PointKind> kind;  // transfer and oracle
  std::uint64_t source = 0;
  bool json = false;
};

/// Arguments after the program name: `<command> [flags]`.
/// Errors: ParseError (with column for polynomial text), DimensionMismatch.
Job parse_job(const std::vector<std::string>& args);

inline constexpr int kExitDecided = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitUndecided = 3;

int exit_code_for(VerdictStatus status);

/// Prints a table, or the JSON report with `--json`, and returns the exit code.
int run_job(const Job& job, std::ostream& out);

/// parse_job + run_job with errors printed to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace galoispt

#endif  // GALOISPT_CLI_HPP
