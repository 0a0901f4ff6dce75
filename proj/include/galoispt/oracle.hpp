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

#ifndef GALOISPT_ORACLE_HPP
#define GALOISPT_ORACLE_HPP

#include <string>
#include <vector>

#include "galoispt/galois.hpp"

namespace galoispt {

/// S with free first row and identity rows below, S*F = scalar*F.
struct StabilizerElement {
  LinearChange matrix;
  Element scalar;
  long long order = 1;
};

struct OracleResult {
  std::vector<StabilizerElement> elements;  // lexicographic by first row
  long long order = 0;
  GroupDesc structure;
  Field search_field;
};

/// Brute force over all first rows in GF(q^e)^(n+2) with s11 != 0, for
/// P = [1:0:...:0]. Errors: TooManyVariables (more than 3 variables),
/// FieldTooLarge (q^e > 81, e > 2 or F not over a finite field).
OracleResult enumerate_stabilizer(const Form& f, int extension_degree, unsigned threads = 0);

/// Group structure from the element orders; `ch` picks the semidirect shape.
GroupDesc classify_group(const std::vector<long long>& element_orders, std::uint64_t ch);

/// Products of elements stay in the set and every element has its inverse.
bool is_closed(const OracleResult& r);

struct OracleVerdict {
  bool is_galois = false;
  OracleResult result;
  std::string caveat;
};

/// |G| == d-1 (inner) or d (outer). Errors: those of enumerate_stabilizer and
/// PreconditionFailed when P is not of the requested kind.
OracleVerdict brute_force_is_galois(const Form& f, PointKind kind, int extension_degree, unsigned threads = 0);

}  // namespace galoispt

#endif  // GALOISPT_ORACLE_HPP
