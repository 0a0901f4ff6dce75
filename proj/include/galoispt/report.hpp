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

// JSON serialization (schema 1). Big integers are decimal strings, field
// elements and forms use the CLI text grammar.

#ifndef GALOISPT_REPORT_HPP
#define GALOISPT_REPORT_HPP

#include <json.hpp>

#include "galoispt/galois.hpp"
#include "galoispt/oracle.hpp"
#include "galoispt/transfer.hpp"

namespace galoispt {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const LinearChange& a);
nlohmann::json to_json(const GroupDesc& g);
nlohmann::json to_json(const IrreducibilityResult& r);
nlohmann::json to_json(const GaloisVerdict& v);
nlohmann::json to_json(const TransferReport& r);
nlohmann::json to_json(const OracleResult& r);

/// Inverses of to_json; `nvars` sizes the rebuilt forms.
/// Errors: ParseError for malformed documents.
LinearChange linear_change_from_json(const nlohmann::json& j, const Field& field);
GroupDesc group_from_json(const nlohmann::json& j);
GaloisVerdict verdict_from_json(const nlohmann::json& j, int nvars);

}  // namespace galoispt

#endif  // GALOISPT_REPORT_HPP
