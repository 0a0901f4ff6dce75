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

#ifndef GALOISPT_PARSE_HPP
#define GALOISPT_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "galoispt/field.hpp"
#include "galoispt/multipoly.hpp"

namespace galoispt {

/// `Q`, `GF(p)`, `GF(p^k)` or `GF(p^k; m0,m1,...,1)`.
/// Errors: ParseError (message carries the column), plus field-core errors.
Field parse_field(std::string_view text);

/// Coefficient literal: integer, `a/b`, or `[c0,c1,...]` for extension fields.
Element parse_element(std::string_view text, const Field& field);

/// Sum of terms such as `-3*X0^3*X2`, `1/2*X1^2`, `[0,1]*X0`. The variable
/// count is max(min_nvars, largest index + 1).
MultiPoly parse_poly(std::string_view text, const Field& field, int min_nvars = 1);

/// Comma-separated coordinates.
std::vector<Element> parse_point(std::string_view text, const Field& field);

}  // namespace galoispt

#endif  // GALOISPT_PARSE_HPP
