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

#ifndef GALOISPT_RESOLVENT_HPP
#define GALOISPT_RESOLVENT_HPP

#include <array>
#include <optional>
#include <string_view>
#include <utility>

#include "galoispt/multipoly.hpp"

namespace galoispt {

/// For x^3 + a1 x^2 + a2 x + a3.
struct CubicInvariants {
  MultiPoly b1;
  MultiPoly b2;
  MultiPoly delta;  // b1^2 - 4 b2
};

CubicInvariants cubic_invariants(const MultiPoly& a1, const MultiPoly& a2, const MultiPoly& a3);

enum class CubicGalois { Cyclic3, Sym3, NotApplicable };
std::string_view to_string(CubicGalois g);

/// Cyclic3 when the discriminant is a square polynomial, Sym3 otherwise,
/// NotApplicable when it vanishes or the characteristic is 2. The caller
/// asserts the cubic is irreducible; reducible input gives an unspecified
/// answer.
CubicGalois classify_cubic_galois(const MultiPoly& a1, const MultiPoly& a2, const MultiPoly& a3);

/// g(t) = t^3 + b1 t^2 + b2 t + b3 for x^4 + a1 x^3 + a2 x^2 + a3 x + a4.
struct ResolventCubic {
  MultiPoly b1;
  MultiPoly b2;
  MultiPoly b3;
};

ResolventCubic resolvent_cubic(const MultiPoly& a1, const MultiPoly& a2, const MultiPoly& a3,
                               const MultiPoly& a4);

/// (a2^2, a3^2): t'^3 + a2^2 t' + a3^2 after t = t' + a2. Characteristic 2 only.
std::pair<MultiPoly, MultiPoly> depressed_resolvent_char2(const MultiPoly& a2, const MultiPoly& a3);

/// Nonzero linear forms B1, B2, B3 over `search_field` with
/// T^3 + F2 T + F3 = (T - B1)(T - B2)(T - B3), sorted as linear_factors sorts.
/// Errors: WrongCharacteristic, FieldTooLarge.
std::optional<std::array<Form, 3>> split_cubic_char2(const Form& f2, const Form& f3, const Field& search_field);

/// B with a2 = -B^2. Characteristic 3 only.
std::optional<MultiPoly> char3_negsquare(const MultiPoly& a2, bool allow_quadratic_extension);

/// Coarse classes by the number of roots of the resolvent cubic in K.
enum class QuarticGalois { KleinFour, D4OrC4, S4OrA4, Undetermined };
std::string_view to_string(QuarticGalois g);

/// For a separable irreducible quartic with coefficients in a finite field
/// (given as constants). Undetermined when the resolvent has two roots, which
/// only happens for inseparable data.
QuarticGalois classify_quartic_galois(const Element& a1, const Element& a2, const Element& a3,
                                      const Element& a4);

}  // namespace galoispt

#endif  // GALOISPT_RESOLVENT_HPP
