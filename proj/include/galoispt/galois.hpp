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

#ifndef GALOISPT_GALOIS_HPP
#define GALOISPT_GALOIS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "galoispt/field.hpp"
#include "galoispt/multipoly.hpp"

namespace galoispt {

enum class PointKind { Inner, Outer };

enum class VerdictStatus { ExtendableGalois, NotGalois, PreconditionFailed, ExtensionRequired, Unknown };

std::string_view to_string(PointKind kind);
std::string_view to_string(VerdictStatus status);

struct GroupDesc {
  enum class Structure { Cyclic, KleinFour, ElemAbelianSemidirect, Trivial, Other };

  Structure structure = Structure::Trivial;
  long long order = 1;
  long long m = 1;                      // Cyclic(m)
  long long p = 0, e = 0, l = 0;        // (Z/p)^e x| Z/l
  std::vector<long long> element_orders;  // Other: sorted multiset

  static GroupDesc cyclic(long long m);
  static GroupDesc klein_four();
  static GroupDesc semidirect(long long p, long long e, long long l);
  static GroupDesc trivial();
  static GroupDesc other(std::vector<long long> element_orders);

  std::string to_string() const;
  friend bool operator==(const GroupDesc&, const GroupDesc&) = default;
};

std::string_view to_string(GroupDesc::Structure s);

struct WitnessData {
  /// A with A*F = normal_form / scale (scale is 1 for inner points).
  LinearChange substitution;
  Form normal_form;
  Element scale;
  std::optional<Form> square_root_G;
  std::optional<std::vector<Form>> cubic_roots;
  /// Generators of the group with S*F = t*F; empty when a root of unity is
  /// missing from every available extension.
  std::vector<LinearChange> generators;
  std::vector<Element> generator_scalars;
};

struct GaloisVerdict {
  VerdictStatus status = VerdictStatus::Unknown;
  PointKind kind = PointKind::Inner;
  std::optional<WitnessData> witness;
  std::optional<GroupDesc> group;
  bool assumed_irreducible = false;
  std::vector<std::string> notes;
};

struct CheckOptions {
  bool assume_irreducible = false;
  int trials = 16;
};

/// M with M*P = (1, 0, ..., 0): N has P as column 0 and the unit vectors
/// e_j (j != first nonzero index) as the other columns, M = N^-1.
/// Errors: ZeroPoint, SizeMismatch.
LinearChange normalize_point(std::span<const Element> point, const Field& field);

/// The form in coordinates where P = [1:0:...:0], i.e. (M^-1)*F.
Form normalized_form(const Form& f, const LinearChange& m);

/// All checks below assume P = [1:0:...:0].
GaloisVerdict check_inner_general(const Form& f, const CheckOptions& options = {});
GaloisVerdict check_outer_general(const Form& f, const CheckOptions& options = {});
GaloisVerdict check_inner_quartic_char3(const Form& f, const CheckOptions& options = {});
/// Searches `search_field` and its quadratic extension when that has at most
/// 81 elements.
GaloisVerdict check_outer_quartic_char2(const Form& f, const Field& search_field,
                                        const CheckOptions& options = {});

/// Picks the applicable procedure from the characteristic and degree.
GaloisVerdict check_point(const Form& f, PointKind kind, const CheckOptions& options = {});

/// 3*F1*F3 - F2^2 == 0. Errors: PreconditionFailed, WrongCharacteristic (ch 3).
bool quartic_inner_identity(const Form& f);
/// F2 == 3/8 F1^2 and F3 == 1/16 F1^3 after scaling F0 to 1.
/// Errors: PreconditionFailed, WrongCharacteristic (ch 2).
bool quartic_outer_identity(const Form& f);
/// 3F1^2 - 8F2 == 0 and 9F1^3 - 32F3 == 0, the constants as published. Kept
/// to document that the second one rejects (X0 + X1)^4 + X2^4.
bool printed_outer_identity(const Form& f);

GroupDesc galois_group_label(int d, std::uint64_t ch, PointKind kind);

/// Re-applies the witness: substitution, normal form shape and every
/// generator relation. False when any check fails or the witness is absent.
bool verify_witness(const Form& f, const GaloisVerdict& verdict);

/// t with S*F = t*F, if any.
std::optional<Element> stabilizer_scalar(const LinearChange& s, const Form& f);

}  // namespace galoispt

#endif  // GALOISPT_GALOIS_HPP
