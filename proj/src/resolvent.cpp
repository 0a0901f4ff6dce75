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

#include "galoispt/resolvent.hpp"

#include <algorithm>
#include <functional>

namespace galoispt {

namespace {

constexpr std::string_view kModule = "resolvent";

MultiPoly c(const MultiPoly& like, long long v) {
  return MultiPoly::constant(like.field().from_int(v), like.nvars());
}

void require_char(const Field& f, std::uint64_t ch, const char* op) {
  if (f.characteristic() != ch) {
    throw Error(ErrorCode::WrongCharacteristic, kModule,
                std::string(op) + " needs characteristic " + std::to_string(ch) + ", got " + f.to_string());
  }
}

void require_common(std::initializer_list<const MultiPoly*> polys) {
  const MultiPoly& first = **polys.begin();
  for (const MultiPoly* p : polys) {
    if (!(p->field() == first.field()) || p->nvars() != first.nvars()) {
      throw Error(ErrorCode::FieldMismatch, kModule, "coefficients must share field and variables");
    }
  }
}

bool form_less(const Form& a, const Form& b) {
  const auto& ta = a.poly().terms();
  const auto& tb = b.poly().terms();
  if (ta.size() != tb.size()) return ta.size() < tb.size();
  for (auto ia = ta.rbegin(), ib = tb.rbegin(); ia != ta.rend(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return GrlexLess{}(ib->first, ia->first);
    if (!(ia->second == ib->second)) return canonical_less(ia->second, ib->second);
  }
  return false;
}

// Roots among the scalar multiples of the linear factors of target; every
// root of the cubic or the deflated quadratic divides its constant term.
std::vector<Form> roots_dividing(const Form& target, const std::function<bool(const Form&)>& is_root,
                                 const Field& field) {
  std::vector<Form> out;
  if (target.is_zero()) return out;
  for (const auto& lf : linear_factors(target, field)) {
    for (const Element& s : field.elements()) {
      if (s.is_zero()) continue;
      Form b = lf.factor.scaled(s);
      if (is_root(b)) out.push_back(std::move(b));
    }
  }
  return out;
}

}  // namespace

CubicInvariants cubic_invariants(const MultiPoly& a1, const MultiPoly& a2, const MultiPoly& a3) {
  require_common({&a1, &a2, &a3});
  MultiPoly b1 = a1 * a2 - c(a1, 3) * a3;
  MultiPoly b2 = a2.pow(3) + c(a1, 9) * a3 * a3 - c(a1, 6) * a1 * a2 * a3 + a1.pow(3) * a3;
  MultiPoly delta = b1 * b1 - c(a1, 4) * b2;
  return {std::move(b1), std::move(b2), std::move(delta)};
}

std::string_view to_string(CubicGalois g) {
  switch (g) {
    case CubicGalois::Cyclic3: return "Cyclic3";
    case CubicGalois::Sym3: return "Sym3";
    case CubicGalois::NotApplicable: return "NotApplicable";
  }
  return "NotApplicable";
}

CubicGalois classify_cubic_galois(const MultiPoly& a1, const MultiPoly& a2, const MultiPoly& a3) {
  if (a1.field().characteristic() == 2) return CubicGalois::NotApplicable;
  const CubicInvariants inv = cubic_invariants(a1, a2, a3);
  if (inv.delta.is_zero()) return CubicGalois::NotApplicable;
  return sqrt_poly(inv.delta, false) ? CubicGalois::Cyclic3 : CubicGalois::Sym3;
}

ResolventCubic resolvent_cubic(const MultiPoly& a1, const MultiPoly& a2, const MultiPoly& a3,
                               const MultiPoly& a4) {
  require_common({&a1, &a2, &a3, &a4});
  return {-a2, a1 * a3 - c(a1, 4) * a4, -(a4 * (a1 * a1 - c(a1, 4) * a2)) - a3 * a3};
}

std::pair<MultiPoly, MultiPoly> depressed_resolvent_char2(const MultiPoly& a2, const MultiPoly& a3) {
  require_common({&a2, &a3});
  require_char(a2.field(), 2, "depressed_resolvent_char2");
  return {a2 * a2, a3 * a3};
}

std::optional<std::array<Form, 3>> split_cubic_char2(const Form& f2, const Form& f3, const Field& search_field) {
  require_char(f2.field(), 2, "split_cubic_char2");
  require_char(search_field, 2, "split_cubic_char2");
  if (!search_field.is_finite() || search_field.order() > 81) {
    throw Error(ErrorCode::FieldTooLarge, kModule, "search field must have at most 81 elements");
  }
  if (f2.degree() != 2 || f3.degree() != 3) {
    throw Error(ErrorCode::InvalidArgument, kModule, "expected forms of degree 2 and 3");
  }
  const bool same = f2.field() == search_field;
  const Form a = same ? f2 : f2.embedded(Embedding(f2.field(), search_field));
  const Form b = same ? f3 : f3.embedded(Embedding(f3.field(), search_field));
  // A zero root is excluded, and F3 = 0 makes T a factor.
  if (b.is_zero()) return std::nullopt;

  auto cubic_root = [&](const Form& t) { return (t * t * t + a * t + b).is_zero(); };
  for (const Form& b1 : roots_dividing(b, cubic_root, search_field)) {
    const Form rest = a + b1 * b1;
    auto quad_root = [&](const Form& t) { return (t * t + b1 * t + rest).is_zero(); };
    for (const Form& b2 : roots_dividing(rest, quad_root, search_field)) {
      Form b3 = b1 + b2;
      if (b3.is_zero() || b2 == b1) continue;
      std::array<Form, 3> r{b1, b2, std::move(b3)};
      const bool ok = (r[0] + r[1] + r[2]).is_zero() && r[0] * r[1] + r[0] * r[2] + r[1] * r[2] == a &&
                      r[0] * r[1] * r[2] == b;
      if (!ok) {
        throw Error(ErrorCode::InvalidArgument, kModule, "internal: root triple failed the symmetric identities");
      }
      std::sort(r.begin(), r.end(), form_less);
      return r;
    }
  }
  return std::nullopt;
}

std::optional<MultiPoly> char3_negsquare(const MultiPoly& a2, bool allow_quadratic_extension) {
  require_char(a2.field(), 3, "char3_negsquare");
  if (a2.is_zero()) return a2;
  return sqrt_poly(-a2, allow_quadratic_extension);
}

std::string_view to_string(QuarticGalois g) {
  switch (g) {
    case QuarticGalois::KleinFour: return "KleinFour";
    case QuarticGalois::D4OrC4: return "D4OrC4";
    case QuarticGalois::S4OrA4: return "S4OrA4";
    case QuarticGalois::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

QuarticGalois classify_quartic_galois(const Element& a1, const Element& a2, const Element& a3,
                                      const Element& a4) {
  const Field& f = a1.field();
  if (!f.is_finite()) {
    throw Error(ErrorCode::InvalidArgument, kModule, "constant quartic classification needs a finite field");
  }
  const Element four = f.from_int(4);
  const Element b1 = -a2;
  const Element b2 = a1 * a3 - four * a4;
  const Element b3 = -(a4 * (a1 * a1 - four * a2)) - a3 * a3;
  int roots = 0;
  for (const Element& t : f.elements()) {
    if ((t * t * t + b1 * t * t + b2 * t + b3).is_zero()) ++roots;
  }
  switch (roots) {
    case 3: return QuarticGalois::KleinFour;
    case 1: return QuarticGalois::D4OrC4;
    case 0: return QuarticGalois::S4OrA4;
    default: return QuarticGalois::Undetermined;
  }
}

}  // namespace galoispt
