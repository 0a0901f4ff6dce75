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

// Dense univariate polynomials over a finite field; internal helper for the
// irreducibility heuristic.

#ifndef GALOISPT_SRC_UNIPOLY_HPP
#define GALOISPT_SRC_UNIPOLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "galoispt/field.hpp"

namespace galoispt::detail {

class UniPoly {
 public:
  explicit UniPoly(Field field) : field_(std::move(field)) {}
  UniPoly(Field field, std::vector<Element> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  const Field& field() const { return field_; }
  /// -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Element& coeff(int i) const { return c_[i]; }
  const Element& lead() const { return c_.back(); }

  static UniPoly x(const Field& f) { return UniPoly(f, {f.zero(), f.one()}); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Element> out;
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      Element s = i < a.c_.size() ? a.c_[i] : a.field_.zero();
      if (i < b.c_.size()) s += b.c_[i];
      out.push_back(s);
    }
    return UniPoly(a.field_, std::move(out));
  }

  UniPoly operator-() const {
    std::vector<Element> out;
    for (const auto& v : c_) out.push_back(-v);
    return UniPoly(field_, std::move(out));
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    std::vector<Element> out(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(a.field_, std::move(out));
  }

  /// Remainder of division by a nonzero divisor.
  UniPoly mod(const UniPoly& d) const {
    std::vector<Element> r = c_;
    const Element inv_lead = d.lead().inverse();
    const int dd = d.degree();
    while (static_cast<int>(r.size()) - 1 >= dd && !r.empty()) {
      const Element factor = r.back() * inv_lead;
      const std::size_t shift = r.size() - 1 - dd;
      if (!factor.is_zero()) {
        for (int i = 0; i <= dd; ++i) r[shift + i] -= factor * d.c_[i];
      }
      r.pop_back();
      while (!r.empty() && r.back().is_zero()) r.pop_back();
    }
    return UniPoly(field_, std::move(r));
  }

  UniPoly derivative() const {
    std::vector<Element> out;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      out.push_back(c_[i] * field_.from_int(static_cast<long long>(i)));
    }
    return UniPoly(field_, std::move(out));
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    const Element inv = lead().inverse();
    std::vector<Element> out;
    for (const auto& v : c_) out.push_back(v * inv);
    return UniPoly(field_, std::move(out));
  }

  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = a.mod(b);
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// base^e mod m.
  static UniPoly powmod(UniPoly base, std::uint64_t e, const UniPoly& m) {
    UniPoly result(m.field_, {m.field_.one()});
    base = base.mod(m);
    while (e) {
      if (e & 1) result = (result * base).mod(m);
      base = (base * base).mod(m);
      e >>= 1;
    }
    return result.mod(m);
  }

  bool is_squarefree() const {
    const UniPoly d = derivative();
    if (d.is_zero()) return false;
    return gcd(*this, d).degree() == 0;
  }

  /// Ben-Or test over GF(q).
  bool is_irreducible() const {
    const int n = degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const std::uint64_t q = field_.order();
    const UniPoly xpoly = x(field_);
    UniPoly h = xpoly;
    for (int i = 1; 2 * i <= n; ++i) {
      h = powmod(h, q, *this);
      if (gcd(*this, h - xpoly).degree() != 0) return false;
    }
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Field field_;
  std::vector<Element> c_;
};

}  // namespace galoispt::detail

#endif  // GALOISPT_SRC_UNIPOLY_HPP
