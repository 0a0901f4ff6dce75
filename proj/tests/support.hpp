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

// Shared fixtures, random generators and independent oracles for the tests.

#ifndef GALOISPT_TESTS_SUPPORT_HPP
#define GALOISPT_TESTS_SUPPORT_HPP

#include <doctest.h>

#include <random>
#include <string_view>
#include <vector>

#include "galoispt/field.hpp"
#include "galoispt/galois.hpp"
#include "galoispt/multipoly.hpp"
#include "galoispt/parse.hpp"

namespace galoispt::testing {

inline MultiPoly poly(std::string_view text, const Field& k, int nvars = 3) { return parse_poly(text, k, nvars); }
inline Form form(std::string_view text, const Field& k, int nvars = 3) { return Form::of(poly(text, k, nvars)); }
inline Element el(std::string_view text, const Field& k) { return parse_element(text, k); }

inline Form zero_form(const Field& k, int degree, int nvars = 3) { return Form::zero(k, nvars, degree); }

// The char-3 fixture X^3 Z - X Z^3 + Y^4 with X = X0, Y = X1, Z = X2.
inline Form char3_fixture() { return form("X0^3*X2 - X0*X2^3 + X1^4", make_prime_field(3)); }
inline Form fermat(const Field& k) { return form("X0^4 + X1^4 + X2^4", k); }

// X0 (X0 + X1)(X0 + X2)(X0 + X1 + X2) + X1^3 X2 over GF(2).
inline Form klein_fixture() {
  const Field k = make_prime_field(2);
  const Form x0 = form("X0", k);
  return x0 * form("X0 + X1", k) * form("X0 + X2", k) * form("X0 + X1 + X2", k) + form("X1^3*X2", k);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(gen_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(gen_); }

  Element element(const Field& k) {
    if (k.is_finite()) return k.from_code(static_cast<std::uint64_t>(integer(0, static_cast<long long>(k.order()) - 1)));
    return k.from_int(integer(-3, 3));
  }
  Element nonzero(const Field& k) {
    while (true) {
      Element e = element(k);
      if (!e.is_zero()) return e;
    }
  }

  // Form of the given degree in variables first..nvars-1; each monomial is
  // present with probability `density`.
  Form form(const Field& k, int nvars, int degree, double density = 0.6, int first = 0) {
    MultiPoly p(k, nvars);
    for_each_monomial(nvars, degree, first, [&](const Monomial& m) {
      if (chance(density)) p.add_term(m, element(k));
    });
    return Form(std::move(p), degree);
  }
  Form nonzero_form(const Field& k, int nvars, int degree, double density = 0.6, int first = 0) {
    while (true) {
      Form f = form(k, nvars, degree, density, first);
      if (!f.is_zero()) return f;
    }
  }

  // Quartic with F0 = 0 and F1 != 0 (inner) or F0 = 1 (outer), parts in
  // X1, X2 drawn at random.
  Form quartic(const Field& k, PointKind kind, double density = 0.6) {
    std::vector<Form> parts;
    parts.push_back(kind == PointKind::Inner ? Form::zero(k, 3, 0) : Form(MultiPoly::constant(k.one(), 3), 0));
    for (int i = 1; i <= 4; ++i) {
      parts.push_back(i == 1 && kind == PointKind::Inner ? nonzero_form(k, 3, 1, density, 1)
                                                         : form(k, 3, i, density, 1));
    }
    return assemble_from_x0(parts);
  }

  LinearChange invertible(const Field& k, int n) {
    while (true) {
      std::vector<Element> e;
      for (int i = 0; i < n * n; ++i) e.push_back(element(k));
      try {
        return LinearChange(k, n, std::move(e));
      } catch (const Error&) {
      }
    }
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  template <typename Fn>
  static void for_each_monomial(int nvars, int degree, int first, Fn&& fn) {
    Monomial m;
    rec(m, first, nvars, degree, fn);
  }
  template <typename Fn>
  static void rec(Monomial& m, int var, int nvars, int left, Fn& fn) {
    if (var == nvars - 1) {
      m.exp[var] = static_cast<std::uint8_t>(left);
      fn(m);
      m.exp[var] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.exp[var] = static_cast<std::uint8_t>(e);
      rec(m, var + 1, nvars, left - e, fn);
    }
    m.exp[var] = 0;
  }

  std::mt19937_64 gen_;
};

// Determinant by cofactor expansion; fine for the small Sylvester matrices
// used here.
inline MultiPoly cofactor_det(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  MultiPoly acc(m[0][0].field(), m[0][0].nvars());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const MultiPoly term = m[0][c] * cofactor_det(minor);
    acc = c % 2 ? acc - term : acc + term;
  }
  return acc;
}

// Discriminant of the monic cubic x^3 + a1 x^2 + a2 x + a3 as -Res(f, f'),
// with the resultant from the 5x5 Sylvester matrix.
inline MultiPoly sylvester_cubic_discriminant(const MultiPoly& a1, const MultiPoly& a2, const MultiPoly& a3) {
  const MultiPoly one = MultiPoly::constant(a1.field().one(), a1.nvars());
  const MultiPoly zero(a1.field(), a1.nvars());
  auto k = [&](long long v) { return MultiPoly::constant(a1.field().from_int(v), a1.nvars()); };
  const std::vector<MultiPoly> f{one, a1, a2, a3};
  const std::vector<MultiPoly> df{k(3), k(2) * a1, a2};
  std::vector<std::vector<MultiPoly>> s(5, std::vector<MultiPoly>(5, zero));
  for (int r = 0; r < 2; ++r) {
    for (int i = 0; i < 4; ++i) s[r][r + i] = f[i];
  }
  for (int r = 0; r < 3; ++r) {
    for (int i = 0; i < 3; ++i) s[2 + r][r + i] = df[i];
  }
  return -cofactor_det(s);
}

}  // namespace galoispt::testing

namespace doctest {
template <>
struct StringMaker<galoispt::Element> {
  static String convert(const galoispt::Element& e) { return e.to_string().c_str(); }
};
template <>
struct StringMaker<galoispt::MultiPoly> {
  static String convert(const galoispt::MultiPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<galoispt::Form> {
  static String convert(const galoispt::Form& f) { return f.to_string().c_str(); }
};
template <>
struct StringMaker<galoispt::LinearChange> {
  static String convert(const galoispt::LinearChange& a) { return a.to_string().c_str(); }
};
}  // namespace doctest

#endif  // GALOISPT_TESTS_SUPPORT_HPP
