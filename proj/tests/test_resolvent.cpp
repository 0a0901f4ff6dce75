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

#include <doctest.h>

#include <algorithm>
#include <map>

#include "galoispt/resolvent.hpp"
#include "support.hpp"

using namespace galoispt;
using namespace galoispt::testing;

namespace {

const Field Q = make_rationals();
const Field F2 = make_prime_field(2);
const Field F3 = make_prime_field(3);

MultiPoly c(const Field& k, long long v, int nvars = 2) { return MultiPoly::constant(k.from_int(v), nvars); }

int root_count(const std::vector<long long>& monic_low_to_high, const Field& ext) {
  int n = 0;
  for (const Element& x : ext.elements()) {
    Element acc = ext.one();
    for (auto it = monic_low_to_high.rbegin(); it != monic_low_to_high.rend(); ++it) acc = acc * x + ext.from_int(*it);
    if (acc.is_zero()) ++n;
  }
  return n;
}

// Expected resolvent root count from the cycle type of Frobenius on the
// roots of x^4 + a1 x^3 + a2 x^2 + a3 x + a4, read off from root counts over
// GF(p^m), m <= 4. Returns -1 for inseparable quartics.
int expected_resolvent_roots(std::uint64_t p, const std::vector<long long>& a) {
  const std::vector<long long> low{a[3], a[2], a[1], a[0]};
  int n[5] = {0, 0, 0, 0, 0};
  for (int m = 1; m <= 4; ++m) n[m] = root_count(low, make_extension_field(p, m));
  if (n[3] + n[4] - n[1] != 4) return -1;
  const int linear = n[1];
  const int quadratic = (n[2] - n[1]) / 2;
  const int cubic = (n[3] - n[1]) / 3;
  if (linear == 4 || quadratic == 2) return 3;  // Frobenius in V4
  if (cubic == 1) return 0;                     // 3-cycle
  return 1;                                     // transposition or 4-cycle
}

}  // namespace

TEST_CASE("cubic invariants examples") {
  const MultiPoly zero(Q, 2);
  const MultiPoly a = MultiPoly::variable(Q, 2, 0), b = MultiPoly::variable(Q, 2, 1);
  const auto inv = cubic_invariants(zero, a, b);
  CHECK(inv.b1 == -b.scaled(Q.from_int(3)));
  CHECK(inv.b2 == a.pow(3) + b.pow(2).scaled(Q.from_int(9)));
  CHECK(inv.delta == poly("-4*X0^3 - 27*X1^2", Q, 2));
  CHECK(inv.delta == inv.b1 * inv.b1 - inv.b2.scaled(Q.from_int(4)));
  CHECK(cubic_invariants(zero, zero, c(Q, 1)).delta == c(Q, -27));
  CHECK(cubic_invariants(zero, c(Q, -3), c(Q, 1)).delta == c(Q, 81));
  CHECK_THROWS_AS(cubic_invariants(zero, MultiPoly(F3, 2), zero), Error);
}

TEST_CASE("discriminant matches the Sylvester resultant") {
  // Fully symbolic in a1, a2, a3.
  const MultiPoly a1 = MultiPoly::variable(Q, 3, 0), a2 = MultiPoly::variable(Q, 3, 1), a3 = MultiPoly::variable(Q, 3, 2);
  CHECK(cubic_invariants(a1, a2, a3).delta == sylvester_cubic_discriminant(a1, a2, a3));
  // Random constants, including over finite fields of odd characteristic.
  Rng rng(51);
  for (const Field& k : {Q, make_prime_field(5), make_prime_field(7)}) {
    for (int i = 0; i < 100; ++i) {
      const MultiPoly x = MultiPoly::constant(rng.element(k), 1), y = MultiPoly::constant(rng.element(k), 1),
                      z = MultiPoly::constant(rng.element(k), 1);
      CHECK(cubic_invariants(x, y, z).delta == sylvester_cubic_discriminant(x, y, z));
    }
  }
}

TEST_CASE("cubic classification") {
  const MultiPoly zero(Q, 1);
  CHECK(classify_cubic_galois(zero, c(Q, -3, 1), c(Q, 1, 1)) == CubicGalois::Cyclic3);
  CHECK(classify_cubic_galois(zero, c(Q, -1, 1), c(Q, -1, 1)) == CubicGalois::Sym3);
  CHECK(classify_cubic_galois(zero, zero, zero) == CubicGalois::NotApplicable);
  CHECK(classify_cubic_galois(MultiPoly(F2, 1), c(F2, 1, 1), c(F2, 1, 1)) == CubicGalois::NotApplicable);
  // Over k(y): x^3 - 3 y^2 x + y^3 has discriminant 81 y^6.
  const MultiPoly y = MultiPoly::variable(Q, 1, 0);
  CHECK(classify_cubic_galois(zero, y.pow(2).scaled(Q.from_int(-3)), y.pow(3)) == CubicGalois::Cyclic3);
  CHECK(classify_cubic_galois(zero, -y, -y) == CubicGalois::Sym3);
}

TEST_CASE("cyclic cubic never has exactly one root mod p") {
  int sym3_single_root = 0;
  for (std::uint64_t p : {5, 7, 11, 13, 17, 19, 29, 31, 37, 41, 43, 47}) {
    const Field k = make_prime_field(p);
    const int cyc = root_count({1, -3, 0}, k);
    CHECK((cyc == 0 || cyc == 3));
    if (root_count({-1, -1, 0}, k) == 1) ++sym3_single_root;
  }
  CHECK(sym3_single_root > 0);
}

TEST_CASE("resolvent cubic examples") {
  const MultiPoly zero(Q, 2);
  const MultiPoly a = MultiPoly::variable(Q, 2, 0), b = MultiPoly::variable(Q, 2, 1);
  const auto r1 = resolvent_cubic(zero, zero, zero, a);
  CHECK(r1.b1.is_zero());
  CHECK(r1.b2 == a.scaled(Q.from_int(-4)));
  CHECK(r1.b3.is_zero());
  const auto r2 = resolvent_cubic(zero, a, b, zero);
  CHECK(r2.b1 == -a);
  CHECK(r2.b2.is_zero());
  CHECK(r2.b3 == -(b * b));
}

TEST_CASE("char-2 resolvent simplification") {
  const MultiPoly zero(F2, 3);
  const MultiPoly a2 = MultiPoly::variable(F2, 3, 0), a3 = MultiPoly::variable(F2, 3, 1), a4 = MultiPoly::variable(F2, 3, 2);
  const auto r = resolvent_cubic(zero, a2, a3, a4);
  CHECK(r.b1 == a2);
  CHECK(r.b2.is_zero());
  CHECK(r.b3 == a3 * a3);
  const auto [p, q] = depressed_resolvent_char2(a2, a3);
  CHECK(p == a2 * a2);
  CHECK(q == a3 * a3);
  const MultiPoly f2 = poly("X1^2 + X1*X2 + X2^2", F2), f3 = poly("X1^2*X2 + X1*X2^2", F2);
  CHECK(depressed_resolvent_char2(f2, f3).first == f2 * f2);
  CHECK(depressed_resolvent_char2(MultiPoly(F2, 3), f3).first.is_zero());
  CHECK(depressed_resolvent_char2(f2, MultiPoly(F2, 3)).second.is_zero());
  CHECK_THROWS_AS(depressed_resolvent_char2(MultiPoly(Q, 3), MultiPoly(Q, 3)), Error);
}

TEST_CASE("split_cubic_char2") {
  const auto r = split_cubic_char2(form("X1^2 + X1*X2 + X2^2", F2), form("X1^2*X2 + X1*X2^2", F2), F2);
  REQUIRE(r.has_value());
  std::vector<std::string> names;
  for (const Form& b : *r) names.push_back(b.to_string());
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"X1", "X1 + X2", "X2"});
  CHECK_FALSE(split_cubic_char2(form("X1^2", F2), zero_form(F2, 3), F2).has_value());
  const Field f4 = make_extension_field(2, 2);
  CHECK_FALSE(split_cubic_char2(zero_form(f4, 2), form("X1^2*X2", f4), f4).has_value());
  CHECK_THROWS_AS(split_cubic_char2(form("X1^2", F3), form("X1^3", F3), F3), Error);
}

TEST_CASE("split_cubic_char2 on products of random roots") {
  Rng rng(52);
  for (const Field& k : {F2, make_extension_field(2, 2), make_extension_field(2, 3)}) {
    int found = 0;
    for (int i = 0; i < 60; ++i) {
      const Form b1 = rng.nonzero_form(k, 3, 1, 0.8, 1), b2 = rng.nonzero_form(k, 3, 1, 0.8, 1);
      const Form b3 = b1 + b2;
      if (b3.is_zero()) continue;
      const Form f2 = b1 * b2 + b1 * b3 + b2 * b3;
      const Form f3 = b1 * b2 * b3;
      const auto r = split_cubic_char2(f2, f3, k);
      REQUIRE(r.has_value());
      ++found;
      const auto& [x, y, z] = *r;
      CHECK((x + y + z).is_zero());
      CHECK(x * y + x * z + y * z == f2);
      CHECK(x * y * z == f3);
      std::vector<Form> want{b1, b2, b3}, got{x, y, z};
      for (const Form& w : want) CHECK(std::count(got.begin(), got.end(), w) >= 1);
    }
    CHECK(found > 30);
  }
}

TEST_CASE("char3_negsquare") {
  CHECK(char3_negsquare(poly("-X2^2", F3), false) == poly("X2", F3));
  CHECK(char3_negsquare(poly("2*X2^2", F3), false) == poly("X2", F3));
  CHECK_FALSE(char3_negsquare(poly("X1*X2", F3), true).has_value());
  const auto ext = char3_negsquare(poly("X2^2", F3), true);
  REQUIRE(ext.has_value());
  CHECK(ext->field().order() == 9);
  CHECK(-(*ext * *ext) == poly("X2^2", F3).embedded(Embedding(F3, ext->field())));
  CHECK_THROWS_AS(char3_negsquare(poly("X2^2", Q), false), Error);
}

TEST_CASE("quartic classification agrees with root enumeration") {
  Rng rng(53);
  for (std::uint64_t p : {3, 5, 7, 11}) {
    const Field k = make_prime_field(p);
    std::map<QuarticGalois, int> seen;
    for (int i = 0; i < 60; ++i) {
      std::vector<long long> a;
      for (int j = 0; j < 4; ++j) a.push_back(rng.integer(0, static_cast<long long>(p) - 1));
      const int expect = expected_resolvent_roots(p, a);
      if (expect < 0) continue;
      const auto got = classify_quartic_galois(k.from_int(a[0]), k.from_int(a[1]), k.from_int(a[2]), k.from_int(a[3]));
      ++seen[got];
      const QuarticGalois want =
          expect == 3 ? QuarticGalois::KleinFour : (expect == 1 ? QuarticGalois::D4OrC4 : QuarticGalois::S4OrA4);
      CAPTURE(p);
      CAPTURE(a[0]);
      CAPTURE(a[1]);
      CAPTURE(a[2]);
      CAPTURE(a[3]);
      CHECK(got == want);
    }
    CHECK(seen.size() >= 2);
  }
  CHECK_THROWS_AS(classify_quartic_galois(Q.one(), Q.one(), Q.one(), Q.one()), Error);
}
