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

#include "galoispt/oracle.hpp"
#include "support.hpp"

using namespace galoispt;
using namespace galoispt::testing;
using S = VerdictStatus;

namespace {

const Field F2 = make_prime_field(2);
const Field F3 = make_prime_field(3);
const Field F5 = make_prime_field(5);

void check_result(const Form& f, const OracleResult& r) {
  CHECK(r.order == static_cast<long long>(r.elements.size()));
  CHECK(r.order >= 1);
  CHECK(is_closed(r));
  const Form g = f.field() == r.search_field ? f : f.embedded(Embedding(f.field(), r.search_field));
  bool has_identity = false;
  for (const auto& e : r.elements) {
    CHECK(apply_linear_change(e.matrix, g) == g.scaled(e.scalar));
    for (int row = 1; row < e.matrix.size(); ++row) {
      for (int col = 0; col < e.matrix.size(); ++col) CHECK(e.matrix.at(row, col) == (row == col ? r.search_field.one() : r.search_field.zero()));
    }
    CHECK(r.order % e.order == 0);
    if (e.matrix.is_identity()) has_identity = true;
  }
  CHECK(has_identity);
}

// Extension degree over f's field needed to hold the checker's generators,
// or 0 when the generators are missing.
int needed_degree(const Form& f, const GaloisVerdict& v) {
  int deg = v.witness->substitution.field().degree();
  if (v.witness->generators.empty()) return 0;
  for (const auto& g : v.witness->generators) deg = std::max(deg, g.field().degree());
  return deg / f.field().degree();
}

}  // namespace

TEST_CASE("char-3 fixture stabilizer") {
  const auto r = enumerate_stabilizer(char3_fixture(), 1);
  check_result(char3_fixture(), r);
  CHECK(r.order == 3);
  CHECK(r.structure == GroupDesc::cyclic(3));
  for (const auto& e : r.elements) {
    CHECK(e.matrix.at(0, 0).is_one());
    CHECK(e.matrix.at(0, 1).is_zero());
    if (!e.matrix.is_identity()) CHECK(e.order == 3);
  }
}

TEST_CASE("Fermat quartic stabilizer over GF(5)") {
  const auto r = enumerate_stabilizer(fermat(F5), 1);
  check_result(fermat(F5), r);
  CHECK(r.order == 4);
  CHECK(r.structure == GroupDesc::cyclic(4));
  for (const auto& e : r.elements) {
    CHECK(e.matrix.at(0, 0).pow(4).is_one());
    CHECK(e.matrix.at(0, 1).is_zero());
    CHECK(e.matrix.at(0, 2).is_zero());
  }
}

TEST_CASE("Klein fixture stabilizer") {
  const auto r = enumerate_stabilizer(klein_fixture(), 1);
  check_result(klein_fixture(), r);
  CHECK(r.order == 4);
  CHECK(r.structure == GroupDesc::klein_four());
  int involutions = 0;
  for (const auto& e : r.elements) {
    CHECK(e.matrix.at(0, 0).is_one());
    if (e.order == 2) ++involutions;
  }
  CHECK(involutions == 3);
}

TEST_CASE("brute_force_is_galois examples") {
  CHECK(brute_force_is_galois(char3_fixture(), PointKind::Inner, 1).is_galois);
  CHECK(brute_force_is_galois(fermat(F5), PointKind::Outer, 1).is_galois);
  const auto v = brute_force_is_galois(form("X2*X0^3 + X1^2*X2*X0 + X1^4 + X2^4", F5), PointKind::Inner, 2);
  CHECK_FALSE(v.is_galois);
  CHECK(v.result.order == 1);
  CHECK(v.result.structure == GroupDesc::trivial());
  CHECK_FALSE(v.caveat.empty());
  // GF(3) lacks i; GF(9) supplies the full cyclic group.
  CHECK(brute_force_is_galois(fermat(F3), PointKind::Outer, 1).result.order == 2);
  CHECK(brute_force_is_galois(fermat(F3), PointKind::Outer, 2).is_galois);
}

TEST_CASE("oracle errors") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code([] { enumerate_stabilizer(fermat(make_rationals()), 1); }) == ErrorCode::FieldTooLarge);
  CHECK(code([] { enumerate_stabilizer(fermat(make_prime_field(83)), 1); }) == ErrorCode::FieldTooLarge);
  CHECK(code([] { enumerate_stabilizer(fermat(make_prime_field(11)), 2); }) == ErrorCode::FieldTooLarge);
  CHECK(code([] { enumerate_stabilizer(fermat(F3), 3); }) == ErrorCode::FieldTooLarge);
  CHECK(code([] { enumerate_stabilizer(form("X0^4 + X3^4", F3, 4), 1); }) == ErrorCode::TooManyVariables);
  CHECK(code([] { brute_force_is_galois(fermat(F5), PointKind::Inner, 1); }) == ErrorCode::PreconditionFailed);
  CHECK(code([] { brute_force_is_galois(char3_fixture(), PointKind::Outer, 1); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("group classification") {
  CHECK(classify_group({1}, 5) == GroupDesc::trivial());
  CHECK(classify_group({1, 2, 2, 2}, 2) == GroupDesc::klein_four());
  CHECK(classify_group({1, 4, 2, 4}, 5) == GroupDesc::cyclic(4));
  // S3 as (Z/3) x| (Z/2) in characteristic 3.
  CHECK(classify_group({1, 3, 3, 2, 2, 2}, 3) == GroupDesc::semidirect(3, 1, 2));
  CHECK(classify_group({1, 3, 3, 2, 2, 2}, 5).structure == GroupDesc::Structure::Other);
}

TEST_CASE("parallel enumeration is deterministic") {
  const Form f = klein_fixture();
  const auto a = enumerate_stabilizer(f, 2, 1);
  const auto b = enumerate_stabilizer(f, 2, 4);
  REQUIRE(a.order == b.order);
  for (std::size_t i = 0; i < a.elements.size(); ++i) CHECK(a.elements[i].matrix == b.elements[i].matrix);
}

TEST_CASE("checker agrees with the oracle on random quartics") {
  Rng rng(71);
  // Irreducibility is tested, not assumed: a fourth power of a linear form
  // has a larger stabilizer than any Galois group.
  const CheckOptions heuristic{false, 8};
  for (const Field& k : {F2, F3, make_extension_field(2, 2), F5, make_prime_field(7), make_extension_field(3, 2)}) {
    CAPTURE(k.to_string());
    int decided = 0;
    for (int i = 0; i < 30; ++i) {
      for (PointKind kind : {PointKind::Inner, PointKind::Outer}) {
        Form f = rng.quartic(k, kind, 0.5);
        if (i % 3 == 0) {
          // Bias toward positives: translate a normal form.
          const Form h = rng.form(k, 3, 4, 0.6, 1);
          const Form nf = (kind == PointKind::Inner ? form("X2*X0^3", k) : form("X0^4", k)) + h;
          const Form l = rng.form(k, 3, 1, 0.7, 1);
          const LinearChange t(k, 3, {k.one(), l.poly().coefficient(Monomial{{0, 1}}), l.poly().coefficient(Monomial{{0, 0, 1}}),
                                      k.zero(), k.one(), k.zero(), k.zero(), k.zero(), k.one()});
          f = apply_linear_change(t, nf);
        }
        const auto v = check_point(f, kind, heuristic);
        if (v.status == S::ExtendableGalois) {
          const int e = needed_degree(f, v);
          if (e == 0 || e > 2 || (e == 2 && k.order() * k.order() > 81)) continue;
          const auto o = brute_force_is_galois(f, kind, e);
          CAPTURE(f.to_string());
          CHECK(o.is_galois);
          ++decided;
        } else if (v.status == S::NotGalois) {
          const int e = k.order() * k.order() <= 81 ? 2 : 1;
          const auto o = brute_force_is_galois(f, kind, e);
          CAPTURE(f.to_string());
          CHECK_FALSE(o.is_galois);
          ++decided;
        }
      }
    }
    CHECK(decided > 20);
  }
}
