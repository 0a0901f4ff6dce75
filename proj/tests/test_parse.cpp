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

#include "galoispt/parse.hpp"
#include "support.hpp"

using namespace galoispt;
using galoispt::testing::Rng;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("field literals") {
  CHECK(parse_field("Q").is_rationals());
  CHECK(parse_field("GF(7)").order() == 7);
  CHECK(parse_field(" GF( 3^2 ) ").order() == 9);
  const Field f = parse_field("GF(2^2; 1,1,1)");
  CHECK(f.order() == 4);
  CHECK(parse_field(f.to_string()) == f);
  CHECK(parse_field(make_extension_field(3, 4).to_string()) == make_extension_field(3, 4));
  CHECK(code_of([] { parse_field("GF(6)"); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { parse_field("GF(2^2; 1,0,1)"); }) == ErrorCode::ReducibleModulus);
  CHECK(code_of([] { parse_field("R"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_field("GF(3"); }) == ErrorCode::ParseError);
}

TEST_CASE("elements") {
  const Field q = make_rationals();
  CHECK(parse_element("-3/6", q) == q.from_rational(mpq_class(-1, 2)));
  const Field f9 = make_extension_field(3, 2);
  CHECK(parse_element("[1,2]", f9) == f9.from_coeffs({1, 2}));
  CHECK(parse_element("4", make_prime_field(3)) == make_prime_field(3).one());
  CHECK(code_of([&] { parse_element("1/0", q); }) == ErrorCode::ParseError);
}

TEST_CASE("polynomials") {
  const Field q = make_rationals();
  const MultiPoly p = parse_poly("X0^3*X2 - X0*X2^3 + X1^4", q);
  CHECK(p.nvars() == 3);
  CHECK(p.size() == 3);
  CHECK(p.is_homogeneous());
  CHECK(parse_poly("X1", q).nvars() == 2);
  CHECK(parse_poly("X1", q, 3).nvars() == 3);
  CHECK(parse_poly("X0*X1 + X1*X0", q) == parse_poly("2*X0*X1", q));
  CHECK(parse_poly(" - X0^2+X1^2 ", q).to_string() == "-X0^2 + X1^2");
  CHECK(parse_poly("-1/2*X0^2", q).to_string() == "-1/2*X0^2");
  CHECK(parse_poly("0", q, 3).is_zero());
}

TEST_CASE("parse errors carry a column") {
  const Field q = make_rationals();
  try {
    parse_poly("X0^2 + * X1", q);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("column 8") != std::string::npos);
  }
  CHECK(code_of([&] { parse_poly("X0^", q); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_poly("Y0", q); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_poly("X10", q); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_poly("[1,2]*X0", q); }) == ErrorCode::ParseError);
}

TEST_CASE("points") {
  const Field f9 = make_extension_field(3, 2);
  const auto pt = parse_point("1,[0,1],2", f9);
  REQUIRE(pt.size() == 3);
  CHECK(pt[1] == f9.from_coeffs({0, 1}));
  CHECK(parse_point("1/2, -1", make_rationals()).size() == 2);
}

TEST_CASE("printed polynomials parse back") {
  Rng rng(31);
  for (const Field& k : {make_rationals(), make_prime_field(5), make_extension_field(2, 3), make_extension_field(3, 2)}) {
    for (int i = 0; i < 200; ++i) {
      const Form f = rng.form(k, 3, static_cast<int>(rng.integer(0, 5)));
      CHECK(parse_poly(f.to_string(), k, 3) == f.poly());
    }
  }
}
