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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "galoispt/cli.hpp"
#include "galoispt/report.hpp"
#include "support.hpp"

using namespace galoispt;
using namespace galoispt::testing;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

ErrorCode parse_error(const std::vector<std::string>& args) {
  try {
    parse_job(args);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

const std::string kChar3 = "X0^3*X2 - X0*X2^3 + X1^4";

}  // namespace

TEST_CASE("parse_job examples") {
  const Job j = parse_job({"check-inner", "--field", "GF(3)", "--poly", kChar3});
  CHECK(j.command == Command::CheckInner);
  CHECK(j.field->order() == 3);
  CHECK(*j.form == char3_fixture());
  REQUIRE(j.point.size() == 3);
  CHECK(j.point[0].is_one());
  CHECK(j.point[1].is_zero());
  CHECK(j.point[2].is_zero());
  CHECK_FALSE(j.json);

  const std::string path = "cli_test_fermat.txt";
  {
    std::ofstream f(path);
    f << "X0^4 + X1^4 + X2^4\n";
  }
  const Job t = parse_job({"transfer", "--kind", "outer", "--poly", "@" + path, "--targets", "upto:20"});
  std::remove(path.c_str());
  CHECK(t.command == Command::Transfer);
  CHECK(t.kind == PointKind::Outer);
  CHECK(t.targets == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(*t.form == fermat(make_rationals()));

  CHECK(parse_error({"check-inner", "--point", "0,1", "--poly", "X0^3*X2 + X1^4 + X2^4"}) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("parse_job options") {
  const Job j = parse_job({"oracle", "--field", "GF(5)", "--poly", "X0^4 + X1^4", "--point", "1,0,0", "--ext-degree", "2",
                           "--kind", "outer", "--json", "--assume-irreducible", "--trials", "4"});
  CHECK(j.form->nvars() == 3);
  CHECK(j.ext_degree == 2);
  CHECK(j.kind == PointKind::Outer);
  CHECK(j.json);
  CHECK(j.assume_irreducible);
  CHECK(j.trials == 4);
  CHECK(parse_job({"transfer", "--kind", "inner", "--poly", "X0^4", "--targets", "5,7"}).targets ==
        std::vector<std::uint64_t>{5, 7});
}

TEST_CASE("parse_job errors") {
  CHECK(parse_error({"check-inner", "--poly", "X0^4", "--bogus"}) == ErrorCode::ParseError);
  CHECK(parse_error({"frobnicate", "--poly", "X0^4"}) == ErrorCode::ParseError);
  CHECK(parse_error({"check-inner"}) == ErrorCode::ParseError);
  CHECK(parse_error({"transfer", "--poly", "X0^4"}) == ErrorCode::ParseError);
  CHECK(parse_error({"transfer", "--kind", "sideways", "--poly", "X0^4"}) == ErrorCode::ParseError);
  CHECK(parse_error({"check-inner", "--poly", "X0^4", "--targets", "5,x"}) == ErrorCode::ParseError);
  CHECK(parse_error({"check-inner", "--poly", "X0^4", "--ext-degree", "3"}) == ErrorCode::ParseError);
  CHECK(parse_error({"check-inner", "--poly", "X0^4 - X0^4"}) == ErrorCode::ZeroForm);
  CHECK(parse_error({"check-inner", "--poly", "@/nonexistent/poly.txt"}) == ErrorCode::ParseError);
  try {
    parse_job({"check-inner", "--poly", "X0^4 + * X1^4"});
    FAIL("no error raised");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
}

TEST_CASE("exit codes follow the verdict") {
  CHECK(exit_code_for(VerdictStatus::ExtendableGalois) == 0);
  CHECK(exit_code_for(VerdictStatus::NotGalois) == 0);
  CHECK(exit_code_for(VerdictStatus::PreconditionFailed) == 2);
  CHECK(exit_code_for(VerdictStatus::ExtensionRequired) == 3);
  CHECK(exit_code_for(VerdictStatus::Unknown) == 3);

  const Run a = run({"check-inner", "--field", "GF(3)", "--poly", kChar3, "--assume-irreducible"});
  CHECK(a.code == 0);
  CHECK(a.out.find("ExtendableGalois") != std::string::npos);
  CHECK(a.out.find("G: X2") != std::string::npos);

  const Run b = run({"check-outer", "--field", "GF(5)", "--poly", "X0^4 + X1^4 + X2^4"});
  CHECK(b.code == 0);
  CHECK(b.out.find("Cyclic(4)") != std::string::npos);

  const Run c = run({"check-outer", "--field", "GF(2)", "--poly", "X0^4 + X1^2*X2*X0 + X2^4", "--assume-irreducible"});
  CHECK(c.code == 3);
  CHECK(c.out.find("ExtensionRequired") != std::string::npos);
  CHECK(c.out.find("note:") != std::string::npos);

  // The point lies off the curve: precondition failure for an inner check.
  const Run d = run({"check-inner", "--field", "GF(5)", "--poly", "X0^4 + X1^4 + X2^4"});
  CHECK(d.code == 2);

  const Run e = run({"check-inner", "--poly", "X0^4", "--nope"});
  CHECK(e.code == 1);
  const Run f = run({"check-inner", "--point", "0,1", "--poly", "X0^3*X2 + X1^4 + X2^4"});
  CHECK(f.code == 1);
  CHECK(f.err.find("error:") == 0);
}

TEST_CASE("non-default point is normalized") {
  // The char-3 fixture with X0 and X1 swapped, checked at (0,1,0).
  const Run r = run({"check-inner", "--field", "GF(3)", "--poly", "X1^3*X2 - X1*X2^3 + X0^4", "--point", "0,1,0",
                     "--assume-irreducible"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ExtendableGalois") != std::string::npos);
}

TEST_CASE("json output") {
  const Run r = run({"check-outer", "--field", "GF(5)", "--poly", "X0^4 + X1^4 + X2^4", "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "check-outer");
  CHECK(j["verdict"]["status"] == "ExtendableGalois");

  const Run t = run({"transfer", "--kind", "inner", "--poly", "X2*X0^3 + X1^4 + X2^4", "--targets", "5,7", "--json"});
  REQUIRE(t.code == 0);
  const json tj = json::parse(t.out);
  CHECK(tj["schema"] == 1);
  CHECK(tj["bound"] == "864");
  CHECK(tj["bound"].is_string());
  CHECK(tj["height"].is_string());
  CHECK(tj["tested_targets"].size() == 2);

  const Run c = run({"content", "--poly", "6*X0^4 + 12*X1^4 + 18*X2^4", "--source", "5", "--json"});
  REQUIRE(c.code == 0);
  const json cj = json::parse(c.out);
  CHECK(cj["content"] == "6");
  CHECK(cj["height"] == "3");
  CHECK(cj["outer_bound"].is_string());

  const Run o = run({"oracle", "--field", "GF(5)", "--poly", "X0^4 + X1^4 + X2^4", "--kind", "outer", "--json"});
  REQUIRE(o.code == 0);
  const json oj = json::parse(o.out);
  CHECK(oj["is_galois"] == true);
  CHECK(oj["result"]["order"] == 4);

  const Run rv = run({"resolvent", "--poly", "X0^3 - 3*X0*X1^2 + X1^3", "--json"});
  REQUIRE(rv.code == 0);
  CHECK(json::parse(rv.out)["classification"] == "Cyclic3");
}

TEST_CASE("json verdicts round-trip") {
  const std::vector<std::vector<std::string>> jobs{
      {"check-inner", "--field", "GF(3)", "--poly", kChar3, "--assume-irreducible", "--json"},
      {"check-outer", "--field", "GF(5)", "--poly", "X0^4 + X1^4 + X2^4", "--json"},
      {"check-outer", "--poly", "X0^4 + X1^4 + X2^4", "--json"},
      {"check-outer", "--field", "GF(2)", "--poly", "X0^4 + X1^2*X2*X0 + X2^4", "--assume-irreducible", "--json"},
      {"check-outer", "--field", "GF(2)",
       "--poly", "X0^4 + X0^3*X1 + X0^3*X2 + X0^2*X1*X2 + X0*X1^2*X2 + X0*X1*X2^2 + X1^3*X2", "--assume-irreducible",
       "--json"},
      {"check-inner", "--field", "GF(7)", "--poly", "X2*X0^3 + X1*X2*X0^2 + X1^4 + X2^4", "--json"},
  };
  for (const auto& args : jobs) {
    const Run r = run(args);
    CAPTURE(r.out);
    const json j = json::parse(r.out);
    const json v = j["verdict"];
    const GaloisVerdict back = verdict_from_json(v, 3);
    CHECK(to_json(back) == v);
    CHECK(exit_code_for(back.status) == r.code);
  }
  CHECK_THROWS_AS(verdict_from_json(json{{"status", "Sideways"}}, 3), Error);
}
