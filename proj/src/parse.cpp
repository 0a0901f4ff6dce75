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

#include "galoispt/parse.hpp"

#include <cctype>
#include <optional>
#include <utility>

namespace galoispt {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      error("expected an integer");
    }
    std::string s(text_.substr(start, pos_ - start));
    if (s[0] == '+') s.erase(0, 1);
    return mpz_class(s);
  }

  std::uint64_t small(std::uint64_t limit, const char* what) {
    const std::size_t start = pos_;
    const mpz_class v = integer();
    if (v < 0 || v > limit) {
      pos_ = start;
      error(std::string(what) + " out of range");
    }
    return v.get_ui();
  }

  [[noreturn]] void error(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "parse",
                "column " + std::to_string(pos_ + 1) + ": " + what + " in '" + std::string(text_) + "'");
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Element coefficient(Cursor& c, const Field& field) {
  if (c.accept('[')) {
    std::vector<long long> digits;
    do {
      const mpz_class v = c.integer();
      if (!v.fits_slong_p()) c.error("coefficient too large");
      digits.push_back(v.get_si());
    } while (c.accept(','));
    c.expect(']');
    if (!field.is_finite()) c.error("vector coefficient over Q");
    if (digits.size() > static_cast<std::size_t>(field.degree())) c.error("vector longer than the field degree");
    return field.from_coeffs(digits);
  }
  const mpz_class num = c.integer();
  if (c.accept('/')) {
    const mpz_class den = c.integer();
    if (den == 0) c.error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    try {
      return field.from_rational(q);
    } catch (const Error&) {
      c.error("denominator not invertible in " + field.to_string());
    }
  }
  return field.from_integer(num);
}

struct RawTerm {
  Monomial mono;
  Element coeff;
};

RawTerm term(Cursor& c, const Field& field, int& max_var) {
  RawTerm t{Monomial{}, field.one()};
  do {
    const char ch = c.peek();
    if (ch == 'X' || ch == 'x') {
      c.accept(ch);
      const std::size_t idx = c.small(kMaxVars - 1, "variable index");
      std::uint64_t e = 1;
      if (c.accept('^')) e = c.small(255, "exponent");
      if (t.mono.exp[idx] + e > 255) c.error("exponent too large");
      t.mono.exp[idx] = static_cast<std::uint8_t>(t.mono.exp[idx] + e);
      max_var = std::max(max_var, static_cast<int>(idx));
    } else if (ch == '[' || std::isdigit(static_cast<unsigned char>(ch))) {
      t.coeff *= coefficient(c, field);
    } else {
      c.error("expected a coefficient or variable");
    }
  } while (c.accept('*'));
  return t;
}

}  // namespace

Field parse_field(std::string_view text) {
  Cursor c(text);
  if (c.accept('Q')) {
    if (!c.at_end()) c.error("trailing input");
    return make_rationals();
  }
  if (!(c.accept('G') && c.accept('F'))) c.error("expected Q or GF(...)");
  c.expect('(');
  const std::uint64_t p = c.small(std::uint64_t{1} << 62, "characteristic");
  int k = 1;
  std::optional<std::vector<std::uint64_t>> modulus;
  if (c.accept('^')) k = static_cast<int>(c.small(64, "extension degree"));
  if (c.accept(';')) {
    modulus.emplace();
    do {
      modulus->push_back(c.small(p ? p - 1 : 0, "modulus coefficient"));
    } while (c.accept(','));
  }
  c.expect(')');
  if (!c.at_end()) c.error("trailing input");
  return make_extension_field(p, k, modulus);
}

Element parse_element(std::string_view text, const Field& field) {
  Cursor c(text);
  bool negative = false;
  if (c.peek() == '-') {
    c.accept('-');
    negative = true;
  }
  Element e = coefficient(c, field);
  if (!c.at_end()) c.error("trailing input");
  return negative ? -e : e;
}

MultiPoly parse_poly(std::string_view text, const Field& field, int min_nvars) {
  Cursor c(text);
  std::vector<RawTerm> terms;
  int max_var = -1;
  bool first = true;
  while (first || !c.at_end()) {
    bool negative = false;
    if (c.accept('-')) {
      negative = true;
    } else if (!c.accept('+') && !first) {
      c.error("expected '+' or '-'");
    }
    RawTerm t = term(c, field, max_var);
    if (negative) t.coeff = -t.coeff;
    terms.push_back(std::move(t));
    first = false;
  }
  MultiPoly out(field, std::max(min_nvars, max_var + 1));
  for (const auto& t : terms) out.add_term(t.mono, t.coeff);
  return out;
}

std::vector<Element> parse_point(std::string_view text, const Field& field) {
  std::vector<Element> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char ch = i < text.size() ? text[i] : ',';
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch != ',' || depth > 0) continue;
    out.push_back(parse_element(text.substr(start, i - start), field));
    start = i + 1;
  }
  return out;
}

}  // namespace galoispt
