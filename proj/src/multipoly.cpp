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

#include "galoispt/multipoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "unipoly.hpp"

namespace galoispt {

namespace {

constexpr std::string_view kModule = "multipoly";
constexpr std::uint64_t kMaxSearchField = 81;

[[noreturn]] void fail(ErrorCode code, const std::string& what) {
  throw Error(code, kModule, what);
}

void require_same_field(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.field() == b.field())) {
    fail(ErrorCode::FieldMismatch, "polynomials over " + a.field().to_string() + " and " +
                                       b.field().to_string());
  }
  if (a.nvars() != b.nvars()) {
    fail(ErrorCode::SizeMismatch, "polynomials in " + std::to_string(a.nvars()) + " and " +
                                      std::to_string(b.nvars()) + " variables");
  }
}

bool is_integer(const Element& c) {
  return c.field().is_rationals() && c.rational().get_den() == 1;
}

}  // namespace

// ---------------------------------------------------------------- Monomial

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxVars; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    const int e = a.exp[i] + b.exp[i];
    if (e > 255) fail(ErrorCode::InvalidArgument, "exponent overflow");
    m.exp[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint8_t>(a.exp[i] - b.exp[i]);
  return m;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exp < b.exp;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(Field field, int nvars) : field_(std::move(field)), nvars_(nvars) {
  if (nvars < 1 || nvars > kMaxVars) {
    fail(ErrorCode::TooManyVariables, "variable count must be in [1, " + std::to_string(kMaxVars) + "]");
  }
}

MultiPoly MultiPoly::constant(const Element& c, int nvars) {
  MultiPoly p(c.field(), nvars);
  p.add_term(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::variable(const Field& field, int nvars, int index) {
  if (index < 0 || index >= nvars) fail(ErrorCode::InvalidArgument, "variable index out of range");
  Monomial m;
  m.exp[index] = 1;
  return term(field.one(), nvars, m);
}

MultiPoly MultiPoly::term(const Element& c, int nvars, const Monomial& m) {
  MultiPoly p(c.field(), nvars);
  for (int i = nvars; i < kMaxVars; ++i) {
    if (m.exp[i]) fail(ErrorCode::InvalidArgument, "monomial uses a variable beyond nvars");
  }
  p.add_term(m, c);
  return p;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max<int>(d, m.exp[var]);
  return d;
}

std::vector<int> MultiPoly::support() const {
  std::vector<int> out;
  for (int i = 0; i < nvars_; ++i) {
    if (degree_in(i) > 0) out.push_back(i);
  }
  return out;
}

const MultiPoly::Terms::value_type& MultiPoly::leading_term() const {
  if (terms_.empty()) fail(ErrorCode::InvalidArgument, "leading term of the zero polynomial");
  return *terms_.rbegin();
}

Element MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Element& c) {
  if (!(c.field() == field_)) {
    fail(ErrorCode::FieldMismatch, "coefficient from " + c.field().to_string() + " in polynomial over " +
                                       field_.to_string());
  }
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(field_, nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
  return out;
}

MultiPoly MultiPoly::scaled(const Element& c) const {
  MultiPoly out(field_, nvars_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, v * c);
  return out;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) fail(ErrorCode::InvalidArgument, "negative power of a polynomial");
  MultiPoly result = constant(field_.one(), nvars_);
  MultiPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::embedded(const Embedding& emb) const {
  MultiPoly out(emb.target(), nvars_);
  for (const auto& [m, c] : terms_) out.add_term(m, emb(c));
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  require_same_field(a, b);
  MultiPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  require_same_field(a, b);
  MultiPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_field(a, b);
  MultiPoly out(a.field_, a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Element MultiPoly::evaluate(std::span<const Element> point) const {
  if (static_cast<int>(point.size()) != nvars_) {
    fail(ErrorCode::SizeMismatch, "point has " + std::to_string(point.size()) + " coordinates, expected " +
                                      std::to_string(nvars_));
  }
  Element acc = field_.zero();
  for (const auto& [m, c] : terms_) {
    Element t = c;
    for (int i = 0; i < nvars_; ++i) {
      if (m.exp[i]) t *= point[i].pow(m.exp[i]);
    }
    acc += t;
  }
  return acc;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool negative = c.field().is_rationals() && sgn(c.rational()) < 0;
    const Element mag = negative ? -c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (!mag.is_one() || m.degree() == 0) {
      os << mag.to_string();
      wrote = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (!m.exp[i]) continue;
      if (wrote) os << "*";
      os << "X" << i;
      if (m.exp[i] > 1) os << "^" << static_cast<int>(m.exp[i]);
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- Form

Form::Form(MultiPoly poly, int degree) : poly_(std::move(poly)), degree_(degree) {
  if (degree < 0) fail(ErrorCode::InvalidArgument, "negative form degree");
  for (const auto& [m, c] : poly_.terms()) {
    if (m.degree() != degree) {
      fail(ErrorCode::NonHomogeneous, "term of degree " + std::to_string(m.degree()) +
                                          " in a form of degree " + std::to_string(degree));
    }
  }
}

Form Form::of(MultiPoly poly) {
  if (poly.is_zero()) fail(ErrorCode::ZeroForm, "the zero polynomial has no degree");
  const int d = poly.total_degree();
  return Form(std::move(poly), d);
}

Form Form::zero(const Field& field, int nvars, int degree) {
  return Form(MultiPoly(field, nvars), degree);
}

Form operator+(const Form& a, const Form& b) {
  if (a.degree_ != b.degree_) fail(ErrorCode::InvalidArgument, "adding forms of different degrees");
  return Form(a.poly_ + b.poly_, a.degree_);
}

Form operator-(const Form& a, const Form& b) {
  if (a.degree_ != b.degree_) fail(ErrorCode::InvalidArgument, "subtracting forms of different degrees");
  return Form(a.poly_ - b.poly_, a.degree_);
}

Form operator*(const Form& a, const Form& b) { return Form(a.poly_ * b.poly_, a.degree_ + b.degree_); }

bool operator==(const Form& a, const Form& b) {
  return a.degree_ == b.degree_ && a.poly_ == b.poly_;
}

// ---------------------------------------------------------------- LinearChange

LinearChange::LinearChange(const Field& field, int size, std::vector<Element> entries, bool)
    : field_(field), size_(size), entries_(std::move(entries)) {}

LinearChange::LinearChange(const Field& field, int size, std::vector<Element> entries)
    : field_(field), size_(size), entries_(std::move(entries)) {
  if (size < 1 || entries_.size() != static_cast<std::size_t>(size) * size) {
    fail(ErrorCode::SizeMismatch, "matrix of size " + std::to_string(size) + " needs " +
                                      std::to_string(size * size) + " entries");
  }
  for (const auto& e : entries_) {
    if (!(e.field() == field_)) fail(ErrorCode::FieldMismatch, "matrix entry from another field");
  }
  if (determinant().is_zero()) fail(ErrorCode::NotInvertible, "singular matrix");
}

LinearChange LinearChange::identity(const Field& field, int size) {
  std::vector<Element> e(static_cast<std::size_t>(size) * size, field.zero());
  for (int i = 0; i < size; ++i) e[i * size + i] = field.one();
  return LinearChange(field, size, std::move(e), true);
}

Element LinearChange::determinant() const {
  std::vector<Element> m = entries_;
  const int n = size_;
  Element det = field_.one();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!m[r * n + col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return field_.zero();
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(m[pivot * n + c], m[col * n + c]);
      det = -det;
    }
    const Element pv = m[col * n + col];
    det *= pv;
    const Element inv = pv.inverse();
    for (int r = col + 1; r < n; ++r) {
      const Element f = m[r * n + col] * inv;
      if (f.is_zero()) continue;
      for (int c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
    }
  }
  return det;
}

LinearChange LinearChange::inverse() const {
  const int n = size_;
  std::vector<Element> m = entries_;
  LinearChange inv = identity(field_, n);
  auto& out = inv.entries_;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (m[pivot * n + col].is_zero()) ++pivot;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(m[pivot * n + c], m[col * n + c]);
        std::swap(out[pivot * n + c], out[col * n + c]);
      }
    }
    const Element pinv = m[col * n + col].inverse();
    for (int c = 0; c < n; ++c) {
      m[col * n + c] *= pinv;
      out[col * n + c] *= pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Element f = m[r * n + col];
      if (f.is_zero()) continue;
      for (int c = 0; c < n; ++c) {
        m[r * n + c] -= f * m[col * n + c];
        out[r * n + c] -= f * out[col * n + c];
      }
    }
  }
  return inv;
}

bool LinearChange::is_identity() const { return *this == identity(field_, size_); }

LinearChange LinearChange::embedded(const Embedding& emb) const {
  std::vector<Element> e;
  e.reserve(entries_.size());
  for (const auto& v : entries_) e.push_back(emb(v));
  return LinearChange(emb.target(), size_, std::move(e), true);
}

std::vector<Element> LinearChange::apply(std::span<const Element> v) const {
  if (static_cast<int>(v.size()) != size_) fail(ErrorCode::SizeMismatch, "vector length mismatch");
  std::vector<Element> out;
  for (int r = 0; r < size_; ++r) {
    Element acc = field_.zero();
    for (int c = 0; c < size_; ++c) acc += at(r, c) * v[c];
    out.push_back(acc);
  }
  return out;
}

LinearChange operator*(const LinearChange& a, const LinearChange& b) {
  if (a.size_ != b.size_) fail(ErrorCode::SizeMismatch, "matrix sizes differ");
  if (!(a.field_ == b.field_)) fail(ErrorCode::FieldMismatch, "matrices over different fields");
  const int n = a.size_;
  std::vector<Element> e(static_cast<std::size_t>(n) * n, a.field_.zero());
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Element& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) e[i * n + j] += aik * b.at(k, j);
    }
  }
  return LinearChange(a.field_, n, std::move(e), true);
}

bool operator==(const LinearChange& a, const LinearChange& b) {
  return a.size_ == b.size_ && a.field_ == b.field_ && a.entries_ == b.entries_;
}

std::vector<std::vector<std::string>> LinearChange::to_strings() const {
  std::vector<std::vector<std::string>> rows(size_);
  for (int r = 0; r < size_; ++r) {
    for (int c = 0; c < size_; ++c) rows[r].push_back(at(r, c).to_string());
  }
  return rows;
}

std::string LinearChange::to_string() const {
  std::string out = "[";
  const auto rows = to_strings();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out += " ";
      out += rows[r][c];
    }
  }
  return out + "]";
}

// ---------------------------------------------------------------- operations

MultiPoly apply_linear_change(const LinearChange& a, const MultiPoly& f) {
  if (a.size() != f.nvars()) {
    fail(ErrorCode::SizeMismatch, "matrix of size " + std::to_string(a.size()) + " acting on " +
                                      std::to_string(f.nvars()) + " variables");
  }
  if (!(a.field() == f.field())) fail(ErrorCode::FieldMismatch, "matrix and form over different fields");
  const int n = f.nvars();
  std::vector<std::vector<MultiPoly>> powers(n);
  for (int j = 0; j < n; ++j) {
    MultiPoly row(f.field(), n);
    for (int i = 0; i < n; ++i) {
      if (a.at(j, i).is_zero()) continue;
      Monomial m;
      m.exp[i] = 1;
      row.add_term(m, a.at(j, i));
    }
    const int top = f.degree_in(j);
    powers[j].push_back(MultiPoly::constant(f.field().one(), n));
    for (int e = 1; e <= top; ++e) powers[j].push_back(powers[j].back() * row);
  }
  MultiPoly out(f.field(), n);
  for (const auto& [m, c] : f.terms()) {
    MultiPoly t = MultiPoly::constant(c, n);
    for (int j = 0; j < n; ++j) {
      if (m.exp[j]) t = t * powers[j][m.exp[j]];
    }
    out = out + t;
  }
  return out;
}

Form apply_linear_change(const LinearChange& a, const Form& f) {
  return Form(apply_linear_change(a, f.poly()), f.degree());
}

std::vector<Form> decompose_by_x0(const Form& f) {
  const int d = f.degree();
  std::vector<MultiPoly> parts(d + 1, MultiPoly(f.field(), f.nvars()));
  for (const auto& [m, c] : f.poly().terms()) {
    const int i = d - m.exp[0];
    Monomial rest = m;
    rest.exp[0] = 0;
    parts[i].add_term(rest, c);
  }
  std::vector<Form> out;
  out.reserve(d + 1);
  for (int i = 0; i <= d; ++i) out.emplace_back(std::move(parts[i]), i);
  return out;
}

Form assemble_from_x0(std::span<const Form> parts) {
  if (parts.empty()) fail(ErrorCode::InvalidArgument, "no parts to assemble");
  const int d = static_cast<int>(parts.size()) - 1;
  MultiPoly out(parts[0].field(), parts[0].nvars());
  for (int i = 0; i <= d; ++i) {
    if (parts[i].degree() != i) fail(ErrorCode::InvalidArgument, "part degree mismatch");
    for (const auto& [m, c] : parts[i].poly().terms()) {
      if (m.exp[0]) fail(ErrorCode::InvalidArgument, "part depends on X0");
      Monomial full = m;
      full.exp[0] = static_cast<std::uint8_t>(d - i);
      out.add_term(full, c);
    }
  }
  return Form(std::move(out), d);
}

mpz_class content(const MultiPoly& f) {
  mpz_class g = 0;
  for (const auto& [m, c] : f.terms()) {
    if (!is_integer(c)) {
      fail(ErrorCode::NonIntegerCoefficient, "coefficient " + c.to_string() + " is not an integer");
    }
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.rational().get_num_mpz_t());
  }
  return g;
}

mpz_class height(const MultiPoly& f) {
  if (content(f) != 1) fail(ErrorCode::NotPrimitive, "height is defined for primitive forms");
  mpz_class h = 0;
  for (const auto& [m, c] : f.terms()) {
    mpz_class v = abs(c.rational().get_num());
    if (v > h) h = v;
  }
  return h;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& n, const MultiPoly& d) {
  if (d.is_zero()) fail(ErrorCode::DivisionByZeroForm, "division by the zero polynomial");
  require_same_field(n, d);
  const auto& [dm, dc] = d.leading_term();
  const Element dinv = dc.inverse();
  MultiPoly rem = n;
  MultiPoly quot(n.field(), n.nvars());
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    if (!dm.divides(rm)) return std::nullopt;
    const MultiPoly t = MultiPoly::term(rc * dinv, n.nvars(), rm / dm);
    quot.add_term(rm / dm, rc * dinv);
    rem = rem - t * d;
  }
  return quot;
}

std::optional<Form> exact_divide_form(const Form& n, const Form& d) {
  if (d.is_zero()) fail(ErrorCode::DivisionByZeroForm, "division by the zero form");
  if (n.degree() < d.degree()) {
    if (n.is_zero()) return Form::zero(n.field(), n.nvars(), 0);
    return std::nullopt;
  }
  auto q = exact_divide(n.poly(), d.poly());
  if (!q) return std::nullopt;
  return Form(std::move(*q), n.degree() - d.degree());
}

namespace {

std::optional<MultiPoly> sqrt_char2(const MultiPoly& q) {
  MultiPoly g(q.field(), q.nvars());
  for (const auto& [m, c] : q.terms()) {
    Monomial half;
    for (int i = 0; i < kMaxVars; ++i) {
      if (m.exp[i] % 2) return std::nullopt;
      half.exp[i] = m.exp[i] / 2;
    }
    g.add_term(half, *sqrt_in_field(c));
  }
  return g;
}

std::optional<MultiPoly> sqrt_by_matching(const MultiPoly& q) {
  const auto& [lm, lc] = q.leading_term();
  Monomial half;
  for (int i = 0; i < kMaxVars; ++i) {
    if (lm.exp[i] % 2) return std::nullopt;
    half.exp[i] = lm.exp[i] / 2;
  }
  auto root = sqrt_in_field(lc);
  if (!root) return std::nullopt;
  const int n = q.nvars();
  MultiPoly g = MultiPoly::term(*root, n, half);
  const Element inv_two_lead = (root->field().from_int(2) * *root).inverse();
  MultiPoly rem = q - g * g;
  Monomial last = half;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    if (!half.divides(rm)) return std::nullopt;
    const Monomial next = rm / half;
    if (!GrlexLess{}(next, last)) return std::nullopt;
    const MultiPoly t = MultiPoly::term(rc * inv_two_lead, n, next);
    rem = rem - (g + g + t) * t;
    g = g + t;
    last = next;
  }
  return g;
}

}  // namespace

std::optional<MultiPoly> sqrt_poly(const MultiPoly& q, bool allow_quadratic_extension) {
  if (q.is_zero()) return std::nullopt;
  auto attempt = [](const MultiPoly& p) -> std::optional<MultiPoly> {
    auto g = p.field().characteristic() == 2 ? sqrt_char2(p) : sqrt_by_matching(p);
    if (g && !(*g * *g == p)) return std::nullopt;
    return g;
  };
  if (auto g = attempt(q)) return g;
  if (!allow_quadratic_extension || q.field().characteristic() == 2) return std::nullopt;
  // Only a non-square leading coefficient can be repaired by extending.
  if (sqrt_in_field(q.leading_term().second)) return std::nullopt;
  auto ext = quadratic_extension(q.field());
  if (!ext) return std::nullopt;
  return attempt(q.embedded(Embedding(q.field(), *ext)));
}

std::optional<Form> sqrt_form(const Form& q, bool allow_quadratic_extension) {
  if (q.is_zero() || q.degree() % 2) return std::nullopt;
  auto g = sqrt_poly(q.poly(), allow_quadratic_extension);
  if (!g) return std::nullopt;
  return Form(std::move(*g), q.degree() / 2);
}

namespace {

// Normalized linear forms in the given variables: first coefficient 1.
std::vector<Form> normalized_linear_forms(const Field& field, int nvars, const std::vector<int>& vars) {
  std::vector<Form> out;
  const auto elems = field.elements();
  const std::size_t s = vars.size();
  for (std::size_t pivot = 0; pivot < s; ++pivot) {
    const std::size_t free = s - pivot - 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free; ++i) count *= elems.size();
    for (std::uint64_t code = 0; code < count; ++code) {
      MultiPoly l(field, nvars);
      Monomial pm;
      pm.exp[vars[pivot]] = 1;
      l.add_term(pm, field.one());
      std::uint64_t x = code;
      for (std::size_t i = 0; i < free; ++i) {
        Monomial m;
        m.exp[vars[pivot + 1 + i]] = 1;
        l.add_term(m, elems[x % elems.size()]);
        x /= elems.size();
      }
      out.emplace_back(std::move(l), 1);
    }
  }
  return out;
}

bool factor_order(const LinearFactor& a, const LinearFactor& b) {
  const auto& pa = a.factor.poly();
  const auto& pb = b.factor.poly();
  if (pa.size() != pb.size()) return pa.size() < pb.size();
  auto ia = pa.terms().rbegin();
  auto ib = pb.terms().rbegin();
  for (; ia != pa.terms().rend(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return GrlexLess{}(ib->first, ia->first);
    if (!(ia->second == ib->second)) return canonical_less(ia->second, ib->second);
  }
  return false;
}

}  // namespace

std::vector<LinearFactor> linear_factors(const Form& f, const Field& search_field) {
  if (f.is_zero()) fail(ErrorCode::ZeroForm, "linear factors of the zero form");
  if (!search_field.is_finite() || search_field.order() > kMaxSearchField) {
    fail(ErrorCode::FieldTooLarge, "linear-factor search needs a finite field with at most " +
                                       std::to_string(kMaxSearchField) + " elements");
  }
  const auto vars = f.poly().support();
  if (vars.size() > 3) {
    fail(ErrorCode::TooManyVariables, std::to_string(vars.size()) + " variables occur; the search handles 3");
  }
  Form g = f.field() == search_field ? f : f.embedded(Embedding(f.field(), search_field));
  std::vector<LinearFactor> out;
  if (g.degree() == 0) return out;
  for (const Form& l : normalized_linear_forms(search_field, f.nvars(), vars)) {
    int mult = 0;
    while (g.degree() > 0) {
      auto q = exact_divide_form(g, l);
      if (!q) break;
      g = std::move(*q);
      ++mult;
    }
    if (mult) out.push_back({l, mult});
    if (g.degree() == 0) break;
  }
  std::sort(out.begin(), out.end(), factor_order);
  return out;
}

std::string_view to_string(IrreducibilityResult::Kind kind) {
  switch (kind) {
    case IrreducibilityResult::Kind::Reducible: return "Reducible";
    case IrreducibilityResult::Kind::ProbablyIrreducible: return "ProbablyIrreducible";
    case IrreducibilityResult::Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

using detail::UniPoly;
using Kind = IrreducibilityResult::Kind;

// F(s*a + b) as a polynomial in s.
UniPoly restrict_to_line(const MultiPoly& f, const std::vector<Element>& a, const std::vector<Element>& b) {
  const Field& field = f.field();
  const int n = f.nvars();
  std::vector<std::vector<UniPoly>> powers(n);
  for (int j = 0; j < n; ++j) {
    const UniPoly lin(field, {b[j], a[j]});
    powers[j].push_back(UniPoly(field, {field.one()}));
    for (int e = 1; e <= f.degree_in(j); ++e) powers[j].push_back(powers[j].back() * lin);
  }
  UniPoly acc(field);
  for (const auto& [m, c] : f.terms()) {
    UniPoly t(field, {c});
    for (int j = 0; j < n; ++j) {
      if (m.exp[j]) t = t * powers[j][m.exp[j]];
    }
    acc = acc + t;
  }
  return acc;
}

bool some_line_is_irreducible(const Form& f, int trials) {
  const Field& field = f.field();
  std::mt19937_64 rng(0x5eed0000ull + static_cast<std::uint64_t>(trials));
  std::uniform_int_distribution<std::uint64_t> pick(0, field.order() - 1);
  const int n = f.nvars();
  for (int t = 0; t < trials; ++t) {
    std::vector<Element> a, b;
    for (int j = 0; j < n; ++j) {
      a.push_back(field.from_code(pick(rng)));
      b.push_back(field.from_code(pick(rng)));
    }
    const UniPoly g = restrict_to_line(f.poly(), a, b);
    if (g.degree() != f.degree()) continue;
    if (g.is_squarefree() && g.is_irreducible()) return true;
  }
  return false;
}

std::optional<Form> variable_factor(const Form& f) {
  for (int i = 0; i < f.nvars(); ++i) {
    bool divides_all = !f.is_zero();
    for (const auto& [m, c] : f.poly().terms()) {
      if (m.exp[i] == 0) {
        divides_all = false;
        break;
      }
    }
    if (divides_all && f.degree() > 1) return Form(MultiPoly::variable(f.field(), f.nvars(), i), 1);
  }
  return std::nullopt;
}

IrreducibilityResult over_finite(const Form& f, int trials) {
  if (auto v = variable_factor(f)) return {Kind::Reducible, v, "monomial factor"};
  if (f.field().order() <= kMaxSearchField && f.poly().support().size() <= 3) {
    auto lf = linear_factors(f, f.field());
    if (!lf.empty()) return {Kind::Reducible, lf.front().factor, "linear factor"};
  }
  if (some_line_is_irreducible(f, trials)) {
    return {Kind::ProbablyIrreducible, std::nullopt, "irreducible line restriction"};
  }
  return {Kind::Unknown, std::nullopt, "no irreducible line restriction found"};
}

}  // namespace

IrreducibilityResult irreducibility_heuristic(const Form& f, const Field& field, int trials) {
  if (f.is_zero() || f.degree() == 0) return {Kind::Unknown, std::nullopt, "constant form"};
  Form g = f.field() == field ? f : f.embedded(Embedding(f.field(), field));
  if (g.degree() == 1) return {Kind::ProbablyIrreducible, std::nullopt, "linear form"};
  if (field.is_finite()) return over_finite(g, trials);

  if (auto v = variable_factor(g)) return {Kind::Reducible, v, "monomial factor"};
  // Clear denominators, then look for a prime where the reduction is
  // irreducible; a factorization over Q would survive reduction.
  mpz_class lcm = 1;
  for (const auto& [m, c] : g.poly().terms()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  }
  MultiPoly integral = g.poly().scaled(field.from_integer(lcm));
  const mpz_class cont = content(integral);
  for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
    if (mpz_divisible_ui_p(cont.get_mpz_t(), p)) continue;
    const Field fp = make_prime_field(p);
    MultiPoly red(fp, g.nvars());
    for (const auto& [m, c] : integral.terms()) red.add_term(m, fp.from_integer(c.rational().get_num()));
    if (red.is_zero()) continue;
    if (some_line_is_irreducible(Form(std::move(red), g.degree()), trials)) {
      return {Kind::ProbablyIrreducible, std::nullopt,
              "irreducible line restriction mod " + std::to_string(p)};
    }
  }
  return {Kind::Unknown, std::nullopt, "no irreducible reduction found"};
}

}  // namespace galoispt
