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

#include "galoispt/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace galoispt {

namespace {

constexpr std::string_view kModule = "field";

// Extension fields beyond this many elements are rejected: modulus checks and
// embeddings enumerate field elements.
constexpr std::uint64_t kMaxExtensionOrder = 1ull << 24;
constexpr std::uint64_t kLogTableLimit = 1ull << 16;
constexpr std::uint64_t kMaxPrime = 1ull << 62;

[[noreturn]] void fail(ErrorCode code, const std::string& what) {
  throw Error(code, kModule, what);
}

using Digits = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Remainder of `a` modulo the monic `m` over GF(p); both low-to-high.
Digits poly_rem(Digits a, const Digits& m, std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back() % p;
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i) {
        a[shift + i] = (a[shift + i] + p - mulmod(lead, m[i], p)) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

bool poly_has_divisor_of_degree(const Digits& m, int deg, std::uint64_t p) {
  // Enumerate monic divisors of degree `deg` by their non-leading coefficients.
  std::uint64_t count = 1;
  for (int i = 0; i < deg; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    Digits div(deg + 1, 0);
    std::uint64_t x = c;
    for (int i = 0; i < deg; ++i) {
      div[i] = x % p;
      x /= p;
    }
    div[deg] = 1;
    Digits r = poly_rem(m, div, p);
    if (std::all_of(r.begin(), r.end(), [](std::uint64_t v) { return v == 0; })) {
      return true;
    }
  }
  return false;
}

bool is_irreducible_modulus(const Digits& m, std::uint64_t p) {
  const int k = static_cast<int>(m.size()) - 1;
  for (int deg = 1; 2 * deg <= k; ++deg) {
    if (poly_has_divisor_of_degree(m, deg, p)) return false;
  }
  return true;
}

}  // namespace

namespace detail {

struct FieldData {
  Field::Kind kind = Field::Kind::Rationals;
  std::uint64_t p = 0;
  int k = 1;
  std::uint64_t q = 0;
  Digits modulus;  // monic, k+1 entries; empty when k = 1
  // Discrete log tables for proper extensions; empty when q is large.
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> exp;

  Digits decode(std::uint64_t code) const {
    Digits d(k, 0);
    for (int i = 0; i < k; ++i) {
      d[i] = code % p;
      code /= p;
    }
    return d;
  }

  std::uint64_t encode(const Digits& d) const {
    std::uint64_t code = 0;
    for (int i = k - 1; i >= 0; --i) code = code * p + d[i];
    return code;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (k == 1) return (a + b) % p;
    Digits x = decode(a), y = decode(b);
    for (int i = 0; i < k; ++i) x[i] = (x[i] + y[i]) % p;
    return encode(x);
  }

  std::uint64_t neg(std::uint64_t a) const {
    if (k == 1) return a == 0 ? 0 : p - a;
    Digits x = decode(a);
    for (auto& c : x) c = c == 0 ? 0 : p - c;
    return encode(x);
  }

  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const {
    Digits x = decode(a), y = decode(b);
    Digits prod(2 * k - 1, 0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        prod[i + j] = (prod[i + j] + mulmod(x[i], y[j], p)) % p;
      }
    }
    Digits r = poly_rem(std::move(prod), modulus, p);
    r.resize(k, 0);
    return encode(r);
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (k == 1) return mulmod(a, b, p);
    if (a == 0 || b == 0) return 0;
    if (!log.empty()) {
      return exp[(static_cast<std::uint64_t>(log[a]) + log[b]) % (q - 1)];
    }
    return mul_slow(a, b);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) fail(ErrorCode::NotInvertible, "inverse of zero");
    if (k == 1) return powmod(a, p - 2, p);
    if (!log.empty()) return exp[(q - 1 - log[a]) % (q - 1)];
    return pow(a, q - 2);
  }

  void build_log_tables() {
    if (k == 1 || q > kLogTableLimit) return;
    const auto factors = prime_factors(q - 1);
    for (std::uint64_t g = 2; g < q; ++g) {
      bool generator = true;
      for (auto r : factors) {
        if (mul_pow_slow(g, (q - 1) / r) == 1) {
          generator = false;
          break;
        }
      }
      if (!generator) continue;
      exp.assign(q - 1, 0);
      log.assign(q, 0);
      std::uint64_t x = 1;
      for (std::uint64_t i = 0; i < q - 1; ++i) {
        exp[i] = static_cast<std::uint32_t>(x);
        log[x] = static_cast<std::uint32_t>(i);
        x = mul_slow(x, g);
      }
      return;
    }
  }

 private:
  std::uint64_t mul_pow_slow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  }
};

}  // namespace detail

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::DivisionByZeroForm: return "DivisionByZeroForm";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::NonHomogeneous: return "NonHomogeneous";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field make_rationals() {
  static const auto data = std::make_shared<const detail::FieldData>();
  return Field(data);
}

Field make_extension_field(std::uint64_t p, int k,
                           std::optional<std::vector<std::uint64_t>> modulus) {
  if (p >= kMaxPrime || !is_prime(p)) {
    fail(ErrorCode::NotPrime, std::to_string(p) + " is not a supported prime");
  }
  if (k < 1) fail(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  if (k > kMaxExtensionDegree) {
    fail(ErrorCode::DegreeTooLarge,
         "extension degree " + std::to_string(k) + " exceeds the cap of " +
             std::to_string(kMaxExtensionDegree));
  }
  auto data = std::make_shared<detail::FieldData>();
  data->kind = Field::Kind::Finite;
  data->p = p;
  data->k = k;
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    if (k > 1 && q > kMaxExtensionOrder / p) {
      fail(ErrorCode::DegreeTooLarge, "GF(" + std::to_string(p) + "^" + std::to_string(k) +
                                          ") is too large for exhaustive arithmetic");
    }
    q *= p;
  }
  data->q = q;
  if (k > 1) {
    if (modulus) {
      Digits m = *modulus;
      if (m.size() != static_cast<std::size_t>(k) + 1 || m.back() % p != 1) {
        fail(ErrorCode::ReducibleModulus, "modulus must be monic of degree " + std::to_string(k));
      }
      for (auto& c : m) c %= p;
      if (!is_irreducible_modulus(m, p)) {
        fail(ErrorCode::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
      }
      data->modulus = std::move(m);
    } else {
      for (std::uint64_t c = 0; c < q; ++c) {
        Digits m(k + 1, 0);
        std::uint64_t x = c;
        for (int i = 0; i < k; ++i) {
          m[i] = x % p;
          x /= p;
        }
        m[k] = 1;
        if (is_irreducible_modulus(m, p)) {
          data->modulus = std::move(m);
          break;
        }
      }
    }
    data->build_log_tables();
  } else if (modulus && !modulus->empty()) {
    const auto& m = *modulus;
    if (m.size() != 2 || m[1] % p != 1) {
      fail(ErrorCode::ReducibleModulus, "modulus must be monic of degree 1");
    }
  }
  return Field(std::move(data));
}

// ---------------------------------------------------------------- Field

Field::Kind Field::kind() const { return data_->kind; }
std::uint64_t Field::characteristic() const { return data_->p; }
int Field::degree() const { return data_->k; }
std::uint64_t Field::order() const { return data_->q; }
const std::vector<std::uint64_t>& Field::modulus() const { return data_->modulus; }

Element Field::zero() const {
  return is_rationals() ? Element(*this, mpq_class(0)) : Element(*this, std::uint64_t{0});
}

Element Field::one() const {
  return is_rationals() ? Element(*this, mpq_class(1)) : Element(*this, std::uint64_t{1});
}

Element Field::from_int(long long v) const { return from_integer(mpz_class(static_cast<long>(v))); }

Element Field::from_integer(const mpz_class& v) const {
  if (is_rationals()) return Element(*this, mpq_class(v));
  mpz_class r = v % mpz_class(static_cast<unsigned long>(data_->p));
  if (r < 0) r += static_cast<unsigned long>(data_->p);
  return Element(*this, static_cast<std::uint64_t>(r.get_ui()));
}

Element Field::from_rational(const mpq_class& v) const {
  if (is_rationals()) {
    mpq_class c(v);
    c.canonicalize();
    return Element(*this, std::move(c));
  }
  Element den = from_integer(v.get_den());
  if (den.is_zero()) {
    fail(ErrorCode::NotInvertible, "denominator " + v.get_den().get_str() +
                                       " vanishes in " + to_string());
  }
  return from_integer(v.get_num()) / den;
}

Element Field::from_coeffs(const std::vector<long long>& coeffs) const {
  if (is_rationals()) {
    if (coeffs.size() != 1) fail(ErrorCode::InvalidArgument, "rationals take a single coefficient");
    return from_int(coeffs[0]);
  }
  if (coeffs.size() > static_cast<std::size_t>(data_->k)) {
    fail(ErrorCode::InvalidArgument, "coefficient vector longer than the extension degree");
  }
  Digits d(data_->k, 0);
  const auto p = static_cast<long long>(data_->p);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    long long c = coeffs[i] % p;
    if (c < 0) c += p;
    d[i] = static_cast<std::uint64_t>(c);
  }
  return Element(*this, data_->encode(d));
}

Element Field::from_code(std::uint64_t code) const {
  if (!is_finite() || code >= data_->q) fail(ErrorCode::InvalidArgument, "code out of range");
  return Element(*this, code);
}

std::vector<Element> Field::elements() const {
  if (!is_finite()) fail(ErrorCode::InvalidArgument, "cannot enumerate Q");
  if (data_->q > kMaxExtensionOrder) fail(ErrorCode::FieldTooLarge, "field too large to enumerate");
  std::vector<Element> out;
  out.reserve(data_->q);
  for (std::uint64_t c = 0; c < data_->q; ++c) out.push_back(Element(*this, c));
  return out;
}

std::string Field::to_string() const {
  if (is_rationals()) return "Q";
  std::ostringstream os;
  os << "GF(" << data_->p;
  if (data_->k > 1) {
    os << "^" << data_->k << "; ";
    for (std::size_t i = 0; i < data_->modulus.size(); ++i) {
      if (i) os << ",";
      os << data_->modulus[i];
    }
  }
  os << ")";
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->kind == b.data_->kind && a.data_->p == b.data_->p &&
         a.data_->k == b.data_->k && a.data_->modulus == b.data_->modulus;
}

// ---------------------------------------------------------------- Element

namespace {

void require_same_field(const Element& a, const Element& b) {
  if (!(a.field() == b.field())) {
    fail(ErrorCode::FieldMismatch,
         "elements of " + a.field().to_string() + " and " + b.field().to_string());
  }
}

}  // namespace

bool Element::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Element::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Element::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  fail(ErrorCode::InvalidArgument, "not a rational element");
}

std::uint64_t Element::code() const {
  if (const auto* c = std::get_if<std::uint64_t>(&value_)) return *c;
  fail(ErrorCode::InvalidArgument, "not a finite-field element");
}

std::vector<std::uint64_t> Element::coeffs() const { return field_.data_->decode(code()); }

Element Element::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Element(field_, mpq_class(-*q));
  return Element(field_, field_.data_->neg(std::get<std::uint64_t>(value_)));
}

Element Element::inverse() const {
  if (is_zero()) fail(ErrorCode::NotInvertible, "inverse of zero");
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Element(field_, mpq_class(1 / *q));
  return Element(field_, field_.data_->inv(std::get<std::uint64_t>(value_)));
}

Element Element::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q->get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q->get_den_mpz_t(), static_cast<unsigned long>(e));
    mpq_class r(num, den);
    r.canonicalize();
    return Element(field_, std::move(r));
  }
  return Element(field_, field_.data_->pow(std::get<std::uint64_t>(value_), static_cast<std::uint64_t>(e)));
}

Element operator+(const Element& a, const Element& b) {
  require_same_field(a, b);
  if (const auto* q = std::get_if<mpq_class>(&a.value_)) {
    return Element(a.field_, mpq_class(*q + std::get<mpq_class>(b.value_)));
  }
  return Element(a.field_, a.field_.data_->add(std::get<std::uint64_t>(a.value_),
                                               std::get<std::uint64_t>(b.value_)));
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
  require_same_field(a, b);
  if (const auto* q = std::get_if<mpq_class>(&a.value_)) {
    return Element(a.field_, mpq_class(*q * std::get<mpq_class>(b.value_)));
  }
  return Element(a.field_, a.field_.data_->mul(std::get<std::uint64_t>(a.value_),
                                               std::get<std::uint64_t>(b.value_)));
}

Element operator/(const Element& a, const Element& b) { return a * b.inverse(); }

bool operator==(const Element& a, const Element& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

bool canonical_less(const Element& a, const Element& b) {
  require_same_field(a, b);
  if (const auto* x = std::get_if<mpq_class>(&a.value_)) {
    const auto& y = std::get<mpq_class>(b.value_);
    const bool xn = sgn(*x) < 0, yn = sgn(y) < 0;
    if (xn != yn) return !xn;
    return cmp(abs(*x), abs(y)) < 0;
  }
  return std::get<std::uint64_t>(a.value_) < std::get<std::uint64_t>(b.value_);
}

std::string Element::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  if (field_.degree() == 1) return std::to_string(std::get<std::uint64_t>(value_));
  std::string out = "[";
  const auto d = coeffs();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d[i]);
  }
  return out + "]";
}

// ---------------------------------------------------------------- roots

std::optional<Element> sqrt_in_field(const Element& a) {
  const Field& f = a.field();
  if (a.is_zero()) return a;
  if (f.is_rationals()) {
    const mpq_class& v = a.rational();
    if (sgn(v) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(v.get_num_mpz_t()) || !mpz_perfect_square_p(v.get_den_mpz_t())) {
      return std::nullopt;
    }
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), v.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), v.get_den_mpz_t());
    return f.from_rational(mpq_class(num, den));
  }
  const std::uint64_t q = f.order();
  if (f.characteristic() == 2) return a.pow(static_cast<long long>(q / 2));
  if (!a.pow(static_cast<long long>((q - 1) / 2)).is_one()) return std::nullopt;
  // Tonelli-Shanks over GF(q).
  std::uint64_t odd = q - 1;
  int s = 0;
  while ((odd & 1) == 0) {
    odd >>= 1;
    ++s;
  }
  const Element minus_one = -f.one();
  std::optional<Element> z;
  for (std::uint64_t c = 2; c < q; ++c) {
    Element cand = f.from_code(c);
    if (cand.pow(static_cast<long long>((q - 1) / 2)) == minus_one) {
      z = cand;
      break;
    }
  }
  Element c = z->pow(static_cast<long long>(odd));
  Element t = a.pow(static_cast<long long>(odd));
  Element r = a.pow(static_cast<long long>((odd + 1) / 2));
  int m = s;
  while (!t.is_one()) {
    int i = 0;
    Element t2 = t;
    while (!t2.is_one()) {
      t2 = t2 * t2;
      ++i;
    }
    Element b = c;
    for (int j = 0; j < m - i - 1; ++j) b = b * b;
    m = i;
    c = b * b;
    t = t * c;
    r = r * b;
  }
  Element other = -r;
  return canonical_less(other, r) ? other : r;
}

std::optional<Element> primitive_mth_root(long long m, const Field& field) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "root order must be >= 1");
  if (m == 1) return field.one();
  if (field.is_rationals()) {
    if (m == 2) return -field.one();
    return std::nullopt;
  }
  const std::uint64_t q = field.order();
  const auto um = static_cast<std::uint64_t>(m);
  if ((q - 1) % um != 0) return std::nullopt;
  const auto factors = prime_factors(um);
  auto exact_order = [&](const Element& x) {
    if (!x.pow(m).is_one()) return false;
    for (auto r : factors) {
      if (x.pow(static_cast<long long>(um / r)).is_one()) return false;
    }
    return true;
  };
  // One element of exact order m; its powers coprime to m are all of them.
  std::optional<Element> w;
  for (std::uint64_t c = 2; c < q && !w; ++c) {
    Element y = field.from_code(c).pow(static_cast<long long>((q - 1) / um));
    if (exact_order(y)) w = y;
  }
  Element best = *w;
  for (std::uint64_t j = 2; j < um; ++j) {
    if (std::gcd(j, um) != 1) continue;
    Element cand = w->pow(static_cast<long long>(j));
    if (canonical_less(cand, best)) best = cand;
  }
  return best;
}

std::optional<Field> quadratic_extension(const Field& field) {
  if (!field.is_finite() || 2 * field.degree() > kMaxExtensionDegree) return std::nullopt;
  try {
    return make_extension_field(field.characteristic(), 2 * field.degree());
  } catch (const Error&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------- Embedding

Embedding::Embedding(const Field& from, const Field& to) : from_(from), to_(to) {
  if (from.is_rationals() || to.is_rationals()) {
    if (!(from.is_rationals() && to.is_rationals())) {
      fail(ErrorCode::FieldMismatch, "no embedding " + from.to_string() + " -> " + to.to_string());
    }
    return;
  }
  if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0) {
    fail(ErrorCode::FieldMismatch, "no embedding " + from.to_string() + " -> " + to.to_string());
  }
  const int k = from.degree();
  if (k == 1) {
    powers_.push_back(to.one());
    return;
  }
  std::optional<Element> root;
  if (from == to) {
    root = to.from_coeffs({0, 1});
  } else {
    const auto& m = from.modulus();
    for (std::uint64_t c = 0; c < to.order() && !root; ++c) {
      Element x = to.from_code(c);
      Element acc = to.zero();
      for (auto it = m.rbegin(); it != m.rend(); ++it) {
        acc = acc * x + to.from_int(static_cast<long long>(*it));
      }
      if (acc.is_zero()) root = x;
    }
  }
  Element pw = to.one();
  for (int i = 0; i < k; ++i) {
    powers_.push_back(pw);
    pw = pw * *root;
  }
}

Element Embedding::operator()(const Element& x) const {
  if (!(x.field() == from_)) {
    fail(ErrorCode::FieldMismatch, "element of " + x.field().to_string() +
                                       " passed to embedding from " + from_.to_string());
  }
  if (from_.is_rationals()) return x;
  const auto d = x.coeffs();
  Element acc = to_.zero();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i]) acc += to_.from_int(static_cast<long long>(d[i])) * powers_[i];
  }
  return acc;
}

}  // namespace galoispt
