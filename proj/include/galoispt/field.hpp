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

#ifndef GALOISPT_FIELD_HPP
#define GALOISPT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "galoispt/error.hpp"

namespace galoispt {

namespace detail {
struct FieldData;
}

class Element;

/// Highest extension degree supported for finite fields.
inline constexpr int kMaxExtensionDegree = 4;

/// Handle to an exact field: the rationals or a finite field GF(p^k) given
/// as GF(p)[T]/(m(T)) for a stored monic irreducible m of degree k.
///
/// Handles are cheap to copy and immutable. Two handles compare equal when
/// they describe the same (p, k, modulus), regardless of how they were built.
class Field {
 public:
  enum class Kind { Rationals, Finite };

  Kind kind() const;
  bool is_rationals() const { return kind() == Kind::Rationals; }
  bool is_finite() const { return kind() == Kind::Finite; }

  /// Characteristic; 0 for the rationals.
  std::uint64_t characteristic() const;
  /// Extension degree over the prime field (1 for Q and GF(p)).
  int degree() const;
  /// Number of elements; 0 for the rationals.
  std::uint64_t order() const;
  /// Monic modulus, coefficients low-to-high (k+1 entries). Empty for k = 1.
  const std::vector<std::uint64_t>& modulus() const;

  Element zero() const;
  Element one() const;
  Element from_int(long long v) const;
  Element from_integer(const mpz_class& v) const;
  /// Throws NotInvertible when the denominator vanishes in this field.
  Element from_rational(const mpq_class& v) const;
  /// Element with the given coefficient vector over GF(p) (low-to-high);
  /// coefficients are reduced mod p.
  Element from_coeffs(const std::vector<long long>& coeffs) const;
  /// Element whose canonical code is `code` (finite fields only).
  Element from_code(std::uint64_t code) const;
  /// All elements in canonical order (finite fields only).
  std::vector<Element> elements() const;

  /// Literal in the CLI grammar: Q, GF(p), GF(p^k; m0,...,1).
  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  friend class Element;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Field make_rationals();
  friend Field make_extension_field(std::uint64_t, int,
                                    std::optional<std::vector<std::uint64_t>>);
  explicit Field(std::shared_ptr<const detail::FieldData> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const detail::FieldData> data_;
};

/// An exact element of a Field. Rationals are kept in lowest terms; finite
/// field elements are stored by canonical code sum(c_i p^i) with c_i in [0,p).
class Element {
 public:
  Element() = delete;

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; throws InvalidArgument for finite-field elements.
  const mpq_class& rational() const;
  /// Canonical code; throws InvalidArgument for rationals.
  std::uint64_t code() const;
  /// Coefficients over GF(p), low-to-high, length k (finite fields only).
  std::vector<std::uint64_t> coeffs() const;

  Element operator-() const;
  Element inverse() const;
  Element pow(long long e) const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }

  friend bool operator==(const Element& a, const Element& b);

  /// Canonical total order: code order for finite fields; for rationals,
  /// nonnegative values precede negative ones and otherwise by magnitude.
  friend bool canonical_less(const Element& a, const Element& b);

  /// `3`, `-1/2`, or `[c0,c1,...]` for proper extension fields.
  std::string to_string() const;

 private:
  friend class Field;
  Element(Field field, std::uint64_t code) : field_(std::move(field)), value_(code) {}
  Element(Field field, mpq_class q) : field_(std::move(field)), value_(std::move(q)) {}

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

Field make_rationals();

/// GF(p) when k = 1, otherwise GF(p^k). Without a modulus the smallest monic
/// irreducible of degree k is chosen, ordering candidates by the code
/// sum(m_i p^i) of their non-leading coefficients.
///
/// Errors: NotPrime, DegreeTooLarge (k > 4), ReducibleModulus (also raised
/// for a modulus that is not monic of degree k).
Field make_extension_field(std::uint64_t p, int k,
                           std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

inline Field make_prime_field(std::uint64_t p) { return make_extension_field(p, 1); }

bool is_prime(std::uint64_t n);

/// Square root in the same field; the smaller root in canonical order when
/// two exist. Always succeeds in characteristic 2.
std::optional<Element> sqrt_in_field(const Element& a);

/// Element of exact multiplicative order m, smallest in canonical order.
std::optional<Element> primitive_mth_root(long long m, const Field& field);

/// GF(p^(2k)) for a finite GF(p^k); nullopt when 2k exceeds the degree cap or
/// the field is Q.
std::optional<Field> quadratic_extension(const Field& field);

/// A field homomorphism `from` -> `to`. For finite fields the generator T of
/// `from` is sent to the smallest root (canonical order) of its modulus in
/// `to`, so embeddings are reproducible.
class Embedding {
 public:
  /// Throws FieldMismatch when no embedding exists.
  Embedding(const Field& from, const Field& to);

  const Field& source() const { return from_; }
  const Field& target() const { return to_; }
  Element operator()(const Element& x) const;

 private:
  Field from_;
  Field to_;
  std::vector<Element> powers_;  // images of T^0..T^(k-1)
};

}  // namespace galoispt

#endif  // GALOISPT_FIELD_HPP
