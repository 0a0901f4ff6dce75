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

#ifndef GALOISPT_MULTIPOLY_HPP
#define GALOISPT_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "galoispt/field.hpp"

namespace galoispt {

/// Variables are X0..X9.
inline constexpr int kMaxVars = 10;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};

  int degree() const;
  bool divides(const Monomial& other) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exponent-wise difference; requires divides().
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with X0 > X1 > ... ; the only term order used.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over an exact field. No stored coefficient
/// is zero; the zero polynomial has no terms.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Element, GrlexLess>;

  MultiPoly(Field field, int nvars);

  static MultiPoly constant(const Element& c, int nvars);
  static MultiPoly variable(const Field& field, int nvars, int index);
  static MultiPoly term(const Element& c, int nvars, const Monomial& m);

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Largest term degree; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  int degree_in(int var) const;
  /// Indices of variables that occur in some term.
  std::vector<int> support() const;

  /// Greatest term under GrlexLess; requires a nonzero polynomial.
  const Terms::value_type& leading_term() const;
  Element coefficient(const Monomial& m) const;

  /// Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Element& c);

  MultiPoly operator-() const;
  MultiPoly scaled(const Element& c) const;
  MultiPoly pow(int e) const;
  MultiPoly embedded(const Embedding& emb) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  Element evaluate(std::span<const Element> point) const;

  /// Text in the CLI grammar, terms in decreasing grlex order.
  std::string to_string() const;

 private:
  Field field_;
  int nvars_;
  Terms terms_;
};

/// Homogeneous polynomial with a fixed degree (the zero form keeps its degree).
class Form {
 public:
  /// Throws NonHomogeneous when some term has a different degree.
  Form(MultiPoly poly, int degree);
  /// Degree inferred from the terms; throws ZeroForm for the zero polynomial.
  static Form of(MultiPoly poly);
  static Form zero(const Field& field, int nvars, int degree);

  const MultiPoly& poly() const { return poly_; }
  int degree() const { return degree_; }
  const Field& field() const { return poly_.field(); }
  int nvars() const { return poly_.nvars(); }
  bool is_zero() const { return poly_.is_zero(); }

  Form operator-() const { return Form(-poly_, degree_); }
  Form scaled(const Element& c) const { return Form(poly_.scaled(c), degree_); }
  Form embedded(const Embedding& emb) const { return Form(poly_.embedded(emb), degree_); }

  friend Form operator+(const Form& a, const Form& b);
  friend Form operator-(const Form& a, const Form& b);
  friend Form operator*(const Form& a, const Form& b);
  friend bool operator==(const Form& a, const Form& b);

  std::string to_string() const { return poly_.to_string(); }

 private:
  MultiPoly poly_;
  int degree_;
};

/// Invertible square matrix acting on forms by substitution: A*F is F with X_j
/// replaced by sum_i a_{j,i} X_i (row j). With this convention
/// (A*B)*F = B*(A*F).
class LinearChange {
 public:
  /// Row-major entries. Throws SizeMismatch or NotInvertible.
  LinearChange(const Field& field, int size, std::vector<Element> entries);
  static LinearChange identity(const Field& field, int size);

  const Field& field() const { return field_; }
  int size() const { return size_; }
  const Element& at(int row, int col) const { return entries_[row * size_ + col]; }
  const std::vector<Element>& entries() const { return entries_; }

  Element determinant() const;
  LinearChange inverse() const;
  bool is_identity() const;
  LinearChange embedded(const Embedding& emb) const;
  /// Matrix-vector product M*v.
  std::vector<Element> apply(std::span<const Element> v) const;

  friend LinearChange operator*(const LinearChange& a, const LinearChange& b);
  friend bool operator==(const LinearChange& a, const LinearChange& b);

  std::vector<std::vector<std::string>> to_strings() const;
  std::string to_string() const;

 private:
  LinearChange(const Field& field, int size, std::vector<Element> entries, bool checked);

  Field field_;
  int size_;
  std::vector<Element> entries_;
};

Form apply_linear_change(const LinearChange& a, const Form& f);
MultiPoly apply_linear_change(const LinearChange& a, const MultiPoly& f);

/// [F_0, ..., F_d] with F = sum F_i X0^(d-i); each F_i is a form of degree i
/// in the remaining variables.
std::vector<Form> decompose_by_x0(const Form& f);
/// Inverse of decompose_by_x0.
Form assemble_from_x0(std::span<const Form> parts);

/// gcd of the coefficients (0 for the zero polynomial). Coefficients must be
/// integers in Q, else NonIntegerCoefficient.
mpz_class content(const MultiPoly& f);
/// Largest coefficient magnitude of a primitive integer polynomial.
/// Errors: NonIntegerCoefficient, NotPrimitive.
mpz_class height(const MultiPoly& f);

/// Q with Q*D = N, if the grlex division leaves no remainder.
std::optional<MultiPoly> exact_divide(const MultiPoly& n, const MultiPoly& d);
/// Throws DivisionByZeroForm when D = 0.
std::optional<Form> exact_divide_form(const Form& n, const Form& d);

/// G with G^2 = Q, matched term by term from the grlex leading term. The
/// leading coefficient of G is the sqrt_in_field choice. When the leading
/// coefficient is not a square and the flag is set, the computation moves to
/// the quadratic extension of a finite field; the result's field tells which.
std::optional<MultiPoly> sqrt_poly(const MultiPoly& q, bool allow_quadratic_extension);
std::optional<Form> sqrt_form(const Form& q, bool allow_quadratic_extension);

struct LinearFactor {
  Form factor;
  int multiplicity;
};

/// All linear forms over `search_field` dividing F, normalized so that the
/// coefficient of the first variable present is 1, with multiplicities.
/// Sorted by number of terms, then by decreasing leading monomial.
///
/// Errors: ZeroForm, TooManyVariables (more than 3 variables occur),
/// FieldTooLarge (search field not finite or above 81 elements),
/// FieldMismatch (F's field does not embed).
std::vector<LinearFactor> linear_factors(const Form& f, const Field& search_field);

struct IrreducibilityResult {
  enum class Kind { Reducible, ProbablyIrreducible, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Form> witness;  // exact factor when Reducible
  std::string detail;
};

std::string_view to_string(IrreducibilityResult::Kind kind);

/// Advisory irreducibility test over `field` (F must embed into it).
/// Reducible only with a verified factor. ProbablyIrreducible when some
/// restriction of F to a line is a squarefree irreducible univariate
/// polynomial of full degree; over Q the test runs on reductions modulo small
/// primes. Lines come from a fixed-seed generator, so results are
/// reproducible.
IrreducibilityResult irreducibility_heuristic(const Form& f, const Field& field, int trials);

}  // namespace galoispt

#endif  // GALOISPT_MULTIPOLY_HPP
