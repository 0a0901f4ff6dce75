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

#ifndef GALOISPT_TRANSFER_HPP
#define GALOISPT_TRANSFER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "galoispt/galois.hpp"
#include "galoispt/multipoly.hpp"

namespace galoispt {

/// Primitive integer form over Q with its X0-parts and their contents.
class IntegerForm {
 public:
  /// Divides out the content. Errors: ZeroForm, NonIntegerCoefficient,
  /// FieldMismatch (not over Q).
  static std::pair<IntegerForm, mpz_class> make(const Form& f);

  const Form& form() const { return form_; }
  int degree() const { return form_.degree(); }
  const std::vector<Form>& parts() const { return parts_; }
  /// A(F_i); zero for a vanishing part.
  const mpz_class& part_content(int i) const { return contents_[i]; }
  const mpz_class& height() const { return height_; }

 private:
  IntegerForm(Form form);

  Form form_;
  std::vector<Form> parts_;
  std::vector<mpz_class> contents_;
  mpz_class height_;
};

inline std::pair<IntegerForm, mpz_class> make_integer_form(const Form& f) { return IntegerForm::make(f); }

/// Coefficient-wise reduction; the degree is kept even if parts vanish.
Form reduce_mod_p(const IntegerForm& f, std::uint64_t p);

/// d * (2(d-1)H)^(d-1). Errors: DegreeTooSmall, InvalidArgument (H < 1).
mpz_class inner_bound(int d, const mpz_class& h);
/// (2dH)^d. Errors: DegreeTooSmall, InvalidArgument (H < 1).
mpz_class outer_bound(int d, const mpz_class& h);

/// p does not divide A(F1) and divides A(F_i) for i = 0, 2, ..., d-1.
bool content_criterion_inner(const IntegerForm& f, std::uint64_t p);
/// p does not divide A(F0) and divides A(F_i) for i = 1, ..., d-1.
bool content_criterion_outer(const IntegerForm& f, std::uint64_t p);

struct TransferTarget {
  std::uint64_t q = 0;
  bool predicted_eligible = false;
  std::optional<GaloisVerdict> verdict;
  std::optional<IrreducibilityResult> irreducibility;
  std::string error;  // module-qualified message when the target failed
};

struct TransferReport {
  PointKind kind = PointKind::Inner;
  std::uint64_t source = 0;
  mpz_class content;  // removed when making the form primitive
  mpz_class height;
  mpz_class bound;
  bool bound_satisfied = false;
  mpz_class eligibility_modulus;
  GaloisVerdict source_verdict;
  bool assumed_irreducible = false;
  std::vector<TransferTarget> targets;
};

struct TransferOptions {
  bool assume_irreducible = false;
  int trials = 16;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Runs the checker at the source and at each target (0 means Q). Targets keep
/// the given order. Errors: PreconditionFailed (A(F1) = 0 for inner, A(F0) = 0
/// for outer), NotPrime, DegreeTooSmall.
TransferReport transfer_scan(const Form& f, PointKind kind, std::uint64_t source,
                             const std::vector<std::uint64_t>& targets, const TransferOptions& options = {});

/// Primes up to n.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

}  // namespace galoispt

#endif  // GALOISPT_TRANSFER_HPP
