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

#include "galoispt/transfer.hpp"

#include "parallel.hpp"

namespace galoispt {

namespace {

constexpr std::string_view kModule = "transfer";

bool divides(std::uint64_t p, const mpz_class& a) {
  return mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, kModule, std::to_string(p) + " is not prime");
}

void require_bound_args(int d, const mpz_class& h) {
  if (d < 4) throw Error(ErrorCode::DegreeTooSmall, kModule, "bounds need d >= 4");
  if (h < 1) throw Error(ErrorCode::InvalidArgument, kModule, "height must be at least 1");
}

Form over(const IntegerForm& f, std::uint64_t q) { return q == 0 ? f.form() : reduce_mod_p(f, q); }

}  // namespace

IntegerForm::IntegerForm(Form form) : form_(std::move(form)), parts_(decompose_by_x0(form_)) {
  for (const Form& p : parts_) contents_.push_back(content(p.poly()));
  height_ = galoispt::height(form_.poly());
}

std::pair<IntegerForm, mpz_class> IntegerForm::make(const Form& f) {
  if (!f.field().is_rationals()) throw Error(ErrorCode::FieldMismatch, kModule, "integer forms live over Q");
  if (f.is_zero()) throw Error(ErrorCode::ZeroForm, kModule, "the zero form has no primitive part");
  const mpz_class c = content(f.poly());
  Form primitive = f.scaled(f.field().from_rational(mpq_class(1) / c));
  return {IntegerForm(std::move(primitive)), c};
}

Form reduce_mod_p(const IntegerForm& f, std::uint64_t p) {
  require_prime(p);
  const Field fp = make_prime_field(p);
  MultiPoly out(fp, f.form().nvars());
  for (const auto& [m, c] : f.form().poly().terms()) out.add_term(m, fp.from_integer(c.rational().get_num()));
  return Form(std::move(out), f.degree());
}

mpz_class inner_bound(int d, const mpz_class& h) {
  require_bound_args(d, h);
  mpz_class base = 2 * (d - 1) * h;
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(d - 1));
  return d * out;
}

mpz_class outer_bound(int d, const mpz_class& h) {
  require_bound_args(d, h);
  mpz_class base = 2 * d * h;
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(d));
  return out;
}

bool content_criterion_inner(const IntegerForm& f, std::uint64_t p) {
  require_prime(p);
  if (divides(p, f.part_content(1))) return false;
  for (int i = 0; i < f.degree(); ++i) {
    if (i != 1 && !divides(p, f.part_content(i))) return false;
  }
  return true;
}

bool content_criterion_outer(const IntegerForm& f, std::uint64_t p) {
  require_prime(p);
  if (divides(p, f.part_content(0))) return false;
  for (int i = 1; i < f.degree(); ++i) {
    if (!divides(p, f.part_content(i))) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= n; ++q) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

TransferReport transfer_scan(const Form& f, PointKind kind, std::uint64_t source,
                             const std::vector<std::uint64_t>& targets, const TransferOptions& options) {
  if (source != 0) require_prime(source);
  for (std::uint64_t q : targets) {
    if (q != 0) require_prime(q);
  }
  auto [g, removed] = IntegerForm::make(f);
  const int d = g.degree();
  if (d < 4) throw Error(ErrorCode::DegreeTooSmall, kModule, "transfer needs d >= 4");

  TransferReport r;
  r.kind = kind;
  r.source = source;
  r.content = removed;
  r.height = g.height();
  r.assumed_irreducible = options.assume_irreducible;
  const bool inner = kind == PointKind::Inner;
  const mpz_class& a = g.part_content(inner ? 1 : 0);
  if (a == 0) {
    throw Error(ErrorCode::PreconditionFailed, kModule,
                inner ? "F1 = 0: P is not a smooth point" : "F0 = 0: P lies on the hypersurface");
  }
  r.eligibility_modulus = (inner ? d - 1 : d) * a;
  r.bound = inner ? inner_bound(d, r.height) : outer_bound(d, r.height);
  r.bound_satisfied = source == 0 || mpz_class(std::to_string(source)) > r.bound;

  const CheckOptions check{options.assume_irreducible, options.trials};
  r.source_verdict = check_point(over(g, source), kind, check);

  r.targets.resize(targets.size());
  detail::parallel_for(
      targets.size(),
      [&](std::size_t i) {
        TransferTarget& t = r.targets[i];
        t.q = targets[i];
        t.predicted_eligible = t.q == 0 || !divides(t.q, r.eligibility_modulus);
        try {
          const Form target = over(g, t.q);
          t.irreducibility = irreducibility_heuristic(target, target.field(), options.trials);
          t.verdict = check_point(target, kind, check);
        } catch (const Error& e) {
          t.error = e.what();
        }
      },
      options.threads);
  return r;
}

}  // namespace galoispt
