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

#include "galoispt/galois.hpp"

#include <algorithm>
#include <sstream>

#include "galoispt/resolvent.hpp"

namespace galoispt {

namespace {

constexpr std::string_view kModule = "galois";
constexpr std::uint64_t kMaxSearchField = 81;

using Status = VerdictStatus;

GaloisVerdict make_verdict(PointKind kind, const CheckOptions& options) {
  GaloisVerdict v;
  v.kind = kind;
  v.assumed_irreducible = options.assume_irreducible;
  return v;
}

GaloisVerdict finish(GaloisVerdict v, Status status, std::string note = {}) {
  v.status = status;
  if (!note.empty()) v.notes.push_back(std::move(note));
  return v;
}

// Gates shared by every check; a returned verdict ends the check.
std::optional<GaloisVerdict> basic_gate(const Form& f, GaloisVerdict& v) {
  if (f.is_zero()) return finish(v, Status::PreconditionFailed, "zero form");
  if (f.degree() < 4) {
    return finish(v, Status::PreconditionFailed, "degree " + std::to_string(f.degree()) + " is below 4");
  }
  return std::nullopt;
}

std::optional<GaloisVerdict> irreducibility_gate(const Form& f, GaloisVerdict& v, const CheckOptions& options) {
  if (options.assume_irreducible) {
    v.notes.push_back("irreducibility assumed");
    return std::nullopt;
  }
  const auto r = irreducibility_heuristic(f, f.field(), options.trials);
  if (r.kind == IrreducibilityResult::Kind::Reducible) {
    return finish(v, Status::PreconditionFailed, "reducible: factor " + r.witness->to_string());
  }
  v.notes.push_back("irreducibility heuristic: " + std::string(to_string(r.kind)) + " (" + r.detail + ")");
  return std::nullopt;
}

std::vector<Element> linear_coeffs(const Form& l) {
  std::vector<Element> out(l.nvars(), l.field().zero());
  for (const auto& [m, c] : l.poly().terms()) {
    for (int i = 0; i < l.nvars(); ++i) {
      if (m.exp[i]) out[i] = c;
    }
  }
  return out;
}

// X0 <- X0 + L for a linear form L free of X0.
LinearChange translation(const Form& l) {
  const int n = l.nvars();
  std::vector<Element> e = LinearChange::identity(l.field(), n).entries();
  const auto c = linear_coeffs(l);
  for (int i = 1; i < n; ++i) e[i] = c[i];
  return LinearChange(l.field(), n, std::move(e));
}

LinearChange diagonal_first(const Element& e, int n) {
  std::vector<Element> entries = LinearChange::identity(e.field(), n).entries();
  entries[0] = e;
  return LinearChange(e.field(), n, std::move(entries));
}

// C fixing X0 with C*L = X_{n-1}: C = B^-1 where B's last row holds L's
// coefficients and the other rows are unit vectors skipping the pivot.
LinearChange send_to_last(const Form& l) {
  const int n = l.nvars();
  const auto f = linear_coeffs(l);
  int pivot = n - 1;
  while (f[pivot].is_zero()) --pivot;
  std::vector<Element> b(static_cast<std::size_t>(n) * n, l.field().zero());
  b[0] = l.field().one();
  int row = 1;
  for (int j = 1; j < n; ++j) {
    if (j == pivot) continue;
    b[row * n + j] = l.field().one();
    ++row;
  }
  for (int j = 0; j < n; ++j) b[(n - 1) * n + j] = f[j];
  return LinearChange(l.field(), n, std::move(b)).inverse();
}

// Smallest available field holding a primitive m-th root of unity.
std::optional<Element> root_of_unity(long long m, const Field& field) {
  if (auto e = primitive_mth_root(m, field)) return e;
  if (!field.is_finite()) return std::nullopt;
  for (int k = 2 * field.degree(); k <= kMaxExtensionDegree; k += field.degree()) {
    const Field ext = make_extension_field(field.characteristic(), k);
    if (auto e = primitive_mth_root(m, ext)) return e;
  }
  return std::nullopt;
}

Form embed(const Form& f, const Field& to) {
  return f.field() == to ? f : f.embedded(Embedding(f.field(), to));
}

LinearChange embed(const LinearChange& a, const Field& to) {
  return a.field() == to ? a : a.embedded(Embedding(a.field(), to));
}

// Adds the cyclic generator A*diag(e,1,...,1)*A^-1 of order m.
void add_cyclic_generator(const Form& f, long long m, WitnessData& w, GaloisVerdict& v) {
  const auto e = root_of_unity(m, w.substitution.field());
  if (!e) {
    v.notes.push_back("extension required for generator: no primitive root of unity of order " +
                      std::to_string(m) + " within the degree cap");
    return;
  }
  const LinearChange a = embed(w.substitution, e->field());
  LinearChange s = a * diagonal_first(*e, f.nvars()) * a.inverse();
  auto t = stabilizer_scalar(s, f);
  if (!t) throw Error(ErrorCode::InvalidArgument, kModule, "internal: generator does not preserve F");
  if (!(e->field() == f.field())) v.notes.push_back("generator defined over " + e->field().to_string());
  w.generators.push_back(std::move(s));
  w.generator_scalars.push_back(std::move(*t));
}

bool all_zero(const std::vector<Form>& parts, int from, int to) {
  for (int i = from; i <= to; ++i) {
    if (!parts[i].is_zero()) return false;
  }
  return true;
}

const char* kSemanticsGeneral = "criterion: normal form after the X0 translation (extendable Galois point)";

std::optional<GaloisVerdict> outer_scale(const std::vector<Form>& parts, GaloisVerdict& v, Element& scale) {
  if (parts[0].is_zero()) return finish(v, Status::PreconditionFailed, "P lies on the hypersurface");
  scale = parts[0].poly().terms().begin()->second.inverse();
  return std::nullopt;
}

}  // namespace

std::string_view to_string(PointKind kind) { return kind == PointKind::Inner ? "Inner" : "Outer"; }

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case Status::ExtendableGalois: return "ExtendableGalois";
    case Status::NotGalois: return "NotGalois";
    case Status::PreconditionFailed: return "PreconditionFailed";
    case Status::ExtensionRequired: return "ExtensionRequired";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(GroupDesc::Structure s) {
  switch (s) {
    case GroupDesc::Structure::Cyclic: return "Cyclic";
    case GroupDesc::Structure::KleinFour: return "KleinFour";
    case GroupDesc::Structure::ElemAbelianSemidirect: return "ElemAbelianSemidirect";
    case GroupDesc::Structure::Trivial: return "Trivial";
    case GroupDesc::Structure::Other: return "Other";
  }
  return "Other";
}

GroupDesc GroupDesc::cyclic(long long m) {
  GroupDesc g;
  g.structure = Structure::Cyclic;
  g.order = m;
  g.m = m;
  return g;
}

GroupDesc GroupDesc::klein_four() {
  GroupDesc g;
  g.structure = Structure::KleinFour;
  g.order = 4;
  return g;
}

GroupDesc GroupDesc::semidirect(long long p, long long e, long long l) {
  GroupDesc g;
  g.structure = Structure::ElemAbelianSemidirect;
  g.p = p;
  g.e = e;
  g.l = l;
  g.order = l;
  for (long long i = 0; i < e; ++i) g.order *= p;
  return g;
}

GroupDesc GroupDesc::trivial() { return GroupDesc{}; }

GroupDesc GroupDesc::other(std::vector<long long> element_orders) {
  GroupDesc g;
  g.structure = Structure::Other;
  std::sort(element_orders.begin(), element_orders.end());
  g.order = static_cast<long long>(element_orders.size());
  g.element_orders = std::move(element_orders);
  return g;
}

std::string GroupDesc::to_string() const {
  std::ostringstream os;
  switch (structure) {
    case Structure::Cyclic: os << "Cyclic(" << m << ")"; break;
    case Structure::KleinFour: os << "KleinFour"; break;
    case Structure::ElemAbelianSemidirect: os << "ElemAbelianSemidirect(" << p << "," << e << "," << l << ")"; break;
    case Structure::Trivial: os << "Trivial"; break;
    case Structure::Other:
      os << "Other(" << order << ";";
      for (std::size_t i = 0; i < element_orders.size(); ++i) os << (i ? "," : "") << element_orders[i];
      os << ")";
      break;
  }
  return os.str();
}

LinearChange normalize_point(std::span<const Element> point, const Field& field) {
  const int n = static_cast<int>(point.size());
  if (n < 1) throw Error(ErrorCode::SizeMismatch, kModule, "empty point");
  int r = -1;
  for (int i = 0; i < n; ++i) {
    if (!(point[i].field() == field)) throw Error(ErrorCode::FieldMismatch, kModule, "point over another field");
    if (r < 0 && !point[i].is_zero()) r = i;
  }
  if (r < 0) throw Error(ErrorCode::ZeroPoint, kModule, "the zero vector is not a projective point");
  std::vector<Element> nm(static_cast<std::size_t>(n) * n, field.zero());
  for (int i = 0; i < n; ++i) nm[i * n] = point[i];
  int col = 1;
  for (int j = 0; j < n; ++j) {
    if (j == r) continue;
    nm[j * n + col] = field.one();
    ++col;
  }
  return LinearChange(field, n, std::move(nm)).inverse();
}

Form normalized_form(const Form& f, const LinearChange& m) { return apply_linear_change(m.inverse(), f); }

std::optional<Element> stabilizer_scalar(const LinearChange& s, const Form& f) {
  if (f.is_zero()) return std::nullopt;
  const Form g = embed(f, s.field());
  const Form image = apply_linear_change(s, g);
  const auto& [lm, lc] = g.poly().leading_term();
  const Element t = image.poly().coefficient(lm) / lc;
  if (t.is_zero() || !(image == g.scaled(t))) return std::nullopt;
  return t;
}

GaloisVerdict check_inner_general(const Form& f, const CheckOptions& options) {
  GaloisVerdict v = make_verdict(PointKind::Inner, options);
  if (auto r = basic_gate(f, v)) return *r;
  const int d = f.degree();
  const std::uint64_t ch = f.field().characteristic();
  if (ch != 0 && (d - 1) % ch == 0) {
    return finish(v, Status::Unknown, "characteristic divides d-1; no general criterion");
  }
  const auto parts = decompose_by_x0(f);
  if (!parts[0].is_zero()) return finish(v, Status::PreconditionFailed, "P is not on the hypersurface");
  if (parts[1].is_zero()) return finish(v, Status::PreconditionFailed, "P is a singular point (F1 = 0)");
  if (auto r = irreducibility_gate(f, v, options)) return *r;
  v.notes.push_back(kSemanticsGeneral);

  LinearChange t = LinearChange::identity(f.field(), f.nvars());
  if (parts[2].is_zero()) {
    if (!all_zero(parts, 3, d - 1)) return finish(v, Status::NotGalois, "F2 = 0 but a later middle part is nonzero");
  } else {
    auto g2 = exact_divide_form(parts[2], parts[1]);
    if (!g2) return finish(v, Status::NotGalois, "F1 does not divide F2");
    t = translation(g2->scaled(f.field().from_int(-(d - 1)).inverse()));
    const auto h = decompose_by_x0(apply_linear_change(t, f));
    if (!all_zero(h, 2, d - 1)) return finish(v, Status::NotGalois, "middle parts survive the X0 translation");
  }
  const LinearChange a = t * send_to_last(parts[1]);
  WitnessData w{a, apply_linear_change(a, f), f.field().one(), std::nullopt, std::nullopt, {}, {}};
  add_cyclic_generator(f, d - 1, w, v);
  v.witness = std::move(w);
  v.group = GroupDesc::cyclic(d - 1);
  return finish(std::move(v), Status::ExtendableGalois);
}

GaloisVerdict check_outer_general(const Form& f, const CheckOptions& options) {
  GaloisVerdict v = make_verdict(PointKind::Outer, options);
  if (auto r = basic_gate(f, v)) return *r;
  const int d = f.degree();
  const std::uint64_t ch = f.field().characteristic();
  if (ch != 0 && d % ch == 0) return finish(v, Status::Unknown, "characteristic divides d; no general criterion");
  const auto parts = decompose_by_x0(f);
  Element scale = f.field().one();
  if (auto r = outer_scale(parts, v, scale)) return *r;
  if (auto r = irreducibility_gate(f, v, options)) return *r;
  v.notes.push_back(kSemanticsGeneral);

  const Form g = f.scaled(scale);
  if (d == 4 && printed_outer_identity(g) != quartic_outer_identity(g)) {
    v.notes.push_back("published constant 9F1^3 = 32F3 disagrees here; the derived F3 = F1^3/16 is used");
  }
  const Form f1 = decompose_by_x0(g)[1];
  const LinearChange t = translation(f1.scaled(f.field().from_int(-d).inverse()));
  Form normal = apply_linear_change(t, g);
  if (!all_zero(decompose_by_x0(normal), 1, d - 1)) {
    return finish(v, Status::NotGalois, "middle parts survive the X0 translation");
  }
  WitnessData w{t, std::move(normal), scale, std::nullopt, std::nullopt, {}, {}};
  add_cyclic_generator(f, d, w, v);
  v.witness = std::move(w);
  v.group = GroupDesc::cyclic(d);
  return finish(std::move(v), Status::ExtendableGalois);
}

GaloisVerdict check_inner_quartic_char3(const Form& f, const CheckOptions& options) {
  GaloisVerdict v = make_verdict(PointKind::Inner, options);
  if (f.field().characteristic() != 3) {
    throw Error(ErrorCode::WrongCharacteristic, kModule, "char-3 quartic check over " + f.field().to_string());
  }
  if (auto r = basic_gate(f, v)) return *r;
  if (f.degree() != 4) return finish(v, Status::PreconditionFailed, "degree must be 4");
  const auto parts = decompose_by_x0(f);
  if (!parts[0].is_zero()) return finish(v, Status::PreconditionFailed, "P is not on the hypersurface");
  if (parts[1].is_zero()) return finish(v, Status::PreconditionFailed, "P is a singular point (F1 = 0)");
  if (auto r = irreducibility_gate(f, v, options)) return *r;
  v.notes.push_back("criterion: F2 = 0 and F3 = -G^2 F1; Galois and extendable Galois coincide here");

  if (!parts[2].is_zero()) return finish(v, Status::NotGalois, "F2 is nonzero");
  if (parts[3].is_zero()) return finish(v, Status::NotGalois, "F3 = 0 forces G = 0");
  auto q = exact_divide_form(-parts[3], parts[1]);
  if (!q) return finish(v, Status::NotGalois, "F1 does not divide F3");
  auto g = sqrt_form(*q, true);
  if (!g) {
    const Element lead = q->poly().leading_term().second;
    if (!sqrt_in_field(lead) && !quadratic_extension(f.field())) {
      return finish(v, Status::ExtensionRequired, "-F3/F1 needs a square root beyond the extension cap");
    }
    return finish(v, Status::NotGalois, "-F3/F1 is not a square");
  }
  const Field& wf = g->field();
  if (!(wf == f.field())) v.notes.push_back("G defined over " + wf.to_string());
  const Form fe = embed(f, wf);
  const LinearChange c = send_to_last(embed(parts[1], wf));
  LinearChange s = translation(*g);
  auto t = stabilizer_scalar(s, fe);
  if (!t) throw Error(ErrorCode::InvalidArgument, kModule, "internal: translation by G does not preserve F");
  WitnessData w{c, apply_linear_change(c, fe), wf.one(), *g, std::nullopt, {std::move(s)}, {std::move(*t)}};
  v.witness = std::move(w);
  v.group = GroupDesc::cyclic(3);
  return finish(std::move(v), Status::ExtendableGalois);
}

GaloisVerdict check_outer_quartic_char2(const Form& f, const Field& search_field, const CheckOptions& options) {
  GaloisVerdict v = make_verdict(PointKind::Outer, options);
  if (f.field().characteristic() != 2) {
    throw Error(ErrorCode::WrongCharacteristic, kModule, "char-2 quartic check over " + f.field().to_string());
  }
  if (auto r = basic_gate(f, v)) return *r;
  if (f.degree() != 4) return finish(v, Status::PreconditionFailed, "degree must be 4");
  const auto parts = decompose_by_x0(f);
  Element scale = f.field().one();
  if (auto r = outer_scale(parts, v, scale)) return *r;
  if (auto r = irreducibility_gate(f, v, options)) return *r;
  v.notes.push_back("criterion: F1 = 0 and T^3 + F2 T + F3 splits into nonzero linear forms (KleinFour)");
  if (!parts[1].is_zero()) return finish(v, Status::NotGalois, "F1 is nonzero");

  std::vector<Field> fields{search_field};
  if (auto ext = quadratic_extension(search_field); ext && ext->order() <= kMaxSearchField) fields.push_back(*ext);
  const Form g = f.scaled(scale);
  const auto gp = decompose_by_x0(g);
  for (const Field& sf : fields) {
    auto roots = split_cubic_char2(gp[2], gp[3], sf);
    if (!roots) continue;
    if (!(sf == f.field())) v.notes.push_back("roots defined over " + sf.to_string());
    const Form ge = embed(g, sf);
    const Element scale_e = sf == f.field() ? scale : Embedding(f.field(), sf)(scale);
    WitnessData w{LinearChange::identity(sf, f.nvars()), ge, scale_e, std::nullopt, std::vector<Form>(roots->begin(), roots->end()), {}, {}};
    for (const Form& b : *roots) {
      LinearChange s = translation(b);
      auto t = stabilizer_scalar(s, ge);
      if (!t) throw Error(ErrorCode::InvalidArgument, kModule, "internal: root translation does not preserve F");
      w.generators.push_back(std::move(s));
      w.generator_scalars.push_back(std::move(*t));
    }
    v.witness = std::move(w);
    v.group = GroupDesc::klein_four();
    return finish(std::move(v), Status::ExtendableGalois);
  }
  return finish(std::move(v), Status::ExtensionRequired,
                "no root triple over " + fields.back().to_string() + "; roots may lie in a larger extension");
}

GaloisVerdict check_point(const Form& f, PointKind kind, const CheckOptions& options) {
  const std::uint64_t ch = f.field().characteristic();
  const int d = f.degree();
  if (kind == PointKind::Inner) {
    if (ch == 3 && d == 4) return check_inner_quartic_char3(f, options);
    return check_inner_general(f, options);
  }
  if (ch == 2 && d == 4) {
    if (f.field().order() > kMaxSearchField) {
      GaloisVerdict v = make_verdict(kind, options);
      return finish(v, Status::Unknown, "field too large for the linear-root search");
    }
    return check_outer_quartic_char2(f, f.field(), options);
  }
  return check_outer_general(f, options);
}

namespace {

std::vector<Form> quartic_parts(const Form& f) {
  if (f.degree() != 4) throw Error(ErrorCode::PreconditionFailed, kModule, "quartic identity needs degree 4");
  return decompose_by_x0(f);
}

std::vector<Form> monic_outer_parts(const Form& f) {
  auto parts = quartic_parts(f);
  if (parts[0].is_zero()) throw Error(ErrorCode::PreconditionFailed, kModule, "F0 = 0: P is on the hypersurface");
  const Element s = parts[0].poly().terms().begin()->second.inverse();
  for (auto& p : parts) p = p.scaled(s);
  return parts;
}

}  // namespace

bool quartic_inner_identity(const Form& f) {
  if (f.field().characteristic() == 3) {
    throw Error(ErrorCode::WrongCharacteristic, kModule, "inner quartic identity needs characteristic other than 3");
  }
  const auto p = quartic_parts(f);
  if (!p[0].is_zero() || p[1].is_zero()) {
    throw Error(ErrorCode::PreconditionFailed, kModule, "inner quartic identity needs F0 = 0 and F1 != 0");
  }
  return (p[1].scaled(f.field().from_int(3)) * p[3] - p[2] * p[2]).is_zero();
}

bool quartic_outer_identity(const Form& f) {
  if (f.field().characteristic() == 2) {
    throw Error(ErrorCode::WrongCharacteristic, kModule, "outer quartic identity needs characteristic other than 2");
  }
  const auto p = monic_outer_parts(f);
  const Field& k = f.field();
  const Form sq = p[1] * p[1];
  return p[2] == sq.scaled(k.from_rational(mpq_class(3, 8))) &&
         p[3] == (sq * p[1]).scaled(k.from_rational(mpq_class(1, 16)));
}

bool printed_outer_identity(const Form& f) {
  const auto p = monic_outer_parts(f);
  const Field& k = f.field();
  const Form sq = p[1] * p[1];
  return (sq.scaled(k.from_int(3)) - p[2].scaled(k.from_int(8))).is_zero() &&
         ((sq * p[1]).scaled(k.from_int(9)) - p[3].scaled(k.from_int(32))).is_zero();
}

GroupDesc galois_group_label(int d, std::uint64_t ch, PointKind kind) {
  const long long m = kind == PointKind::Inner ? d - 1 : d;
  if (ch == 0 || m % static_cast<long long>(ch) != 0) return GroupDesc::cyclic(m);
  long long l = m;
  long long e = 0;
  while (l % static_cast<long long>(ch) == 0) {
    l /= static_cast<long long>(ch);
    ++e;
  }
  return GroupDesc::semidirect(static_cast<long long>(ch), e, l);
}

bool verify_witness(const Form& f, const GaloisVerdict& verdict) {
  if (!verdict.witness) return false;
  const WitnessData& w = *verdict.witness;
  const Field& wf = w.substitution.field();
  const Form fe = embed(f, wf);
  if (!(apply_linear_change(w.substitution, fe).scaled(w.scale) == w.normal_form)) return false;

  const int d = f.degree();
  const int n = f.nvars();
  const std::uint64_t ch = wf.characteristic();
  const auto parts = decompose_by_x0(w.normal_form);
  if (verdict.kind == PointKind::Inner) {
    if (!parts[0].is_zero() || !(parts[1].poly() == MultiPoly::variable(wf, n, n - 1))) return false;
    if ((ch == 0 || (d - 1) % ch != 0) && !all_zero(parts, 2, d - 1)) return false;
  } else {
    if (!(parts[0].poly() == MultiPoly::constant(wf.one(), n))) return false;
    if ((ch == 0 || d % ch != 0) && !all_zero(parts, 1, d - 1)) return false;
    if (ch == 2 && !parts[1].is_zero()) return false;
  }
  if (w.square_root_G) {
    const auto fp = decompose_by_x0(fe);
    const Form& g = *w.square_root_G;
    if (!fp[2].is_zero() || !(fp[3] == -(g * g * fp[1]))) return false;
  }
  if (w.cubic_roots) {
    const auto& r = *w.cubic_roots;
    if (r.size() != 3) return false;
    if (!((r[0] + r[1] + r[2]).is_zero() && r[0] * r[1] + r[0] * r[2] + r[1] * r[2] == parts[2] &&
          r[0] * r[1] * r[2] == parts[3])) {
      return false;
    }
  }
  if (w.generators.size() != w.generator_scalars.size()) return false;
  for (std::size_t i = 0; i < w.generators.size(); ++i) {
    const LinearChange& s = w.generators[i];
    for (int r = 1; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (!(s.at(r, c) == (r == c ? s.field().one() : s.field().zero()))) return false;
      }
    }
    const Form image = apply_linear_change(s, embed(f, s.field()));
    if (!(image == embed(f, s.field()).scaled(w.generator_scalars[i]))) return false;
  }
  return true;
}

}  // namespace galoispt
