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

#include "galoispt/report.hpp"

#include "galoispt/parse.hpp"

namespace galoispt {

using nlohmann::json;

namespace {

std::string dec(const mpz_class& v) { return v.get_str(); }

json form_or_null(const std::optional<Form>& f) { return f ? json(f->to_string()) : json(nullptr); }

Form form_from(const json& j, const Field& field, int nvars) {
  return Form::of(parse_poly(j.get<std::string>(), field, nvars));
}

template <typename E>
E enum_from(const json& j, std::initializer_list<E> values) {
  const auto s = j.get<std::string>();
  for (E v : values) {
    if (to_string(v) == s) return v;
  }
  throw Error(ErrorCode::ParseError, "report", "unknown value '" + s + "'");
}

}  // namespace

json to_json(const LinearChange& a) { return a.to_strings(); }

json to_json(const GroupDesc& g) {
  json j{{"structure", to_string(g.structure)}, {"order", g.order}, {"label", g.to_string()}};
  switch (g.structure) {
    case GroupDesc::Structure::Cyclic: j["m"] = g.m; break;
    case GroupDesc::Structure::ElemAbelianSemidirect:
      j["p"] = g.p;
      j["e"] = g.e;
      j["l"] = g.l;
      break;
    case GroupDesc::Structure::Other: j["element_orders"] = g.element_orders; break;
    default: break;
  }
  return j;
}

json to_json(const IrreducibilityResult& r) {
  return {{"kind", to_string(r.kind)}, {"witness", form_or_null(r.witness)}, {"detail", r.detail}};
}

json to_json(const GaloisVerdict& v) {
  json j{{"status", to_string(v.status)},
         {"kind", to_string(v.kind)},
         {"assumed_irreducible", v.assumed_irreducible},
         {"notes", v.notes},
         {"group", v.group ? to_json(*v.group) : json(nullptr)},
         {"witness", nullptr}};
  if (v.witness) {
    const WitnessData& w = *v.witness;
    json gens = json::array();
    for (std::size_t i = 0; i < w.generators.size(); ++i) {
      gens.push_back({{"field", w.generators[i].field().to_string()},
                      {"matrix", to_json(w.generators[i])},
                      {"scalar", w.generator_scalars[i].to_string()}});
    }
    json roots = nullptr;
    if (w.cubic_roots) {
      roots = json::array();
      for (const Form& b : *w.cubic_roots) roots.push_back(b.to_string());
    }
    j["witness"] = {{"field", w.substitution.field().to_string()},
                    {"substitution", to_json(w.substitution)},
                    {"normal_form", w.normal_form.to_string()},
                    {"scale", w.scale.to_string()},
                    {"square_root_G", form_or_null(w.square_root_G)},
                    {"cubic_roots", roots},
                    {"generators", gens}};
  }
  return j;
}

json to_json(const TransferReport& r) {
  json targets = json::array();
  for (const TransferTarget& t : r.targets) {
    targets.push_back({{"q", t.q},
                       {"predicted_eligible", t.predicted_eligible},
                       {"irreducibility", t.irreducibility ? to_json(*t.irreducibility) : json(nullptr)},
                       {"verdict", t.verdict ? to_json(*t.verdict) : json(nullptr)},
                       {"error", t.error.empty() ? json(nullptr) : json(t.error)}});
  }
  return {{"schema", kSchemaVersion},
          {"kind", to_string(r.kind)},
          {"source", r.source},
          {"content", dec(r.content)},
          {"height", dec(r.height)},
          {"bound", dec(r.bound)},
          {"bound_satisfied", r.bound_satisfied},
          {"eligible_predicate_modulus", dec(r.eligibility_modulus)},
          {"assumed_irreducible", r.assumed_irreducible},
          {"source_verdict", to_json(r.source_verdict)},
          {"tested_targets", targets}};
}

json to_json(const OracleResult& r) {
  json elems = json::array();
  for (const auto& e : r.elements) {
    json row = json::array();
    for (int c = 0; c < e.matrix.size(); ++c) row.push_back(e.matrix.at(0, c).to_string());
    elems.push_back({{"first_row", row}, {"scalar", e.scalar.to_string()}, {"order", e.order}});
  }
  return {{"search_field", r.search_field.to_string()},
          {"order", r.order},
          {"structure", to_json(r.structure)},
          {"elements", elems}};
}

LinearChange linear_change_from_json(const json& j, const Field& field) {
  const int n = static_cast<int>(j.size());
  std::vector<Element> entries;
  for (const auto& row : j) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::ParseError, "report", "matrix is not square");
    for (const auto& e : row) entries.push_back(parse_element(e.get<std::string>(), field));
  }
  return LinearChange(field, n, std::move(entries));
}

GroupDesc group_from_json(const json& j) {
  using S = GroupDesc::Structure;
  switch (enum_from(j.at("structure"), {S::Cyclic, S::KleinFour, S::ElemAbelianSemidirect, S::Trivial, S::Other})) {
    case S::Cyclic: return GroupDesc::cyclic(j.at("m").get<long long>());
    case S::KleinFour: return GroupDesc::klein_four();
    case S::ElemAbelianSemidirect:
      return GroupDesc::semidirect(j.at("p").get<long long>(), j.at("e").get<long long>(), j.at("l").get<long long>());
    case S::Trivial: return GroupDesc::trivial();
    case S::Other: return GroupDesc::other(j.at("element_orders").get<std::vector<long long>>());
  }
  return GroupDesc::trivial();
}

GaloisVerdict verdict_from_json(const json& j, int nvars) {
  try {
    GaloisVerdict v;
    v.status = enum_from(j.at("status"), {VerdictStatus::ExtendableGalois, VerdictStatus::NotGalois,
                                          VerdictStatus::PreconditionFailed, VerdictStatus::ExtensionRequired,
                                          VerdictStatus::Unknown});
    v.kind = enum_from(j.at("kind"), {PointKind::Inner, PointKind::Outer});
    v.assumed_irreducible = j.at("assumed_irreducible").get<bool>();
    v.notes = j.at("notes").get<std::vector<std::string>>();
    if (!j.at("group").is_null()) v.group = group_from_json(j.at("group"));
    const json& w = j.at("witness");
    if (w.is_null()) return v;
    const Field wf = parse_field(w.at("field").get<std::string>());
    WitnessData data{linear_change_from_json(w.at("substitution"), wf),
                     form_from(w.at("normal_form"), wf, nvars),
                     parse_element(w.at("scale").get<std::string>(), wf),
                     std::nullopt,
                     std::nullopt,
                     {},
                     {}};
    if (!w.at("square_root_G").is_null()) data.square_root_G = form_from(w.at("square_root_G"), wf, nvars);
    if (!w.at("cubic_roots").is_null()) {
      data.cubic_roots.emplace();
      for (const auto& b : w.at("cubic_roots")) data.cubic_roots->push_back(form_from(b, wf, nvars));
    }
    for (const auto& g : w.at("generators")) {
      const Field gf = parse_field(g.at("field").get<std::string>());
      data.generators.push_back(linear_change_from_json(g.at("matrix"), gf));
      data.generator_scalars.push_back(parse_element(g.at("scalar").get<std::string>(), gf));
    }
    v.witness = std::move(data);
    return v;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, "report", e.what());
  }
}

}  // namespace galoispt
