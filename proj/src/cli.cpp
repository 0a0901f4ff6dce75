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

#include "galoispt/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "galoispt/oracle.hpp"
#include "galoispt/parse.hpp"
#include "galoispt/report.hpp"
#include "galoispt/resolvent.hpp"
#include "galoispt/transfer.hpp"

namespace galoispt {

using nlohmann::json;

namespace {

constexpr std::string_view kModule = "cli";

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorCode::ParseError, kModule, what); }

std::string read_poly_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) usage("cannot read polynomial file '" + arg.substr(1) + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::uint64_t> parse_targets(const std::string& text) {
  if (text.rfind("upto:", 0) == 0) {
    try {
      return primes_up_to(std::stoull(text.substr(5)));
    } catch (const std::logic_error&) {
      usage("bad --targets bound '" + text + "'");
    }
  }
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      usage("bad --targets entry '" + item + "'");
    }
  }
  return out;
}

PointKind parse_kind(const std::string& s) {
  if (s == "inner") return PointKind::Inner;
  if (s == "outer") return PointKind::Outer;
  usage("--kind must be inner or outer, got '" + s + "'");
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string point_text(const std::vector<Element>& p) {
  std::vector<std::string> s;
  for (const auto& e : p) s.push_back(e.to_string());
  return join(s, ",");
}

void print_verdict(std::ostream& out, const GaloisVerdict& v, const std::string& indent = "") {
  out << indent << "status: " << to_string(v.status) << "\n";
  out << indent << "kind: " << to_string(v.kind) << "\n";
  if (v.group) out << indent << "group: " << v.group->to_string() << "\n";
  if (v.witness) {
    const WitnessData& w = *v.witness;
    out << indent << "substitution: " << w.substitution.to_string() << "\n";
    out << indent << "normal form: " << w.normal_form.to_string() << "\n";
    if (!w.scale.is_one()) out << indent << "scale: " << w.scale.to_string() << "\n";
    if (w.square_root_G) out << indent << "G: " << w.square_root_G->to_string() << "\n";
    if (w.cubic_roots) {
      std::vector<std::string> r;
      for (const auto& b : *w.cubic_roots) r.push_back(b.to_string());
      out << indent << "roots: " << join(r, ", ") << "\n";
    }
    for (std::size_t i = 0; i < w.generators.size(); ++i) {
      out << indent << "generator: " << w.generators[i].to_string() << " (t = " << w.generator_scalars[i].to_string()
          << ")\n";
    }
  }
  for (const auto& n : v.notes) out << indent << "note: " << n << "\n";
}

int run_check(const Job& job, std::ostream& out) {
  const Field& k = *job.field;
  const LinearChange m = normalize_point(job.point, k);
  const Form g = normalized_form(*job.form, m);
  const PointKind kind = job.command == Command::CheckInner ? PointKind::Inner : PointKind::Outer;
  const GaloisVerdict v = check_point(g, kind, {job.assume_irreducible, job.trials});
  if (job.json) {
    out << json{{"schema", kSchemaVersion},
                {"command", to_string(job.command)},
                {"field", k.to_string()},
                {"form", job.form->to_string()},
                {"point", point_text(job.point)},
                {"normalization", to_json(m)},
                {"checked_form", g.to_string()},
                {"verdict", to_json(v)}}
               .dump(2)
        << "\n";
  } else {
    out << "field: " << k.to_string() << "\n";
    out << "point: " << point_text(job.point) << "\n";
    if (!m.is_identity()) out << "checked form: " << g.to_string() << "\n";
    print_verdict(out, v);
  }
  return exit_code_for(v.status);
}

int run_transfer(const Job& job, std::ostream& out) {
  if (!job.field->is_rationals()) usage("transfer works on integer forms; use --field Q");
  const TransferReport r = transfer_scan(*job.form, *job.kind, job.source, job.targets,
                                         {job.assume_irreducible, job.trials, 0});
  if (job.json) {
    json j = to_json(r);
    j["command"] = to_string(job.command);
    j["form"] = job.form->to_string();
    out << j.dump(2) << "\n";
    return kExitDecided;
  }
  out << "kind: " << to_string(r.kind) << "\n";
  out << "source: " << r.source << "\n";
  out << "content removed: " << r.content.get_str() << "\n";
  out << "height: " << r.height.get_str() << "\n";
  out << "bound: " << r.bound.get_str() << (r.bound_satisfied ? " (satisfied)" : " (not satisfied)") << "\n";
  out << "eligibility modulus: " << r.eligibility_modulus.get_str() << "\n";
  out << "source verdict: " << to_string(r.source_verdict.status) << "\n";
  out << "  q  eligible  irreducibility        verdict\n";
  for (const auto& t : r.targets) {
    std::ostringstream line;
    line << (t.q < 10 ? "  " : " ") << t.q << "  " << (t.predicted_eligible ? "yes     " : "no      ") << "  ";
    const std::string irr = t.irreducibility ? std::string(to_string(t.irreducibility->kind)) : "-";
    line << irr << std::string(irr.size() < 22 ? 22 - irr.size() : 1, ' ');
    line << (t.verdict ? std::string(to_string(t.verdict->status)) : "error: " + t.error);
    out << line.str() << "\n";
  }
  return kExitDecided;
}

int run_oracle(const Job& job, std::ostream& out) {
  const LinearChange m = normalize_point(job.point, *job.field);
  const Form g = normalized_form(*job.form, m);
  json j{{"schema", kSchemaVersion}, {"command", to_string(job.command)}, {"form", job.form->to_string()}};
  std::optional<OracleVerdict> verdict;
  OracleResult r = [&] {
    if (job.kind) {
      verdict = brute_force_is_galois(g, *job.kind, job.ext_degree);
      return verdict->result;
    }
    return enumerate_stabilizer(g, job.ext_degree);
  }();
  if (job.json) {
    j["result"] = to_json(r);
    if (verdict) {
      j["is_galois"] = verdict->is_galois;
      j["caveat"] = verdict->caveat;
    }
    out << j.dump(2) << "\n";
    return kExitDecided;
  }
  out << "search field: " << r.search_field.to_string() << "\n";
  out << "order: " << r.order << "\n";
  out << "structure: " << r.structure.to_string() << "\n";
  for (const auto& e : r.elements) {
    std::vector<std::string> row;
    for (int c = 0; c < e.matrix.size(); ++c) row.push_back(e.matrix.at(0, c).to_string());
    out << "  first row (" << join(row, ", ") << ")  t = " << e.scalar.to_string() << "  order " << e.order << "\n";
  }
  if (verdict) {
    out << "galois: " << (verdict->is_galois ? "yes" : "no") << "\n";
    if (!verdict->caveat.empty()) out << "note: " << verdict->caveat << "\n";
  }
  return kExitDecided;
}

int run_resolvent(const Job& job, std::ostream& out) {
  const MultiPoly& f = job.form->poly();
  const int n = f.degree_in(0);
  if (n != 3 && n != 4) usage("resolvent needs a cubic or quartic in X0");
  std::vector<MultiPoly> a(n + 1, MultiPoly(f.field(), f.nvars()));
  for (const auto& [mono, c] : f.terms()) {
    Monomial rest = mono;
    rest.exp[0] = 0;
    a[n - mono.exp[0]].add_term(rest, c);
  }
  if (!(a[0] == MultiPoly::constant(f.field().one(), f.nvars()))) usage("resolvent needs a monic polynomial in X0");
  json j{{"schema", kSchemaVersion}, {"command", to_string(job.command)}, {"poly", f.to_string()}};
  std::ostringstream table;
  if (n == 3) {
    const auto inv = cubic_invariants(a[1], a[2], a[3]);
    const auto cls = classify_cubic_galois(a[1], a[2], a[3]);
    j["b1"] = inv.b1.to_string();
    j["b2"] = inv.b2.to_string();
    j["discriminant"] = inv.delta.to_string();
    j["classification"] = to_string(cls);
    table << "b1: " << inv.b1.to_string() << "\nb2: " << inv.b2.to_string()
          << "\ndiscriminant: " << inv.delta.to_string() << "\nclassification: " << to_string(cls) << "\n";
  } else {
    const auto g = resolvent_cubic(a[1], a[2], a[3], a[4]);
    j["b1"] = g.b1.to_string();
    j["b2"] = g.b2.to_string();
    j["b3"] = g.b3.to_string();
    table << "resolvent cubic: t^3 + (" << g.b1.to_string() << ")t^2 + (" << g.b2.to_string() << ")t + ("
          << g.b3.to_string() << ")\n";
    if (f.field().characteristic() == 2 && a[1].is_zero()) {
      const auto [c1, c2] = depressed_resolvent_char2(a[2], a[3]);
      j["depressed"] = {c1.to_string(), c2.to_string()};
      table << "depressed: t^3 + (" << c1.to_string() << ")t + (" << c2.to_string() << ")\n";
    }
    const bool constants = std::all_of(a.begin(), a.end(), [](const MultiPoly& p) { return p.total_degree() <= 0; });
    if (constants && f.field().is_finite()) {
      auto coeff = [&](int i) { return a[i].coefficient(Monomial{}); };
      const auto cls = classify_quartic_galois(coeff(1), coeff(2), coeff(3), coeff(4));
      j["classification"] = to_string(cls);
      table << "classification (if irreducible and separable): " << to_string(cls) << "\n";
    }
  }
  out << (job.json ? j.dump(2) + "\n" : table.str());
  return kExitDecided;
}

int run_content(const Job& job, std::ostream& out) {
  if (!job.field->is_rationals()) usage("content works on integer forms; use --field Q");
  auto [g, removed] = make_integer_form(*job.form);
  const int d = g.degree();
  json j{{"schema", kSchemaVersion},
         {"command", to_string(job.command)},
         {"form", job.form->to_string()},
         {"content", removed.get_str()},
         {"height", g.height().get_str()}};
  std::vector<std::string> parts;
  for (int i = 0; i <= d; ++i) parts.push_back(g.part_content(i).get_str());
  j["part_contents"] = parts;
  if (d >= 4) {
    j["inner_bound"] = inner_bound(d, g.height()).get_str();
    j["outer_bound"] = outer_bound(d, g.height()).get_str();
  }
  if (job.source != 0) {
    j["content_criterion_inner"] = content_criterion_inner(g, job.source);
    j["content_criterion_outer"] = content_criterion_outer(g, job.source);
  }
  if (job.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "content: " << removed.get_str() << "\nheight: " << g.height().get_str()
        << "\npart contents A(F_0..F_d): " << join(parts, ", ") << "\n";
    if (d >= 4) {
      out << "inner bound: " << j["inner_bound"].get<std::string>() << "\nouter bound: "
          << j["outer_bound"].get<std::string>() << "\n";
    }
    if (job.source != 0) {
      out << "content criterion at " << job.source << ": inner " << (j["content_criterion_inner"].get<bool>() ? "yes" : "no")
          << ", outer " << (j["content_criterion_outer"].get<bool>() ? "yes" : "no") << "\n";
    }
  }
  return kExitDecided;
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::CheckInner: return "check-inner";
    case Command::CheckOuter: return "check-outer";
    case Command::Transfer: return "transfer";
    case Command::Oracle: return "oracle";
    case Command::Resolvent: return "resolvent";
    case Command::Content: return "content";
  }
  return "check-inner";
}

int exit_code_for(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::ExtendableGalois:
    case VerdictStatus::NotGalois: return kExitDecided;
    case VerdictStatus::PreconditionFailed: return kExitPrecondition;
    case VerdictStatus::ExtensionRequired:
    case VerdictStatus::Unknown: return kExitUndecided;
  }
  return kExitUndecided;
}

Job parse_job(const std::vector<std::string>& args) {
  CLI::App app{"Galois points of hypersurfaces"};
  app.require_subcommand(1);
  Job job;
  std::string poly_arg, point_arg, targets_arg = "upto:50", kind_arg;
  const std::vector<Command> commands{Command::CheckInner, Command::CheckOuter, Command::Transfer,
                                      Command::Oracle,     Command::Resolvent,  Command::Content};
  std::vector<CLI::App*> subs;
  for (Command c : commands) {
    CLI::App* sub = app.add_subcommand(std::string(to_string(c)));
    sub->add_option("--field", job.field_text, "Q, GF(p), GF(p^k) or GF(p^k; m0,...,1)");
    sub->add_option("--poly", poly_arg, "polynomial text or @file")->required();
    sub->add_option("--point", point_arg, "coordinates c0,c1,... (default 1,0,...,0)");
    sub->add_flag("--assume-irreducible", job.assume_irreducible);
    sub->add_option("--ext-degree", job.ext_degree, "oracle extension degree (1 or 2)")->check(CLI::Range(1, 2));
    sub->add_option("--targets", targets_arg, "comma list of primes or upto:N");
    sub->add_option("--kind", kind_arg, "inner or outer");
    sub->add_option("--source", job.source, "source characteristic (0 or a prime)");
    sub->add_option("--trials", job.trials, "line restrictions for the irreducibility heuristic")
        ->check(CLI::Range(1, 10000));
    sub->add_flag("--json", job.json);
    subs.push_back(sub);
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) throw;  // --help
    throw Error(ErrorCode::ParseError, kModule, e.what());
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) job.command = commands[i];
  }
  if (!kind_arg.empty()) job.kind = parse_kind(kind_arg);
  if (job.command == Command::Transfer && !job.kind) usage("transfer needs --kind inner|outer");
  job.targets = parse_targets(targets_arg);

  job.field = parse_field(job.field_text);
  job.poly_text = read_poly_text(poly_arg);
  std::optional<std::vector<Element>> point;
  if (!point_arg.empty()) point = parse_point(point_arg, *job.field);
  const MultiPoly poly = parse_poly(job.poly_text, *job.field, point ? static_cast<int>(point->size()) : 1);
  if (poly.is_zero()) throw Error(ErrorCode::ZeroForm, kModule, "the polynomial is zero");
  job.form = Form::of(poly);
  const int n = poly.nvars();
  if (point && static_cast<int>(point->size()) != n) {
    throw Error(ErrorCode::DimensionMismatch, kModule,
                "point has " + std::to_string(point->size()) + " coordinates but the form has " + std::to_string(n) +
                    " variables");
  }
  if (point) {
    job.point = std::move(*point);
  } else {
    job.point.assign(n, job.field->zero());
    job.point[0] = job.field->one();
  }
  return job;
}

int run_job(const Job& job, std::ostream& out) {
  switch (job.command) {
    case Command::CheckInner:
    case Command::CheckOuter: return run_check(job, out);
    case Command::Transfer: return run_transfer(job, out);
    case Command::Oracle: return run_oracle(job, out);
    case Command::Resolvent: return run_resolvent(job, out);
    case Command::Content: return run_content(job, out);
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_job(parse_job(args), out);
  } catch (const CLI::ParseError& e) {
    out << "usage: galoispt <check-inner|check-outer|transfer|oracle|resolvent|content> --poly <text|@file> "
           "[--field F] [--point c0,c1,...] [--assume-irreducible] [--ext-degree e] [--targets list|upto:N] "
           "[--kind inner|outer] [--source p] [--trials n] [--json]\n";
    return e.get_exit_code();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::PreconditionFailed ? kExitPrecondition : kExitUsage;
  }
}

}  // namespace galoispt
