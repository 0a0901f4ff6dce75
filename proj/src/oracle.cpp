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

#include "galoispt/oracle.hpp"

#include <algorithm>
#include <set>

#include "parallel.hpp"

namespace galoispt {

namespace {

constexpr std::string_view kModule = "oracle";
constexpr std::uint64_t kMaxSearchField = 81;

std::vector<std::uint64_t> first_row_codes(const LinearChange& m) {
  std::vector<std::uint64_t> out;
  for (int c = 0; c < m.size(); ++c) out.push_back(m.at(0, c).code());
  return out;
}

Field search_field_for(const Form& f, int e) {
  const Field& k = f.field();
  if (!k.is_finite()) throw Error(ErrorCode::FieldTooLarge, kModule, "the oracle needs a finite field");
  if (e < 1 || e > 2) throw Error(ErrorCode::FieldTooLarge, kModule, "extension degree must be 1 or 2");
  if (f.nvars() > 3) throw Error(ErrorCode::TooManyVariables, kModule, "the oracle handles plane curves only");
  Field out = k;
  if (e == 2) {
    auto ext = quadratic_extension(k);
    if (!ext) throw Error(ErrorCode::FieldTooLarge, kModule, "no quadratic extension within the degree cap");
    out = *ext;
  }
  if (out.order() > kMaxSearchField) {
    throw Error(ErrorCode::FieldTooLarge, kModule, out.to_string() + " has more than 81 elements");
  }
  return out;
}

long long element_order(const LinearChange& s, long long cap) {
  const LinearChange id = LinearChange::identity(s.field(), s.size());
  LinearChange p = s;
  for (long long k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = p * s;
  }
  throw Error(ErrorCode::InvalidArgument, kModule, "internal: element order exceeds the group order");
}

}  // namespace

GroupDesc classify_group(const std::vector<long long>& element_orders, std::uint64_t ch) {
  const long long n = static_cast<long long>(element_orders.size());
  if (n <= 1) return GroupDesc::trivial();
  const long long top = *std::max_element(element_orders.begin(), element_orders.end());
  if (n == 4 && top <= 2) return GroupDesc::klein_four();
  if (top == n) return GroupDesc::cyclic(n);
  const auto p = static_cast<long long>(ch);
  if (p > 1 && n % p == 0) {
    long long pe = 1, e = 0, l = n;
    while (l % p == 0) {
      l /= p;
      pe *= p;
      ++e;
    }
    const long long small = std::count_if(element_orders.begin(), element_orders.end(),
                                          [&](long long o) { return o == 1 || o == p; });
    const bool has_l = std::find(element_orders.begin(), element_orders.end(), l) != element_orders.end();
    if (small == pe && has_l && (pe - 1) % l == 0) return GroupDesc::semidirect(p, e, l);
  }
  return GroupDesc::other(element_orders);
}

OracleResult enumerate_stabilizer(const Form& f, int extension_degree, unsigned threads) {
  const Field sf = search_field_for(f, extension_degree);
  const Form g = f.field() == sf ? f : f.embedded(Embedding(f.field(), sf));
  if (g.is_zero()) throw Error(ErrorCode::ZeroForm, kModule, "the zero form has no stabilizer");
  const int n = g.nvars();
  const int d = g.degree();
  const auto elems = sf.elements();
  const std::uint64_t q = sf.order();

  // t = s11^(d - i0) where F_{i0} is the first nonzero X0-part.
  const auto parts = decompose_by_x0(g);
  int i0 = 0;
  while (parts[i0].is_zero()) ++i0;

  // Cheap filter before the exact comparison: at a few points pt, the
  // image F(row . pt, pt1, ...) must equal t F(pt). Everything is done on
  // element codes with lookup tables.
  constexpr int kPoints = 8;
  std::vector<std::uint32_t> add(q * q);
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) add[a * q + b] = static_cast<std::uint32_t>((elems[a] + elems[b]).code());
  }
  // scaled[k][i][c] = code(elems[c] * pt_k[i]); line[k][x] = code(F(x, pt_k[1], ...)).
  std::vector<std::vector<std::vector<std::uint32_t>>> scaled(kPoints, std::vector<std::vector<std::uint32_t>>(n));
  std::vector<std::vector<std::uint32_t>> line(kPoints, std::vector<std::uint32_t>(q));
  std::vector<Element> values;
  for (int k = 0; k < kPoints; ++k) {
    std::vector<Element> pt;
    for (int i = 0; i < n; ++i) {
      const auto ku = static_cast<std::uint64_t>(k), iu = static_cast<std::uint64_t>(i);
      pt.push_back(elems[(ku * 7 + iu * 3 + ku * iu + 1) % q]);
    }
    values.push_back(g.poly().evaluate(pt));
    for (int i = 0; i < n; ++i) {
      scaled[k][i].resize(q);
      for (std::uint64_t c = 0; c < q; ++c) scaled[k][i][c] = static_cast<std::uint32_t>((elems[c] * pt[i]).code());
    }
    std::vector<Element> probe = pt;
    for (std::uint64_t x = 0; x < q; ++x) {
      probe[0] = elems[x];
      line[k][x] = static_cast<std::uint32_t>(g.poly().evaluate(probe).code());
    }
  }

  std::uint64_t tail = 1;
  for (int i = 1; i < n; ++i) tail *= q;
  std::vector<std::vector<StabilizerElement>> found(q - 1);
  detail::parallel_for(
      q - 1,
      [&](std::size_t idx) {
        const std::uint64_t s0 = idx + 1;
        const Element t = elems[s0].pow(d - i0);
        std::uint32_t want[kPoints];
        for (int k = 0; k < kPoints; ++k) want[k] = static_cast<std::uint32_t>((t * values[k]).code());
        std::vector<std::uint64_t> row(n);
        row[0] = s0;
        for (std::uint64_t code = 0; code < tail; ++code) {
          std::uint64_t x = code;
          for (int i = 1; i < n; ++i) {
            row[i] = x % q;
            x /= q;
          }
          bool pass = true;
          for (int k = 0; k < kPoints && pass; ++k) {
            std::uint32_t x0 = scaled[k][0][row[0]];
            for (int i = 1; i < n; ++i) x0 = add[x0 * q + scaled[k][i][row[i]]];
            pass = line[k][x0] == want[k];
          }
          if (!pass) continue;
          std::vector<Element> entries = LinearChange::identity(sf, n).entries();
          for (int i = 0; i < n; ++i) entries[i] = elems[row[i]];
          LinearChange s(sf, n, std::move(entries));
          if (!(apply_linear_change(s, g) == g.scaled(t))) continue;
          found[idx].push_back({std::move(s), t, 1});
        }
      },
      threads);

  OracleResult r{{}, 0, GroupDesc::trivial(), sf};
  for (auto& chunk : found) {
    for (auto& e : chunk) r.elements.push_back(std::move(e));
  }
  std::sort(r.elements.begin(), r.elements.end(), [](const StabilizerElement& a, const StabilizerElement& b) {
    return first_row_codes(a.matrix) < first_row_codes(b.matrix);
  });
  r.order = static_cast<long long>(r.elements.size());
  std::vector<long long> orders;
  for (auto& e : r.elements) {
    e.order = element_order(e.matrix, r.order);
    orders.push_back(e.order);
  }
  r.structure = classify_group(orders, sf.characteristic());
  return r;
}

bool is_closed(const OracleResult& r) {
  std::set<std::vector<std::uint64_t>> rows;
  for (const auto& e : r.elements) rows.insert(first_row_codes(e.matrix));
  if (r.elements.empty()) return false;
  const LinearChange id = LinearChange::identity(r.search_field, r.elements.front().matrix.size());
  if (!rows.count(first_row_codes(id))) return false;
  for (const auto& a : r.elements) {
    if (!rows.count(first_row_codes(a.matrix.inverse()))) return false;
    for (const auto& b : r.elements) {
      if (!rows.count(first_row_codes(a.matrix * b.matrix))) return false;
    }
  }
  return true;
}

OracleVerdict brute_force_is_galois(const Form& f, PointKind kind, int extension_degree, unsigned threads) {
  const auto parts = decompose_by_x0(f);
  if (kind == PointKind::Inner && (!parts[0].is_zero() || parts[1].is_zero())) {
    throw Error(ErrorCode::PreconditionFailed, kModule, "inner point needs F0 = 0 and F1 != 0");
  }
  if (kind == PointKind::Outer && parts[0].is_zero()) {
    throw Error(ErrorCode::PreconditionFailed, kModule, "outer point needs F0 != 0");
  }
  OracleVerdict v{false, enumerate_stabilizer(f, extension_degree, threads), {}};
  const long long want = kind == PointKind::Inner ? f.degree() - 1 : f.degree();
  v.is_galois = v.result.order == want;
  if (!v.is_galois) {
    v.caveat = "not Galois over " + v.result.search_field.to_string() + "; a larger extension may add automorphisms";
  }
  return v;
}

}  // namespace galoispt
