// Copyright 2026 The wchoose Authors
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

#include <algorithm>
#include <map>

#include "wchoose/certify.hpp"
#include "wchoose/error.hpp"

namespace wchoose {

std::string to_string(MatrixKind kind) { return kind == MatrixKind::A ? "A" : "M"; }
std::string to_string(Quantity q) { return q == Quantity::Mind ? "mind" : "tmind"; }

namespace {

const IntMatrix& base_matrix(const Certificate& cert, const IncidenceBundle& bundle) {
  return cert.matrix == MatrixKind::A ? bundle.a : bundle.m_mat;
}

void check_shape(const Certificate& cert, const IntMatrix& base) {
  if (static_cast<int>(cert.columns.size()) != base.rows())
    throw InputError("certificate has " + std::to_string(cert.columns.size()) + " columns, base matrix has " +
                     std::to_string(base.rows()) + " rows");
  for (const auto& combo : cert.columns)
    for (const auto& t : combo)
      if (t.column < 0 || t.column >= base.cols())
        throw InputError("certificate refers to column " + std::to_string(t.column) + " outside the base matrix");
  if (cert.caps && static_cast<int>(cert.caps->size()) != base.cols())
    throw InputError("cap vector length does not match the base matrix");
}

// Coefficients per base column after merging repeated terms.
std::map<int, long long> merged(const Combination& combo) {
  std::map<int, long long> out;
  for (const auto& t : combo) out[t.column] += t.coeff;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

std::vector<int> usage_counts(const Certificate& cert, int base_cols) {
  std::vector<int> usage(static_cast<std::size_t>(base_cols), 0);
  for (const auto& combo : cert.columns)
    for (const auto& [col, coeff] : merged(combo)) ++usage.at(static_cast<std::size_t>(col));
  return usage;
}

IntMatrix assemble(const Certificate& cert, const IncidenceBundle& bundle) {
  const IntMatrix& base = base_matrix(cert, bundle);
  check_shape(cert, base);
  const int n = base.rows();
  IntMatrix l(n, n);
  for (int c = 0; c < n; ++c)
    for (const auto& [col, coeff] : merged(cert.columns[static_cast<std::size_t>(c)]))
      for (int r = 0; r < n; ++r) l(r, c) += base(r, col) * coeff;
  return l;
}

VerifyResult verify_detailed(const Certificate& cert, const IncidenceBundle& bundle) {
  if (!(cert.digraph == bundle.digraph)) throw InputError("certificate and bundle describe different digraphs");
  const IntMatrix& base = base_matrix(cert, bundle);
  check_shape(cert, base);
  VerifyResult res;
  res.usage = usage_counts(cert, base.cols());
  res.max_usage = res.usage.empty() ? 0 : *std::max_element(res.usage.begin(), res.usage.end());
  for (int j = 0; j < base.cols(); ++j) {
    const int used = res.usage[static_cast<std::size_t>(j)];
    if (used > cert.claimed_bound) {
      res.reason = "column " + std::to_string(j) + " used " + std::to_string(used) + " times, bound " +
                   std::to_string(cert.claimed_bound);
      return res;
    }
    if (cert.caps && used > (*cert.caps)[static_cast<std::size_t>(j)]) {
      res.reason = "column " + std::to_string(j) + " exceeds its cap";
      return res;
    }
  }
  res.permanent = per_square(assemble(cert, bundle));
  if (res.permanent == 0) {
    res.reason = "assembled matrix has zero permanent";
    return res;
  }
  res.ok = true;
  return res;
}

bool verify(const Certificate& cert, const IncidenceBundle& bundle) { return verify_detailed(cert, bundle).ok; }

bool verify(const Certificate& cert) { return verify(cert, build_bundle(cert.digraph)); }

BoundReport make_report(Certificate cert) {
  const auto res = verify_detailed(cert, build_bundle(cert.digraph));
  if (!res.ok) throw VerificationError("certificate rejected: " + res.reason);
  BoundReport r;
  r.graph = cert.digraph.graph();
  r.quantity = cert.matrix == MatrixKind::A ? Quantity::Mind : Quantity::Tmind;
  r.bound = cert.claimed_bound;
  r.implied_choosability = r.bound + 1;
  const int m = r.graph.edge_count();
  r.edge_only = std::all_of(res.usage.begin() + m, res.usage.end(), [](int u) { return u == 0; });
  r.certificate = std::move(cert);
  return r;
}

BoundReport relabel(const BoundReport& report, const Graph& target, std::span<const Vertex> vertex_map) {
  const Graph& src = report.graph;
  if (static_cast<int>(vertex_map.size()) != src.vertex_count() || target.vertex_count() != src.vertex_count() ||
      target.edge_count() != src.edge_count())
    throw InputError("relabel needs a bijection between graphs of equal size");
  const int m = src.edge_count();
  std::vector<EdgeId> edge_map(static_cast<std::size_t>(m));
  std::vector<Arc> arcs(static_cast<std::size_t>(m));
  const Digraph& d = report.certificate.digraph;
  for (EdgeId e = 0; e < m; ++e) {
    const Arc& a = d.arc(e);
    const Vertex t = vertex_map[static_cast<std::size_t>(a.tail)];
    const Vertex h = vertex_map[static_cast<std::size_t>(a.head)];
    const auto image = target.edge_between(t, h);
    if (!image) throw InputError("vertex map is not an isomorphism");
    edge_map[static_cast<std::size_t>(e)] = *image;
    arcs[static_cast<std::size_t>(*image)] = Arc{t, h};
  }
  auto column_image = [&](int col) {
    if (col < m) return edge_map[static_cast<std::size_t>(col)];
    return m + vertex_map[static_cast<std::size_t>(col - m)];
  };
  Certificate cert;
  cert.digraph = Digraph(target, std::move(arcs));
  cert.matrix = report.certificate.matrix;
  cert.claimed_bound = report.certificate.claimed_bound;
  for (const auto& combo : report.certificate.columns) {
    Combination c;
    for (const auto& t : combo) c.push_back(Term{column_image(t.column), t.coeff});
    cert.columns.push_back(std::move(c));
  }
  if (report.certificate.caps) {
    const auto& caps = *report.certificate.caps;
    std::vector<int> moved(caps.size());
    for (std::size_t j = 0; j < caps.size(); ++j) moved[static_cast<std::size_t>(column_image(static_cast<int>(j)))] = caps[j];
    cert.caps = std::move(moved);
  }
  auto out = make_report(std::move(cert));
  out.quantity = report.quantity;
  return out;
}

BoundReport witness_search(const Digraph& d, MatrixKind kind, std::span<const int> caps, const PindOptions& options) {
  const auto bundle = build_bundle(d);
  const IntMatrix& base = kind == MatrixKind::A ? bundle.a : bundle.m_mat;
  const auto res = pind(base, caps, options);
  if (!res.finite()) throw VerificationError("no column multiset with nonzero permanent exists");
  Certificate cert;
  cert.digraph = d;
  cert.matrix = kind;
  cert.claimed_bound = *res.value;
  for (const int col : res.witness) cert.columns.push_back({Term{col, 1}});
  if (!caps.empty()) cert.caps = std::vector<int>(caps.begin(), caps.end());
  return make_report(std::move(cert));
}

BoundReport witness_search_capped(const Digraph& d, int cap, const PindOptions& options) {
  const std::vector<int> caps(static_cast<std::size_t>(d.graph().edge_count()), cap);
  auto r = witness_search(d, MatrixKind::A, caps, options);
  // The caps only steer the search; the bound already records them.
  r.certificate.caps.reset();
  return r;
}

BoundReport witness_edgeless(int n) {
  Certificate cert;
  cert.digraph = Digraph(Graph(n), {});
  return make_report(std::move(cert));
}

}  // namespace wchoose
