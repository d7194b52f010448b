/*
 * Copyright 2026 The bilink authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "bilink/projection.hpp"

#include <cmath>

#include "bilink/detail/pair_scan.hpp"

namespace bilink {

namespace {

void check_pair(const BipartiteGraph& g, uint32_t x, uint32_t y) {
  if (x >= g.n_left() || y >= g.n_right()) {
    throw InvalidArgument("pair (" + std::to_string(x) + "," +
                          std::to_string(y) + ") out of range");
  }
}

uint32_t intersection_size(std::span<const uint32_t> a,
                           std::span<const uint32_t> b) {
  uint32_t n = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { ++n; ++i; ++j; }
  }
  return n;
}

double similarity_value(SimilarityKind kind, double du, double dv, double i,
                        double dim) {
  switch (kind) {
    case SimilarityKind::Jaccard: {
      const double uni = du + dv - i;
      return uni > 0 ? i / uni : 0.0;
    }
    case SimilarityKind::Cosine:
      return (du > 0 && dv > 0) ? i / std::sqrt(du * dv) : 0.0;
    case SimilarityKind::Euclidean:
      return 1.0 / (1.0 + std::sqrt(du + dv - 2 * i));
    case SimilarityKind::Pearson:
      return detail::binary_pearson(du, dv, i, dim);
  }
  return 0.0;
}

}  // namespace

ProfileVector left_profile(const BipartiteGraph& g, uint32_t i) {
  if (i >= g.n_left()) throw InvalidArgument("left index out of range");
  return {NodeRef{Side::Left, i}, g.left_neighbors(i)};
}

double pair_similarity(SimilarityKind kind, const ProfileVector& u,
                       const ProfileVector& v, uint32_t dim) {
  const auto over = [dim](const ProfileVector& p) {
    return !p.support.empty() && p.support.back() >= dim;
  };
  if (over(u) || over(v)) {
    throw InvalidArgument("pair_similarity: support index exceeds dimension");
  }
  const double i = intersection_size(u.support, v.support);
  return similarity_value(kind, static_cast<double>(u.support.size()),
                          static_cast<double>(v.support.size()), i, dim);
}

double similarity_score(SimilarityKind kind, const BipartiteGraph& g,
                        uint32_t x, uint32_t y) {
  check_pair(g, x, y);
  const auto px = g.left_neighbors(x);
  double acc = 0;
  for (uint32_t a : g.right_neighbors(y)) {
    const auto pa = g.left_neighbors(a);
    const double i = intersection_size(px, pa);
    acc += similarity_value(kind, static_cast<double>(px.size()),
                            static_cast<double>(pa.size()), i, g.n_right());
  }
  return acc;
}

double nbi_score(const BipartiteGraph& g, uint32_t x, uint32_t y) {
  check_pair(g, x, y);
  const auto nx = g.left_neighbors(x);
  double acc = 0;
  for (uint32_t a : g.right_neighbors(y)) {
    double spread = 0;
    for (uint32_t b : g.left_neighbors(a)) {
      if (std::binary_search(nx.begin(), nx.end(), b)) {
        spread += 1.0 / g.right_degree(b);
      }
    }
    acc += spread / g.left_degree(a);
  }
  return acc;
}

std::vector<double> score_all_baseline(Method method, const BipartiteGraph& g,
                                       std::span<const Edge> pairs,
                                       int threads) {
  if (method_class(method) != MethodClass::Projection) {
    throw InvalidArgument("score_all_baseline: '" +
                          std::string(method_name(method)) +
                          "' is not a projection method");
  }
  for (const Edge& e : pairs) check_pair(g, e.left, e.right);
  std::vector<double> out(pairs.size());
  constexpr unsigned parts = detail::kScanNbi | detail::kScanSims;
  detail::scan_pairs<parts>(
      g, pairs,
      [&](const detail::PairAccum& f, size_t i) {
        switch (method) {
          case Method::Nbi: out[i] = f.nbi; break;
          case Method::Jac: out[i] = f.jac; break;
          case Method::Cos: out[i] = f.cos; break;
          case Method::Euc: out[i] = f.euc; break;
          case Method::Pea: out[i] = f.pea; break;
          default: break;
        }
      },
      threads);
  return out;
}

}  // namespace bilink
