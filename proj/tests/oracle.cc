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
#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "bilink/rng.hpp"

namespace bilink::oracle {

BruteCommunity brute_local_community(const BipartiteGraph& g, uint32_t x,
                                     uint32_t y) {
  BruteCommunity out;
  std::set<std::pair<uint32_t, uint32_t>> community_edges;
  // Simple paths x - b - a - y: edges (x,b), (a,b), (a,y) with b != y, a != x.
  for (uint32_t b : g.left_neighbors(x)) {
    if (b == y) continue;
    for (uint32_t a : g.right_neighbors(b)) {
      if (a == x) continue;
      if (!g.has_edge(a, y)) continue;
      out.cn_right.insert(b);
      out.cn_left.insert(a);
      community_edges.insert({a, b});
    }
  }
  out.lcl = community_edges.size();
  for (const auto& [a, b] : community_edges) {
    out.gamma_left[a] += 1;
    out.gamma_right[b] += 1;
  }
  return out;
}

uint64_t brute_p3_count(const BipartiteGraph& g, uint32_t x, uint32_t y) {
  uint64_t n = 0;
  for (uint32_t b : g.left_neighbors(x)) {
    if (b == y) continue;
    for (uint32_t a : g.right_neighbors(b)) {
      if (a == x) continue;
      if (g.has_edge(a, y)) ++n;
    }
  }
  return n;
}

double brute_index(IndexKind kind, const BipartiteGraph& g, uint32_t x,
                   uint32_t y) {
  const BruteCommunity lc = brute_local_community(g, x, y);
  const double dx = g.left_degree(x);
  const double dy = g.right_degree(y);
  const double cn = static_cast<double>(lc.cn_left.size() + lc.cn_right.size());
  const double lcl = static_cast<double>(lc.lcl);
  const double uni = dx + dy;

  auto sum_over_cns = [&](auto term) {
    double acc = 0;
    for (uint32_t a : lc.cn_left) {
      acc += term(static_cast<double>(g.left_degree(a)), lc.gamma_left.at(a));
    }
    for (uint32_t b : lc.cn_right) {
      acc += term(static_cast<double>(g.right_degree(b)), lc.gamma_right.at(b));
    }
    return acc;
  };

  switch (kind) {
    case IndexKind::CN: return cn;
    case IndexKind::JC: return uni > 0 ? cn / uni : 0.0;
    case IndexKind::AA:
      return sum_over_cns([](double d, uint32_t) { return 1.0 / std::log2(d); });
    case IndexKind::RA:
      return sum_over_cns([](double d, uint32_t) { return 1.0 / d; });
    case IndexKind::PA: return dx * dy;
    case IndexKind::LCL: return lcl;
    case IndexKind::CAR: return cn * lcl;
    case IndexKind::CJC: return uni > 0 ? cn * lcl / uni : 0.0;
    case IndexKind::CAA:
      return sum_over_cns(
          [](double d, uint32_t gam) { return gam / std::log2(d); });
    case IndexKind::CRA:
      return sum_over_cns([](double d, uint32_t gam) { return gam / d; });
    case IndexKind::CPA: {
      const double ex = dx - static_cast<double>(lc.cn_right.size());
      const double ey = dy - static_cast<double>(lc.cn_left.size());
      const double car = cn * lcl;
      return ex * ey + ex * car + ey * car + car * car;
    }
  }
  return 0.0;
}

double dense_nbi(const BipartiteGraph& g, uint32_t x, uint32_t y) {
  const uint32_t nl = g.n_left(), nr = g.n_right();
  std::vector<std::vector<double>> adj(nl, std::vector<double>(nr, 0.0));
  for (uint32_t i = 0; i < nl; ++i) {
    for (uint32_t j : g.left_neighbors(i)) adj[i][j] = 1.0;
  }
  // Unit resource on N(x), spread right->left then left->right.
  std::vector<double> right_res(nr, 0.0);
  for (uint32_t j = 0; j < nr; ++j) right_res[j] = adj[x][j];
  std::vector<double> left_res(nl, 0.0);
  for (uint32_t i = 0; i < nl; ++i) {
    for (uint32_t j = 0; j < nr; ++j) {
      if (adj[i][j] > 0 && g.right_degree(j) > 0) {
        left_res[i] += right_res[j] / g.right_degree(j);
      }
    }
  }
  double score = 0;
  for (uint32_t i = 0; i < nl; ++i) {
    if (adj[i][y] > 0 && g.left_degree(i) > 0) {
      score += left_res[i] / g.left_degree(i);
    }
  }
  return score;
}

double dense_pair_similarity(SimKind kind, const std::vector<int>& u,
                             const std::vector<int>& v) {
  const size_t dim = u.size();
  double dot = 0, su = 0, sv = 0;
  for (size_t k = 0; k < dim; ++k) {
    dot += u[k] * v[k];
    su += u[k];
    sv += v[k];
  }
  switch (kind) {
    case SimKind::Jaccard: {
      const double uni = su + sv - dot;
      return uni > 0 ? dot / uni : 0.0;
    }
    case SimKind::Cosine:
      return (su > 0 && sv > 0) ? dot / std::sqrt(su * sv) : 0.0;
    case SimKind::Euclidean: {
      double d2 = 0;
      for (size_t k = 0; k < dim; ++k) d2 += (u[k] - v[k]) * (u[k] - v[k]);
      return 1.0 / (1.0 + std::sqrt(d2));
    }
    case SimKind::Pearson: {
      const double n = static_cast<double>(dim);
      const double mu = su / n, mv = sv / n;
      double sxy = 0, sxx = 0, syy = 0;
      for (size_t k = 0; k < dim; ++k) {
        sxy += (u[k] - mu) * (v[k] - mv);
        sxx += (u[k] - mu) * (u[k] - mu);
        syy += (v[k] - mv) * (v[k] - mv);
      }
      if (sxx == 0 || syy == 0) return 0.0;
      return sxy / std::sqrt(sxx * syy);
    }
  }
  return 0.0;
}

double dense_similarity_score(SimKind kind, const BipartiteGraph& g,
                              uint32_t x, uint32_t y) {
  auto profile = [&](uint32_t i) {
    std::vector<int> v(g.n_right(), 0);
    for (uint32_t j : g.left_neighbors(i)) v[j] = 1;
    return v;
  };
  const std::vector<int> px = profile(x);
  double acc = 0;
  for (uint32_t a : g.right_neighbors(y)) {
    acc += dense_pair_similarity(kind, px, profile(a));
  }
  return acc;
}

namespace {

double mw_u_of_subset(const std::vector<double>& pooled,
                      const std::vector<size_t>& subset) {
  // U of the subset sample = number of (subset, complement) pairs the
  // subset wins, ties counting half.
  std::vector<bool> in(pooled.size(), false);
  for (size_t i : subset) in[i] = true;
  double u = 0;
  for (size_t i = 0; i < pooled.size(); ++i) {
    if (!in[i]) continue;
    for (size_t j = 0; j < pooled.size(); ++j) {
      if (in[j]) continue;
      if (pooled[i] > pooled[j]) u += 1;
      else if (pooled[i] == pooled[j]) u += 0.5;
    }
  }
  return u;
}

}  // namespace

ExactMw exact_mann_whitney(const std::vector<double>& a,
                           const std::vector<double>& b) {
  std::vector<double> pooled(a);
  pooled.insert(pooled.end(), b.begin(), b.end());
  const size_t n = pooled.size(), n1 = a.size();

  std::vector<size_t> observed(n1);
  for (size_t i = 0; i < n1; ++i) observed[i] = i;
  const double u_obs = mw_u_of_subset(pooled, observed);
  const double mean = static_cast<double>(n1) * (n - n1) / 2.0;

  // Two-sided permutation p: share of assignments at least as extreme
  // (|U - mean| >= |U_obs - mean|).
  uint64_t extreme = 0, total = 0;
  std::vector<size_t> subset;
  auto recurse = [&](auto&& self, size_t next, size_t need) -> void {
    if (need == 0) {
      ++total;
      const double u = mw_u_of_subset(pooled, subset);
      if (std::abs(u - mean) >= std::abs(u_obs - mean) - 1e-12) ++extreme;
      return;
    }
    if (n - next < need) return;
    for (size_t i = next; i + need <= n; ++i) {
      subset.push_back(i);
      self(self, i + 1, need - 1);
      subset.pop_back();
    }
  };
  recurse(recurse, 0, n1);
  return {u_obs, static_cast<double>(extreme) / static_cast<double>(total)};
}

CycleCensus brute_cycle_census(const BipartiteGraph& g) {
  CycleCensus census;
  // 4-cycles: unordered left pairs x1<x2 and right pairs y1<y2 with all
  // four edges present.
  for (uint32_t x1 = 0; x1 < g.n_left(); ++x1) {
    for (uint32_t x2 = x1 + 1; x2 < g.n_left(); ++x2) {
      for (uint32_t y1 = 0; y1 < g.n_right(); ++y1) {
        for (uint32_t y2 = y1 + 1; y2 < g.n_right(); ++y2) {
          if (g.has_edge(x1, y1) && g.has_edge(x1, y2) &&
              g.has_edge(x2, y1) && g.has_edge(x2, y2)) {
            ++census.four_cycles;
          }
        }
      }
    }
  }
  // 3-paths: distinct nodes u-a-b-v with u,b right and a,v left (each
  // 4-node path found exactly once via its middle edge a-b).
  for (uint32_t a = 0; a < g.n_left(); ++a) {
    for (uint32_t b : g.left_neighbors(a)) {
      for (uint32_t u : g.left_neighbors(a)) {
        if (u == b) continue;
        for (uint32_t v : g.right_neighbors(b)) {
          if (v == a) continue;
          ++census.three_paths;
        }
      }
    }
  }
  return census;
}

double brute_latapy(const BipartiteGraph& g) {
  auto neighbors_of = [&](bool left, uint32_t u) {
    std::set<uint32_t> s;
    const auto span = left ? g.left_neighbors(u) : g.right_neighbors(u);
    s.insert(span.begin(), span.end());
    return s;
  };
  double total = 0;
  uint64_t counted = 0;
  for (bool left : {true, false}) {
    const uint32_t n_side = left ? g.n_left() : g.n_right();
    for (uint32_t u = 0; u < n_side; ++u) {
      const std::set<uint32_t> nu = neighbors_of(left, u);
      std::set<uint32_t> dist2;
      for (uint32_t b : nu) {
        const auto span = left ? g.right_neighbors(b) : g.left_neighbors(b);
        for (uint32_t w : span) {
          if (w != u) dist2.insert(w);
        }
      }
      if (dist2.empty()) continue;
      double acc = 0;
      for (uint32_t w : dist2) {
        const std::set<uint32_t> nw = neighbors_of(left, w);
        std::set<uint32_t> inter, uni;
        std::set_intersection(nu.begin(), nu.end(), nw.begin(), nw.end(),
                              std::inserter(inter, inter.begin()));
        std::set_union(nu.begin(), nu.end(), nw.begin(), nw.end(),
                       std::inserter(uni, uni.begin()));
        acc += static_cast<double>(inter.size()) / static_cast<double>(uni.size());
      }
      total += acc / static_cast<double>(dist2.size());
      ++counted;
    }
  }
  return counted ? total / static_cast<double>(counted) : 0.0;
}

std::vector<double> brute_betweenness(const BipartiteGraph& g) {
  const uint32_t n = g.n_left() + g.n_right();
  auto neighbors = [&](uint32_t v) {
    std::vector<uint32_t> out;
    if (v < g.n_left()) {
      for (uint32_t j : g.left_neighbors(v)) out.push_back(j + g.n_left());
    } else {
      for (uint32_t i : g.right_neighbors(v - g.n_left())) out.push_back(i);
    }
    return out;
  };
  // sigma[s][t]: shortest-path counts; dist[s][t]: BFS levels.
  std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0));
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (uint32_t s = 0; s < n; ++s) {
    dist[s][s] = 0;
    sigma[s][s] = 1;
    std::queue<uint32_t> q;
    q.push(s);
    while (!q.empty()) {
      const uint32_t v = q.front();
      q.pop();
      for (uint32_t w : neighbors(v)) {
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][v] + 1;
          q.push(w);
        }
        if (dist[s][w] == dist[s][v] + 1) sigma[s][w] += sigma[s][v];
      }
    }
  }
  std::vector<double> bc(n, 0.0);
  for (uint32_t v = 0; v < n; ++v) {
    for (uint32_t s = 0; s < n; ++s) {
      if (s == v) continue;
      for (uint32_t t = s + 1; t < n; ++t) {
        if (t == v || dist[s][t] < 0) continue;
        if (dist[s][v] < 0 || dist[v][t] < 0) continue;
        if (dist[s][v] + dist[v][t] != dist[s][t]) continue;
        bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
      }
    }
  }
  if (n >= 3) {
    const double norm = static_cast<double>(n - 1) * (n - 2) / 2.0;
    for (double& b : bc) b /= norm;
  }
  return bc;
}

BipartiteGraph random_bipartite(uint32_t n_left, uint32_t n_right, double p,
                                uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (uint32_t i = 0; i < n_left; ++i) {
    for (uint32_t j = 0; j < n_right; ++j) {
      if (rng.next_unit() < p) edges.push_back({i, j});
    }
  }
  return BipartiteGraph::from_edges(n_left, n_right, std::move(edges));
}

}  // namespace bilink::oracle
