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
#include "bilink/analysis.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "bilink/detail/pair_scan.hpp"
#include "bilink/stats.hpp"

namespace bilink {

std::vector<LcpPoint> lcp_decomposition(const BipartiteGraph& g, int threads) {
  const std::vector<Edge> edges = g.edges();
  std::vector<LcpPoint> points(edges.size());
  detail::scan_pairs<detail::kScanLocal>(
      g, edges,
      [&](const detail::PairAccum& f, size_t i) {
        points[i] = {edges[i], f.cn_left + f.cn_right, f.lcl};
      },
      threads);
  return points;
}

LcpCorrelation lcp_correlation(const std::vector<LcpPoint>& points) {
  LcpCorrelation out{std::numeric_limits<double>::quiet_NaN(),
                     std::numeric_limits<double>::quiet_NaN(), points.size()};
  if (points.size() < 2) return out;
  std::vector<double> cn(points.size()), lcl(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    cn[i] = points[i].cn;
    lcl[i] = static_cast<double>(points[i].lcl);
  }
  out.pearson = pearson_corr(cn, lcl);
  out.spearman = spearman_corr(cn, lcl);
  return out;
}

namespace {

int resolve_threads(int threads) {
  return threads > 0 ? threads : omp_get_max_threads();
}

// Runs `fn(u, cnt, touched)` for every node u of one side, where cnt[w] =
// |N(u) n N(w)| for each same-partition node w at distance 2 (touched
// lists them in discovery order).
template <typename Nbr, typename OppNbr, typename Fn>
void for_each_distance2(uint32_t n_side, Nbr nbr, OppNbr opp_nbr, int threads,
                        Fn fn) {
#pragma omp parallel num_threads(resolve_threads(threads))
  {
    std::vector<uint32_t> cnt(n_side, 0);
    std::vector<uint32_t> touched;
    touched.reserve(256);
#pragma omp for schedule(dynamic, 64)
    for (int64_t u = 0; u < static_cast<int64_t>(n_side); ++u) {
      for (uint32_t b : nbr(static_cast<uint32_t>(u))) {
        for (uint32_t w : opp_nbr(b)) {
          if (w == static_cast<uint32_t>(u)) continue;
          if (cnt[w]++ == 0) touched.push_back(w);
        }
      }
      fn(static_cast<uint32_t>(u), cnt, touched);
      for (uint32_t w : touched) cnt[w] = 0;
      touched.clear();
    }
  }
}

}  // namespace

double latapy_clustering(const BipartiteGraph& g, int threads) {
  // Per-node coefficients land in slots, so the final average is
  // independent of scheduling.
  std::vector<double> coeff(static_cast<size_t>(g.n_left()) + g.n_right(),
                            std::numeric_limits<double>::quiet_NaN());

  auto run = [&](bool left_side) {
    const uint32_t n_side = left_side ? g.n_left() : g.n_right();
    auto nbr = [&](uint32_t u) {
      return left_side ? g.left_neighbors(u) : g.right_neighbors(u);
    };
    auto opp_nbr = [&](uint32_t b) {
      return left_side ? g.right_neighbors(b) : g.left_neighbors(b);
    };
    auto deg = [&](uint32_t u) {
      return left_side ? g.left_degree(u) : g.right_degree(u);
    };
    const size_t base = left_side ? 0 : g.n_left();
    for_each_distance2(
        n_side, nbr, opp_nbr, threads,
        [&](uint32_t u, const std::vector<uint32_t>& cnt,
            const std::vector<uint32_t>& touched) {
          if (touched.empty()) return;
          double acc = 0;
          for (uint32_t w : touched) {
            const double inter = cnt[w];
            const double uni = static_cast<double>(deg(u)) + deg(w) - inter;
            acc += inter / uni;
          }
          coeff[base + u] = acc / static_cast<double>(touched.size());
        });
  };
  run(true);
  run(false);

  double total = 0;
  uint64_t counted = 0;
  for (double c : coeff) {
    if (!std::isnan(c)) {
      total += c;
      ++counted;
    }
  }
  return counted ? total / static_cast<double>(counted) : 0.0;
}

double robins_alexander_clustering(const BipartiteGraph& g, int threads) {
  // C4 via left-pair shared neighbours: each 4-cycle is one unordered left
  // pair with two shared right nodes.
  std::vector<uint64_t> cycles(g.n_left(), 0);
  auto nbr = [&](uint32_t u) { return g.left_neighbors(u); };
  auto opp_nbr = [&](uint32_t b) { return g.right_neighbors(b); };
  for_each_distance2(g.n_left(), nbr, opp_nbr, threads,
                     [&](uint32_t u, const std::vector<uint32_t>& cnt,
                         const std::vector<uint32_t>& touched) {
                       uint64_t acc = 0;
                       for (uint32_t w : touched) {
                         if (w <= u) continue;
                         const uint64_t c = cnt[w];
                         acc += c * (c - 1) / 2;
                       }
                       cycles[u] = acc;
                     });
  uint64_t c4 = 0;
  for (uint64_t c : cycles) c4 += c;

  uint64_t l3 = 0;
  for (uint32_t x = 0; x < g.n_left(); ++x) {
    const uint64_t dx = g.left_degree(x);
    for (uint32_t y : g.left_neighbors(x)) {
      l3 += (dx - 1) * (g.right_degree(y) - 1);
    }
  }
  return l3 ? 4.0 * static_cast<double>(c4) / static_cast<double>(l3) : 0.0;
}

double avg_betweenness(const BipartiteGraph& g, int threads) {
  const uint64_t n64 = static_cast<uint64_t>(g.n_left()) + g.n_right();
  if (n64 < 3) return 0.0;
  const uint32_t n = static_cast<uint32_t>(n64);
  auto neighbors = [&](uint32_t v) {
    return v < g.n_left() ? g.left_neighbors(v) : g.right_neighbors(v - g.n_left());
  };
  auto to_global = [&](uint32_t w, bool from_left) {
    return from_left ? w + g.n_left() : w;
  };

  // Fixed source blocks; each block accumulates its sources sequentially
  // and blocks are reduced in index order, so the result does not depend
  // on the thread count.
  const uint32_t n_blocks = std::min<uint32_t>(64, n);
  std::vector<std::vector<double>> partial(n_blocks,
                                           std::vector<double>(n, 0.0));
#pragma omp parallel num_threads(resolve_threads(threads))
  {
    std::vector<int32_t> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<uint32_t> order;
    order.reserve(n);
#pragma omp for schedule(dynamic)
    for (int64_t blk = 0; blk < static_cast<int64_t>(n_blocks); ++blk) {
      auto& acc = partial[blk];
      const uint32_t lo = static_cast<uint32_t>(blk * n64 / n_blocks);
      const uint32_t hi = static_cast<uint32_t>((blk + 1) * n64 / n_blocks);
      for (uint32_t s = lo; s < hi; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        order.clear();
        dist[s] = 0;
        sigma[s] = 1;
        order.push_back(s);
        for (size_t head = 0; head < order.size(); ++head) {
          const uint32_t v = order[head];
          const bool v_left = v < g.n_left();
          for (uint32_t w_raw : neighbors(v)) {
            const uint32_t w = to_global(w_raw, v_left);
            if (dist[w] < 0) {
              dist[w] = dist[v] + 1;
              order.push_back(w);
            }
            if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
          }
        }
        for (size_t i = order.size(); i-- > 1;) {
          const uint32_t w = order[i];
          const bool w_left = w < g.n_left();
          for (uint32_t v_raw : neighbors(w)) {
            const uint32_t v = to_global(v_raw, w_left);
            if (dist[v] == dist[w] - 1) {
              delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
          }
          acc[w] += delta[w];
        }
      }
    }
  }

  // Undirected accumulation counts each (s,t) pair twice; halve, then
  // apply the Freeman normalization (n-1)(n-2)/2.
  const double norm = static_cast<double>(n - 1) * (n - 2) / 2.0;
  double total = 0;
  for (uint32_t v = 0; v < n; ++v) {
    double raw = 0;
    for (uint32_t blk = 0; blk < n_blocks; ++blk) raw += partial[blk][v];
    total += raw / 2.0 / norm;
  }
  return total / static_cast<double>(n);
}

TopoStats topo_stats(const BipartiteGraph& g, int threads) {
  TopoStats s;
  const double m = static_cast<double>(g.edge_count());
  const double n_total = static_cast<double>(g.n_left()) + g.n_right();
  s.left_avg_degree = g.n_left() ? m / g.n_left() : 0.0;
  s.right_avg_degree = g.n_right() ? m / g.n_right() : 0.0;
  s.avg_degree = n_total > 0 ? m / n_total : 0.0;
  s.avg_degree_full = n_total > 0 ? 2.0 * m / n_total : 0.0;
  s.latapy_clustering = latapy_clustering(g, threads);
  s.robins_alexander_clustering = robins_alexander_clustering(g, threads);
  s.avg_betweenness = avg_betweenness(g, threads);
  const LcpCorrelation corr = lcp_correlation(lcp_decomposition(g, threads));
  s.lcp_pearson = corr.pearson;
  s.lcp_spearman = corr.spearman;
  return s;
}

}  // namespace bilink
