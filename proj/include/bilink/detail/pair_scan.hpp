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
#pragma once

// Shared per-pair scan.  One stamp of N(x) plus one walk over the two-hop
// neighbourhood of y yields, in a single pass, every quantity the local
// indices, NBI and the profile similarities need.  Accumulation order is a
// pure function of the adjacency lists, so results are bitwise identical
// no matter how pairs are scheduled across threads.

#include <omp.h>

#include <cassert>
#include <cmath>
#include <cstdint>
#include <vector>

#include "bilink/graph.hpp"

namespace bilink::detail {

// Which accumulator families scan() should fill.
inline constexpr unsigned kScanLocal = 1u;  // CN/LCL/gamma machinery
inline constexpr unsigned kScanNbi = 2u;    // two-step resource spread
inline constexpr unsigned kScanSims = 4u;   // profile-vector similarities

struct PairAccum {
  uint32_t deg_x = 0;
  uint32_t deg_y = 0;
  uint32_t cn_left = 0;   // CNs in the left partition (neighbours of y)
  uint32_t cn_right = 0;  // CNs in the right partition (neighbours of x)
  uint64_t lcl = 0;
  double ra = 0;   // sum over CNs of 1/deg(s)
  double aa = 0;   // sum over CNs of 1/log2(deg(s))
  double cra = 0;  // sum over CNs of gamma(s)/deg(s)
  double caa = 0;  // sum over CNs of gamma(s)/log2(deg(s))
  double nbi = 0;
  double jac = 0;
  double cos = 0;
  double euc = 0;
  double pea = 0;
};

/// Pearson correlation of two binary incidence vectors with support sizes
/// du, dv, intersection i, over dim coordinates; 0 for constant vectors.
inline double binary_pearson(double du, double dv, double i, double dim) {
  if (du <= 0 || dv <= 0 || du >= dim || dv >= dim) return 0.0;
  return (dim * i - du * dv) / std::sqrt(du * (dim - du) * dv * (dim - dv));
}

class PairScanner {
 public:
  explicit PairScanner(const BipartiteGraph& g)
      : g_(g),
        mark_(g.n_right(), 0),
        gamma_(g.n_right(), 0),
        inv_deg_right_(g.n_right()) {
    touched_.reserve(64);
    for (uint32_t j = 0; j < g.n_right(); ++j) {
      inv_deg_right_[j] = g.right_degree(j) ? 1.0 / g.right_degree(j) : 0.0;
    }
  }

  const BipartiteGraph& graph() const { return g_; }

  /// Stamps N(x); subsequent scan() calls pair this x with any y.
  void begin_left(uint32_t x) {
    x_ = x;
    if (++epoch_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      epoch_ = 1;
    }
    for (uint32_t b : g_.left_neighbors(x)) mark_[b] = epoch_;
  }

  /// Scans the pair (current x, y).  The similarity and NBI parts assume a
  /// non-adjacent pair (their operations are defined on candidates); the
  /// local part handles adjacent seeds via the B*/A* seed exclusion, which
  /// restricts counting to proper quadrangles.
  template <unsigned Parts>
  PairAccum scan(uint32_t y) {
    PairAccum o;
    const auto nx = g_.left_neighbors(x_);
    const auto ny = g_.right_neighbors(y);
    o.deg_x = static_cast<uint32_t>(nx.size());
    o.deg_y = static_cast<uint32_t>(ny.size());
    const bool adjacent = mark_valid(y);

    for (uint32_t a : ny) {
      if (adjacent && a == x_) continue;  // A* = N(y) \ {x}
      uint32_t hits = 0;
      double spread = 0;
      for (uint32_t b : g_.left_neighbors(a)) {
        if (!mark_valid(b)) continue;
        if (adjacent && b == y) continue;  // B* = N(x) \ {y}
        ++hits;
        if constexpr ((Parts & kScanNbi) != 0) spread += inv_deg_right_[b];
        if constexpr ((Parts & kScanLocal) != 0) {
          if (gamma_[b]++ == 0) touched_.push_back(b);
        }
      }
      const double da = static_cast<double>(g_.left_degree(a));
      if constexpr ((Parts & kScanLocal) != 0) {
        if (hits > 0) {
          ++o.cn_left;
          o.lcl += hits;
          const double inv = 1.0 / da;
          const double invlog = 1.0 / std::log2(da);
          o.ra += inv;
          o.aa += invlog;
          o.cra += hits * inv;
          o.caa += hits * invlog;
        }
      }
      if constexpr ((Parts & kScanNbi) != 0) o.nbi += spread / da;
      if constexpr ((Parts & kScanSims) != 0) {
        const double du = o.deg_x, dv = da, i = hits;
        const double uni = du + dv - i;
        o.jac += uni > 0 ? i / uni : 0.0;
        o.cos += (du > 0 && dv > 0) ? i / std::sqrt(du * dv) : 0.0;
        o.euc += 1.0 / (1.0 + std::sqrt(du + dv - 2 * i));
        o.pea += binary_pearson(du, dv, i, g_.n_right());
      }
    }

    if constexpr ((Parts & kScanLocal) != 0) {
      o.cn_right = static_cast<uint32_t>(touched_.size());
      for (uint32_t b : touched_) {
        const uint32_t gb = gamma_[b];
        gamma_[b] = 0;
        const double db = static_cast<double>(g_.right_degree(b));
        assert(db >= 2 && "a CN always carries its seed edge plus an LCL");
        o.ra += 1.0 / db;
        o.aa += 1.0 / std::log2(db);
        o.cra += gb / db;
        o.caa += gb / std::log2(db);
      }
      touched_.clear();
    }
    return o;
  }

 private:
  bool mark_valid(uint32_t b) const { return mark_[b] == epoch_; }

  const BipartiteGraph& g_;
  uint32_t x_ = 0;
  uint32_t epoch_ = 0;
  std::vector<uint32_t> mark_;
  std::vector<uint32_t> gamma_;
  std::vector<uint32_t> touched_;
  std::vector<double> inv_deg_right_;
};

/// Splits a pair list into runs sharing the same left endpoint.
inline std::vector<std::pair<size_t, size_t>> left_groups(
    std::span<const Edge> pairs) {
  std::vector<std::pair<size_t, size_t>> groups;
  size_t start = 0;
  for (size_t i = 1; i <= pairs.size(); ++i) {
    if (i == pairs.size() || pairs[i].left != pairs[start].left) {
      groups.emplace_back(start, i);
      start = i;
    }
  }
  return groups;
}

/// Runs `fn(accum, pair_index)` for every pair, stamping each left group
/// once.  Pairs sharing a left node should be contiguous (true for
/// candidate_pairs order and canonical edge order).  Parallel over groups;
/// every output slot is written exactly once, so results do not depend on
/// the thread count or schedule.
template <unsigned Parts, typename Fn>
void scan_pairs(const BipartiteGraph& g, std::span<const Edge> pairs, Fn&& fn,
                int threads) {
  const auto groups = left_groups(pairs);
  const auto n_groups = static_cast<int64_t>(groups.size());
#pragma omp parallel num_threads(threads > 0 ? threads : omp_get_max_threads())
  {
    PairScanner scanner(g);
#pragma omp for schedule(dynamic, 16)
    for (int64_t gi = 0; gi < n_groups; ++gi) {
      const auto [begin, end] = groups[gi];
      scanner.begin_left(pairs[begin].left);
      for (size_t i = begin; i < end; ++i) {
        fn(scanner.template scan<Parts>(pairs[i].right), i);
      }
    }
  }
}

}  // namespace bilink::detail
