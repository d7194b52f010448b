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
#include "bilink/local.hpp"

#include <algorithm>
#include <cassert>

#include "bilink/detail/index_value.hpp"
#include "bilink/detail/pair_scan.hpp"

namespace bilink {

std::string_view index_name(IndexKind kind) {
  switch (kind) {
    case IndexKind::CN: return "cn";
    case IndexKind::JC: return "jc";
    case IndexKind::AA: return "aa";
    case IndexKind::RA: return "ra";
    case IndexKind::PA: return "pa";
    case IndexKind::LCL: return "lcl";
    case IndexKind::CAR: return "car";
    case IndexKind::CJC: return "cjc";
    case IndexKind::CAA: return "caa";
    case IndexKind::CRA: return "cra";
    case IndexKind::CPA: return "cpa";
  }
  return "?";
}

std::optional<IndexKind> parse_index(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (IndexKind k : kAllIndexKinds) {
    if (lower == index_name(k)) return k;
  }
  return std::nullopt;
}

namespace {

void check_pair(const BipartiteGraph& g, uint32_t x, uint32_t y) {
  if (x >= g.n_left() || y >= g.n_right()) {
    throw InvalidArgument("seed pair (" + std::to_string(x) + "," +
                          std::to_string(y) + ") out of range for " +
                          std::to_string(g.n_left()) + "x" +
                          std::to_string(g.n_right()) + " graph");
  }
}

// |sorted ∩ sorted| with one value excluded from the second list.
uint32_t merge_count(std::span<const uint32_t> a, std::span<const uint32_t> b,
                     uint32_t skip_in_b) {
  uint32_t n = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      if (b[j] != skip_in_b) ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

}  // namespace

LocalCommunity local_community(const BipartiteGraph& g, uint32_t x, uint32_t y) {
  check_pair(g, x, y);
  LocalCommunity lc;
  lc.seed_left = x;
  lc.seed_right = y;

  const auto nx = g.left_neighbors(x);   // candidates for B* (right side)
  const auto ny = g.right_neighbors(y);  // candidates for A* (left side)

  uint64_t lcl_from_left = 0;
  for (uint32_t a : ny) {
    if (a == x) continue;
    // gamma(a) = |N(a) ∩ B*|, with y excluded from N(a) to honour B* = N(x)\{y}
    const uint32_t gamma = merge_count(nx, g.left_neighbors(a), y);
    if (gamma > 0) {
      lc.cn_left.push_back(a);
      lc.gamma_left.push_back(gamma);
      lcl_from_left += gamma;
    }
  }
  uint64_t lcl_from_right = 0;
  for (uint32_t b : nx) {
    if (b == y) continue;
    const uint32_t gamma = merge_count(ny, g.right_neighbors(b), x);
    if (gamma > 0) {
      lc.cn_right.push_back(b);
      lc.gamma_right.push_back(gamma);
      lcl_from_right += gamma;
      assert(g.right_degree(b) >= 2);
    }
  }
  assert(lcl_from_left == lcl_from_right);
  lc.lcl = lcl_from_left;
  return lc;
}

double score(IndexKind kind, const BipartiteGraph& g, uint32_t x, uint32_t y) {
  check_pair(g, x, y);
  detail::PairScanner scanner(g);
  scanner.begin_left(x);
  const auto f = scanner.scan<detail::kScanLocal>(y);
  return detail::index_value(kind, f);
}

std::vector<double> score_all(IndexKind kind, const BipartiteGraph& g,
                              std::span<const Edge> pairs, int threads) {
  for (const Edge& e : pairs) check_pair(g, e.left, e.right);
  std::vector<double> out(pairs.size());
  detail::scan_pairs<detail::kScanLocal>(
      g, pairs,
      [&](const detail::PairAccum& f, size_t i) {
        out[i] = detail::index_value(kind, f);
      },
      threads);
  return out;
}

}  // namespace bilink
