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

// Local link-prediction indices computed directly in the bipartite domain.
//
// For seeds x (left) and y (right), put B* = N(x)\{y} and A* = N(y)\{x}.
// A common neighbour is any node of B* with an edge into A* or any node of
// A* with an edge into B* (i.e. any interior node of a quadrangle through
// x and y); the local community links are the A*-B* edges themselves, and
// gamma(s) is the number of those edges incident to CN s.  The seed
// exclusion makes the same definition work for adjacent seeds, where only
// proper 4-cycles through the existing edge count.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bilink/graph.hpp"

namespace bilink {

enum class IndexKind : uint8_t { CN, JC, AA, RA, PA, LCL, CAR, CJC, CAA, CRA, CPA };

inline constexpr IndexKind kAllIndexKinds[] = {
    IndexKind::CN,  IndexKind::JC,  IndexKind::AA,  IndexKind::RA,
    IndexKind::PA,  IndexKind::LCL, IndexKind::CAR, IndexKind::CJC,
    IndexKind::CAA, IndexKind::CRA, IndexKind::CPA};

std::string_view index_name(IndexKind kind);
std::optional<IndexKind> parse_index(std::string_view name);

/// Common neighbours, local community links, and per-CN community degrees
/// of a seed pair.  CN lists are sorted; gamma entries are aligned.
struct LocalCommunity {
  uint32_t seed_left = 0;
  uint32_t seed_right = 0;
  std::vector<uint32_t> cn_left;
  std::vector<uint32_t> cn_right;
  std::vector<uint32_t> gamma_left;
  std::vector<uint32_t> gamma_right;
  uint64_t lcl = 0;

  uint32_t cn_count() const {
    return static_cast<uint32_t>(cn_left.size() + cn_right.size());
  }
};

/// Full local community of (x, y); valid for adjacent and non-adjacent
/// seeds.  Straightforward merge-intersection build, independent of the
/// stamped scan used by the batch scorers.
LocalCommunity local_community(const BipartiteGraph& g, uint32_t x, uint32_t y);

/// One index value for one pair.
double score(IndexKind kind, const BipartiteGraph& g, uint32_t x, uint32_t y);

/// One score per pair, aligned with `pairs`; bitwise identical regardless
/// of thread count.
std::vector<double> score_all(IndexKind kind, const BipartiteGraph& g,
                              std::span<const Edge> pairs, int threads = 0);

}  // namespace bilink
