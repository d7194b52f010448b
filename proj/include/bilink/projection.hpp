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

// One-mode-projection baselines: binary incidence-vector similarities
// (Jaccard, Cosine, Euclidean, Pearson) aggregated over the existing
// neighbours of the target node, and two-step resource spreading (NBI,
// a.k.a. ProbS).

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bilink/graph.hpp"
#include "bilink/method.hpp"

namespace bilink {

enum class SimilarityKind : uint8_t { Jaccard, Cosine, Euclidean, Pearson };

/// A node's binary incidence row: the sorted opposite-partition indices it
/// links to.
struct ProfileVector {
  NodeRef owner;
  std::span<const uint32_t> support;
};

/// Left-partition profile of node i (its row over the right partition).
ProfileVector left_profile(const BipartiteGraph& g, uint32_t i);

/// Similarity of two binary vectors over `dim` coordinates.
///   Jaccard   |u∩v| / |u∪v|                (0 when both empty)
///   Cosine    |u∩v| / sqrt(|u||v|)         (0 when either empty)
///   Euclidean 1 / (1 + sqrt(|u|+|v|-2|u∩v|))
///   Pearson   closed form on binary vectors (0 when either is constant)
/// Throws InvalidArgument when a support exceeds dim (dimension mismatch).
double pair_similarity(SimilarityKind kind, const ProfileVector& u,
                       const ProfileVector& v, uint32_t dim);

/// Sum of pair_similarity(profile(x), profile(x')) over x' in N(y).
double similarity_score(SimilarityKind kind, const BipartiteGraph& g,
                        uint32_t x, uint32_t y);

/// Two-step resource spread from N(x), read off at y: each right node
/// b in N(x) starts with unit resource, splits it equally over N(b), and
/// each left node splits its intake equally over its neighbours.
double nbi_score(const BipartiteGraph& g, uint32_t x, uint32_t y);

/// Batch scorer for the projection methods (nbi/jac/cos/euc/pea); mirrors
/// score_all's determinism contract.
std::vector<double> score_all_baseline(Method method, const BipartiteGraph& g,
                                       std::span<const Edge> pairs,
                                       int threads = 0);

}  // namespace bilink
