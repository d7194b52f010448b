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

// Unified registry of every prediction method the toolkit exposes: the
// eleven bipartite local indices, the five projection baselines, and the
// uniform-random null baseline.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bilink/graph.hpp"
#include "bilink/local.hpp"

namespace bilink {

enum class Method : uint8_t {
  Cn, Jc, Aa, Ra, Pa, Lcl, Car, Cjc, Caa, Cra, Cpa,  // bipartite local
  Nbi, Jac, Cos, Euc, Pea,                            // one-mode projection
  Random,                                             // null baseline
};

enum class MethodClass : uint8_t { LcpBased, Classical, Projection, Random };

inline constexpr Method kAllMethods[] = {
    Method::Cn,  Method::Jc,  Method::Aa,  Method::Ra,  Method::Pa,
    Method::Lcl, Method::Car, Method::Cjc, Method::Caa, Method::Cra,
    Method::Cpa, Method::Nbi, Method::Jac, Method::Cos, Method::Euc,
    Method::Pea, Method::Random};

std::string_view method_name(Method m);
std::string_view method_class_name(MethodClass c);
std::optional<Method> parse_method(std::string_view name);
MethodClass method_class(Method m);

/// All registered method names, comma-separated (for error messages).
std::string known_method_names();

/// The local-index identity of a method, when it has one.
std::optional<IndexKind> method_index_kind(Method m);

/// Scores every requested method over the same pair list in one pass over
/// the graph.  Result is indexed [method position][pair position] and is
/// bitwise deterministic regardless of thread count.  `random_seed` feeds
/// the Random baseline only (score_i = unit_double(mix64(seed ^ golden*(i+1)))).
std::vector<std::vector<double>> score_methods(const BipartiteGraph& g,
                                               std::span<const Edge> pairs,
                                               std::span<const Method> methods,
                                               uint64_t random_seed,
                                               int threads = 0);

}  // namespace bilink
