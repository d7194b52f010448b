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

// Topological statistics and the per-edge (CN, LCL) decomposition.

#include <cstdint>
#include <vector>

#include "bilink/graph.hpp"

namespace bilink {

/// One existing edge plotted by its adjacent-seed CN and LCL counts.
struct LcpPoint {
  Edge edge;
  uint32_t cn = 0;
  uint64_t lcl = 0;
};

/// (CN, LCL) for every edge, in canonical edge order; adjacent-seed rule,
/// so only proper quadrangles through the edge count.
std::vector<LcpPoint> lcp_decomposition(const BipartiteGraph& g,
                                        int threads = 0);

struct LcpCorrelation {
  double pearson;   // NaN when either coordinate is constant (e.g. no
  double spearman;  // 4-cycles at all)
  uint64_t points;
};

LcpCorrelation lcp_correlation(const std::vector<LcpPoint>& points);

/// Mean neighbourhood-overlap clustering: cc(u,v) = |N(u) n N(v)| /
/// |N(u) u N(v)| over same-partition nodes at distance 2, averaged per
/// node and then over the nodes that have at least one such neighbour.
double latapy_clustering(const BipartiteGraph& g, int threads = 0);

/// 4 * (number of 4-cycles) / (number of 3-paths); 0 when there are no
/// 3-paths.
double robins_alexander_clustering(const BipartiteGraph& g, int threads = 0);

/// Mean Freeman-normalized betweenness over all nodes of the combined
/// (left + right) unweighted graph; Brandes accumulation per source.
double avg_betweenness(const BipartiteGraph& g, int threads = 0);

struct TopoStats {
  double left_avg_degree = 0;   // m / n_left
  double right_avg_degree = 0;  // m / n_right
  double avg_degree = 0;        // m / (n_left + n_right)
  double avg_degree_full = 0;   // 2m / (n_left + n_right), the endpoint-sum
                                // convention, recorded alongside
  double latapy_clustering = 0;
  double robins_alexander_clustering = 0;
  double avg_betweenness = 0;
  double lcp_pearson = 0;   // NaN when undefined
  double lcp_spearman = 0;  // NaN when undefined
};

TopoStats topo_stats(const BipartiteGraph& g, int threads = 0);

}  // namespace bilink
