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

// Removal/precision/AUPR evaluation protocol: remove a fraction of the
// edges, rank every non-observed pair of the remaining graph (which
// includes the removed edges), and measure how highly the removed edges
// rank.  Everything is a pure function of (graph, master seed, methods).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bilink/graph.hpp"
#include "bilink/method.hpp"
#include "bilink/stats.hpp"

namespace bilink {

struct RemovalSplit {
  BipartiteGraph observed;
  EdgeSet removed;
  uint64_t seed = 0;
};

/// Removes round(fraction*m) distinct edges drawn uniformly; no
/// connectivity constraint.  Requires >= 10 edges, fraction in (0,1), and
/// a non-zero removal count.
RemovalSplit sample_removal(const BipartiteGraph& g, double fraction,
                            uint64_t seed);

/// A scored candidate list in rank order.  `order[r]` is the candidate
/// index at rank r (best first); `positive` flags removed edges by
/// candidate index.
struct RankedCandidates {
  std::vector<uint32_t> order;
  std::vector<uint8_t> positive;
  uint64_t n_positive = 0;
};

/// Sorts candidates by descending score.  Ties are broken by a seeded
/// uniform shuffle within each tie group (per-candidate random keys), then
/// by candidate index, so the full ranking is a deterministic function of
/// (scores, seed).  Throws on score/flag length mismatch or NaN scores.
RankedCandidates rank_candidates(std::span<const double> scores,
                                 std::span<const uint8_t> positive,
                                 uint64_t seed);

/// Fraction of the top-L candidates that are positives.  1 <= L <= size.
double precision_at_l(const RankedCandidates& ranked, uint64_t l);

enum class AuprIntegrator : uint8_t {
  Trapezoid,  // default; curve anchored at recall 0 with the precision of
              // the first retrieved positive
  Step,       // rectangle rule (average precision)
};

/// Area under the precision-recall curve over the whole ranking.  Requires
/// at least one positive.
double aupr(const RankedCandidates& ranked,
            AuprIntegrator integrator = AuprIntegrator::Trapezoid);

struct MethodSummary {
  Method method;
  std::vector<double> precision;  // one entry per repetition
  std::vector<double> aupr;
  MeanStderr precision_stats;
  MeanStderr aupr_stats;
};

struct PairwiseComparison {
  Method lhs;
  Method rhs;
  double precision_u = 0;
  double precision_p = 1;
  double precision_p_adj = 1;
  double aupr_u = 0;
  double aupr_p = 1;
  double aupr_p_adj = 1;
};

struct ExperimentResult {
  double fraction = 0;
  uint32_t repetitions = 0;
  uint64_t master_seed = 0;
  uint64_t removed_per_rep = 0;
  uint64_t candidates_per_rep = 0;
  std::vector<MethodSummary> methods;
  std::vector<PairwiseComparison> comparisons;  // all unordered method pairs
};

/// Runs the full protocol.  Per-repetition seeds are derive_seed(master,
/// rep); every method scores the same split's candidate list; tie-break
/// seeds are derive_seed(rep_seed, fnv1a64("tie:" + method_name)) so each
/// method's numbers are independent of the method list.  `tag` is
/// prepended to error contexts.
ExperimentResult run_experiment(const BipartiteGraph& g,
                                std::span<const Method> methods,
                                double fraction, uint32_t repetitions,
                                uint64_t master_seed, int threads = 0,
                                const std::string& tag = "");

struct ClassAggregate {
  MethodClass klass;
  uint64_t samples = 0;  // (method, experiment, repetition) triples pooled
  MeanStderr precision_stats;
  MeanStderr aupr_stats;
};

/// Pools per-repetition values across experiments (e.g. one per network)
/// for one method class; throws when the class has no samples.
ClassAggregate class_aggregate(std::span<const ExperimentResult> results,
                               MethodClass klass);

/// Aggregates every class that has at least one sample.
std::vector<ClassAggregate> aggregate_classes(
    std::span<const ExperimentResult> results);

}  // namespace bilink
