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
#include "bilink/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bilink/rng.hpp"

namespace bilink {

RemovalSplit sample_removal(const BipartiteGraph& g, double fraction,
                            uint64_t seed) {
  if (g.edge_count() < 10) {
    throw InvalidArgument("sample_removal: graph has fewer than 10 edges");
  }
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw InvalidArgument("sample_removal: fraction must lie in (0,1)");
  }
  const uint64_t m = g.edge_count();
  const uint64_t l = static_cast<uint64_t>(std::llround(fraction * static_cast<double>(m)));
  if (l == 0) throw InvalidArgument("sample_removal: removal count rounds to 0");
  if (l >= m) throw InvalidArgument("sample_removal: removal count reaches edge count");

  // Partial Fisher-Yates over edge positions.
  std::vector<Edge> all = g.edges();
  SplitMix64 rng(seed);
  const size_t n = all.size();
  for (uint64_t i = 0; i < l; ++i) {
    const size_t j = i + static_cast<size_t>(rng.next_below(n - i));
    std::swap(all[i], all[j]);
  }
  std::vector<Edge> removed(all.begin(), all.begin() + l);

  RemovalSplit split;
  split.removed = EdgeSet(std::move(removed));
  split.observed = remove_edges(g, split.removed);
  split.seed = seed;
  return split;
}

RankedCandidates rank_candidates(std::span<const double> scores,
                                 std::span<const uint8_t> positive,
                                 uint64_t seed) {
  if (scores.size() != positive.size()) {
    throw InvalidArgument("rank_candidates: score/flag count mismatch");
  }
  for (double s : scores) {
    if (std::isnan(s)) throw InvalidArgument("rank_candidates: NaN score");
  }
  const size_t n = scores.size();
  std::vector<uint64_t> key(n);
  for (size_t i = 0; i < n; ++i) key[i] = mix64(seed ^ (kGolden * (i + 1)));

  RankedCandidates out;
  out.order.resize(n);
  std::iota(out.order.begin(), out.order.end(), uint32_t{0});
  std::sort(out.order.begin(), out.order.end(), [&](uint32_t i, uint32_t j) {
    if (scores[i] != scores[j]) return scores[i] > scores[j];
    if (key[i] != key[j]) return key[i] < key[j];
    return i < j;
  });
  out.positive.assign(positive.begin(), positive.end());
  out.n_positive = static_cast<uint64_t>(
      std::count(positive.begin(), positive.end(), uint8_t{1}));
  return out;
}

double precision_at_l(const RankedCandidates& ranked, uint64_t l) {
  if (l == 0) throw InvalidArgument("precision_at_l: L must be positive");
  if (l > ranked.order.size()) {
    throw InvalidArgument("precision_at_l: L exceeds candidate count");
  }
  uint64_t hits = 0;
  for (uint64_t r = 0; r < l; ++r) hits += ranked.positive[ranked.order[r]];
  return static_cast<double>(hits) / static_cast<double>(l);
}

double aupr(const RankedCandidates& ranked, AuprIntegrator integrator) {
  const uint64_t total = ranked.n_positive;
  if (total == 0) throw InvalidArgument("aupr: ranking contains no positives");
  uint64_t tp = 0;
  double area = 0;
  double prev_recall = 0;
  double prev_precision = -1;  // anchor pending until the first positive
  for (size_t r = 0; r < ranked.order.size(); ++r) {
    if (!ranked.positive[ranked.order[r]]) continue;
    ++tp;
    const double recall = static_cast<double>(tp) / static_cast<double>(total);
    const double precision =
        static_cast<double>(tp) / static_cast<double>(r + 1);
    if (integrator == AuprIntegrator::Step) {
      area += (recall - prev_recall) * precision;
    } else {
      if (prev_precision < 0) prev_precision = precision;
      area += (recall - prev_recall) * (precision + prev_precision) / 2.0;
    }
    prev_recall = recall;
    prev_precision = precision;
    if (tp == total) break;
  }
  return area;
}

ExperimentResult run_experiment(const BipartiteGraph& g,
                                std::span<const Method> methods,
                                double fraction, uint32_t repetitions,
                                uint64_t master_seed, int threads,
                                const std::string& tag) {
  if (methods.empty()) throw InvalidArgument("run_experiment: no methods");
  if (repetitions == 0) throw InvalidArgument("run_experiment: zero repetitions");

  ExperimentResult result;
  result.fraction = fraction;
  result.repetitions = repetitions;
  result.master_seed = master_seed;
  result.methods.resize(methods.size());
  for (size_t mi = 0; mi < methods.size(); ++mi) {
    result.methods[mi].method = methods[mi];
    result.methods[mi].precision.reserve(repetitions);
    result.methods[mi].aupr.reserve(repetitions);
  }

  for (uint32_t rep = 0; rep < repetitions; ++rep) {
    const uint64_t rep_seed = derive_seed(master_seed, rep);
    const RemovalSplit split = sample_removal(g, fraction, rep_seed);
    const std::vector<Edge> pairs = candidate_pairs(split.observed);
    std::vector<uint8_t> flags(pairs.size(), 0);
    for (size_t i = 0; i < pairs.size(); ++i) {
      flags[i] = split.removed.contains(pairs[i]) ? 1 : 0;
    }
    const uint64_t l = split.removed.size();
    result.removed_per_rep = l;
    result.candidates_per_rep = pairs.size();

    std::vector<std::vector<double>> scores;
    try {
      scores = score_methods(split.observed, pairs, methods,
                             derive_seed(rep_seed, fnv1a64("random")), threads);
    } catch (const Error& e) {
      throw Error(tag + " repetition " + std::to_string(rep) + ": " + e.what());
    }

    for (size_t mi = 0; mi < methods.size(); ++mi) {
      const uint64_t tie_seed = derive_seed(
          rep_seed, fnv1a64("tie:" + std::string(method_name(methods[mi]))));
      try {
        const RankedCandidates ranked =
            rank_candidates(scores[mi], flags, tie_seed);
        result.methods[mi].precision.push_back(precision_at_l(ranked, l));
        result.methods[mi].aupr.push_back(aupr(ranked));
      } catch (const Error& e) {
        throw Error(tag + " repetition " + std::to_string(rep) + ", method " +
                    std::string(method_name(methods[mi])) + ": " + e.what());
      }
    }
  }

  for (auto& ms : result.methods) {
    ms.precision_stats = mean_stderr(ms.precision);
    ms.aupr_stats = mean_stderr(ms.aupr);
  }

  // Pairwise Mann-Whitney with one BH family per metric.
  std::vector<double> prec_p, aupr_p;
  for (size_t i = 0; i < methods.size(); ++i) {
    for (size_t j = i + 1; j < methods.size(); ++j) {
      PairwiseComparison cmp;
      cmp.lhs = methods[i];
      cmp.rhs = methods[j];
      const auto mp = mann_whitney_u(result.methods[i].precision,
                                     result.methods[j].precision);
      const auto ma =
          mann_whitney_u(result.methods[i].aupr, result.methods[j].aupr);
      cmp.precision_u = mp.u;
      cmp.precision_p = mp.p;
      cmp.aupr_u = ma.u;
      cmp.aupr_p = ma.p;
      prec_p.push_back(mp.p);
      aupr_p.push_back(ma.p);
      result.comparisons.push_back(cmp);
    }
  }
  const auto prec_adj = benjamini_hochberg(prec_p);
  const auto aupr_adj = benjamini_hochberg(aupr_p);
  for (size_t k = 0; k < result.comparisons.size(); ++k) {
    result.comparisons[k].precision_p_adj = prec_adj[k];
    result.comparisons[k].aupr_p_adj = aupr_adj[k];
  }
  return result;
}

ClassAggregate class_aggregate(std::span<const ExperimentResult> results,
                               MethodClass klass) {
  std::vector<double> precision, auprs;
  for (const ExperimentResult& r : results) {
    for (const MethodSummary& ms : r.methods) {
      if (method_class(ms.method) != klass) continue;
      precision.insert(precision.end(), ms.precision.begin(),
                       ms.precision.end());
      auprs.insert(auprs.end(), ms.aupr.begin(), ms.aupr.end());
    }
  }
  if (precision.empty()) {
    throw InvalidArgument("class_aggregate: no samples for class '" +
                          std::string(method_class_name(klass)) + "'");
  }
  ClassAggregate agg;
  agg.klass = klass;
  agg.samples = precision.size();
  agg.precision_stats = mean_stderr(precision);
  agg.aupr_stats = mean_stderr(auprs);
  return agg;
}

std::vector<ClassAggregate> aggregate_classes(
    std::span<const ExperimentResult> results) {
  std::vector<ClassAggregate> out;
  for (MethodClass klass :
       {MethodClass::LcpBased, MethodClass::Classical, MethodClass::Projection,
        MethodClass::Random}) {
    bool any = false;
    for (const ExperimentResult& r : results) {
      for (const MethodSummary& ms : r.methods) {
        any = any || method_class(ms.method) == klass;
      }
    }
    if (any) out.push_back(class_aggregate(results, klass));
  }
  return out;
}

}  // namespace bilink
