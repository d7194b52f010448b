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

#include <span>
#include <vector>

namespace bilink {

struct MeanStderr {
  double mean = 0;
  double se = 0;  // sample stdev / sqrt(n); 0 when n < 2
};

MeanStderr mean_stderr(std::span<const double> xs);

struct MannWhitneyResult {
  double u;  // U statistic of the first sample
  double p;  // two-sided, normal approximation with tie correction and
             // continuity correction; exactly 1 when all values coincide
};

/// Rank-sum test with midrank tie handling.  Throws on empty samples.
MannWhitneyResult mann_whitney_u(std::span<const double> a,
                                 std::span<const double> b);

/// Benjamini-Hochberg step-up adjustment, monotone-enforced, clipped to 1.
std::vector<double> benjamini_hochberg(std::span<const double> pvalues);

/// Product-moment correlation; NaN when either vector has zero variance.
/// Throws when lengths differ or are < 2.
double pearson_corr(std::span<const double> xs, std::span<const double> ys);

/// Pearson on midrank-transformed data.
double spearman_corr(std::span<const double> xs, std::span<const double> ys);

/// Midranks (1-based, ties averaged).
std::vector<double> midranks(std::span<const double> xs);

}  // namespace bilink
