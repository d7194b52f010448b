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
#include "bilink/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "bilink/error.hpp"

namespace bilink {

MeanStderr mean_stderr(std::span<const double> xs) {
  MeanStderr out;
  if (xs.empty()) throw InvalidArgument("mean_stderr: empty sample");
  const double n = static_cast<double>(xs.size());
  for (double x : xs) out.mean += x;
  out.mean /= n;
  if (xs.size() < 2) return out;
  double ss = 0;
  for (double x : xs) ss += (x - out.mean) * (x - out.mean);
  out.se = std::sqrt(ss / (n - 1)) / std::sqrt(n);
  return out;
}

std::vector<double> midranks(std::span<const double> xs) {
  const size_t n = xs.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t i, size_t j) { return xs[i] < xs[j]; });
  std::vector<double> ranks(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && xs[order[j + 1]] == xs[order[i]]) ++j;
    const double mid = (static_cast<double>(i) + j) / 2.0 + 1.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = mid;
    i = j + 1;
  }
  return ranks;
}

MannWhitneyResult mann_whitney_u(std::span<const double> a,
                                 std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw InvalidArgument("mann_whitney_u: empty sample");
  }
  const size_t n1 = a.size(), n2 = b.size(), n = n1 + n2;
  std::vector<double> pooled;
  pooled.reserve(n);
  pooled.insert(pooled.end(), a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const std::vector<double> ranks = midranks(pooled);

  double r1 = 0;
  for (size_t i = 0; i < n1; ++i) r1 += ranks[i];
  const double u1 = r1 - static_cast<double>(n1) * (n1 + 1) / 2.0;

  // Tie correction: sum of t^3 - t over tie groups of the pooled sample.
  std::vector<double> sorted(pooled);
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0;
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && sorted[j + 1] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i + 1);
    tie_term += t * t * t - t;
    i = j + 1;
  }

  const double mean = static_cast<double>(n1) * n2 / 2.0;
  const double var = static_cast<double>(n1) * n2 / 12.0 *
                     (n + 1 - tie_term / (static_cast<double>(n) * (n - 1)));
  if (var <= 0) return {u1, 1.0};

  const double numer = std::max(std::abs(u1 - mean) - 0.5, 0.0);
  const double z = numer / std::sqrt(var);
  const double p = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
  return {u1, p};
}

std::vector<double> benjamini_hochberg(std::span<const double> pvalues) {
  const size_t n = pvalues.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t i, size_t j) { return pvalues[i] < pvalues[j]; });
  std::vector<double> adjusted(n);
  double running = 1.0;
  for (size_t k = n; k-- > 0;) {
    const double stepped =
        pvalues[order[k]] * static_cast<double>(n) / static_cast<double>(k + 1);
    running = std::min(running, stepped);
    adjusted[order[k]] = std::min(running, 1.0);
  }
  return adjusted;
}

double pearson_corr(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw InvalidArgument("pearson_corr: length mismatch");
  }
  if (xs.size() < 2) throw InvalidArgument("pearson_corr: need >= 2 points");
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / std::sqrt(sxx * syy);
}

double spearman_corr(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw InvalidArgument("spearman_corr: length mismatch");
  }
  const std::vector<double> rx = midranks(xs);
  const std::vector<double> ry = midranks(ys);
  return pearson_corr(rx, ry);
}

}  // namespace bilink
