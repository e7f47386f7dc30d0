// Copyright 2026 isub authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isub/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "isub/bounds.hpp"

namespace isub {

EmpiricalSample::EmpiricalSample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("empirical sample must be nonempty");
  for (double v : values_)
    if (std::isnan(v)) throw std::invalid_argument("empirical sample contains NaN");
  std::sort(values_.begin(), values_.end());
}

double ecdf(const EmpiricalSample& sample, double x) {
  const auto& v = sample.values();
  const auto k = std::upper_bound(v.begin(), v.end(), x) - v.begin();
  return static_cast<double>(k) / static_cast<double>(v.size());
}

double kolmogorov_sf(double lambda) {
  if (lambda < 0.18) return 1.0;
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += (j % 2 == 1) ? term : -term;
    if (term < 1e-12 * std::max(sum, 1e-300)) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KSResult ks_two_sample(const EmpiricalSample& a, const EmpiricalSample& b) {
  const auto& va = a.values();
  const auto& vb = b.values();
  const double na = static_cast<double>(va.size());
  const double nb = static_cast<double>(vb.size());

  // Merge walk over the pooled sorted points; ties advance both sides before
  // the gap is measured.
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < va.size() && j < vb.size()) {
    const double x = std::min(va[i], vb[j]);
    while (i < va.size() && va[i] == x) ++i;
    while (j < vb.size() && vb[j] == x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  d = std::max(d, std::fabs(1.0 - static_cast<double>(j) / nb));
  d = std::max(d, std::fabs(static_cast<double>(i) / na - 1.0));

  KSResult r;
  r.statistic = d;
  r.n_effective = na * nb / (na + nb);
  r.p_value = kolmogorov_sf(std::sqrt(r.n_effective) * d);
  return r;
}

std::optional<double> empirical_steutel_ratio(const EmpiricalSample& sample, double x) {
  if (!(x > 1.0)) throw std::domain_error("empirical_steutel_ratio: x must be > 1");
  const double f = ecdf(sample, x);
  if (f >= 1.0) return std::nullopt;
  return -std::log1p(-f) / (x * std::log(x));
}

TailDominanceReport check_tail_dominance(const EmpiricalSample& sample,
                                         const SubordinatorSpec& spec, double t,
                                         std::span<const double> x_grid) {
  TailDominanceReport report;
  report.n = sample.n();
  const double n = static_cast<double>(sample.n());
  for (double x : x_grid) {
    TailDominanceRow row;
    row.x = x;
    row.bound = chernoff_bound(spec, t, x);
    row.empirical_tail = 1.0 - ecdf(sample, x);
    row.threshold = row.bound + 4.0 * std::sqrt(row.bound * (1.0 - row.bound) / n);
    row.ok = row.empirical_tail <= row.threshold;
    if (!row.ok) report.all_ok = false;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace isub
