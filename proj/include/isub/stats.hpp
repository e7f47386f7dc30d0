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

#ifndef ISUB_STATS_HPP_
#define ISUB_STATS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "isub/spec.hpp"

namespace isub {

// Sorted i.i.d. draws supporting ECDF / tail / KS queries.
class EmpiricalSample {
 public:
  // Sorts and validates (nonempty, NaN-free).
  explicit EmpiricalSample(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t n() const { return values_.size(); }
  double min() const { return values_.front(); }
  double max() const { return values_.back(); }

 private:
  std::vector<double> values_;
};

// Fraction of values <= x; right-continuous step function.
double ecdf(const EmpiricalSample& sample, double x);

struct KSResult {
  double statistic = 0.0;    // sup-norm of the ECDF difference
  double p_value = 1.0;      // asymptotic Kolmogorov distribution
  double n_effective = 0.0;  // n_a n_b / (n_a + n_b)
};

// Exact sup over pooled points; asymptotic p-value.
KSResult ks_two_sample(const EmpiricalSample& a, const EmpiricalSample& b);

// Survival function of the Kolmogorov distribution, Q(lambda).
double kolmogorov_sf(double lambda);

// -log(1 - ECDF(x)) / (x log x), for x > 1.  Empty when the tail is
// exhausted (ECDF = 1); the caller must shrink x or grow n.
std::optional<double> empirical_steutel_ratio(const EmpiricalSample& sample, double x);

struct TailDominanceRow {
  double x = 0.0;
  double bound = 1.0;
  double empirical_tail = 0.0;
  double threshold = 1.0;  // bound + 4 * sqrt(bound (1-bound) / n)
  bool ok = true;
};

struct TailDominanceReport {
  std::vector<TailDominanceRow> rows;
  std::size_t n = 0;
  bool all_ok = true;
};

// Per-level check that the empirical tail never exceeds the analytic bound
// beyond Monte Carlo noise.
TailDominanceReport check_tail_dominance(const EmpiricalSample& sample,
                                         const SubordinatorSpec& spec, double t,
                                         std::span<const double> x_grid);

}  // namespace isub

#endif  // ISUB_STATS_HPP_
