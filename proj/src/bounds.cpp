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

#include "isub/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace isub {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

void validate(const BoundQuery& q) {
  validate(q.spec);
  if (!(q.t > 0.0) || !std::isfinite(q.t)) throw std::domain_error("bound query: t must be > 0");
  if (!(q.x > 0.0) || !std::isfinite(q.x)) throw std::domain_error("bound query: x must be > 0");
  if (!(q.p > 0.0) || !std::isfinite(q.p)) throw std::domain_error("bound query: p must be > 0");
}

bool trivial_regime(const SubordinatorSpec& spec, double t, double x) {
  return !(t / x < derivative_sup(spec));
}

double chernoff_log_bound(const SubordinatorSpec& spec, double t, double x) {
  if (!(t > 0.0) || !(x > 0.0))
    throw std::domain_error("chernoff_log_bound: t and x must be > 0");
  const double v = t / x;
  if (!(v < derivative_sup(spec))) return 0.0;
  const double u = invert_exponent_derivative(spec, v);
  const double lb = t * u - x * laplace_exponent(spec, u);
  // Roundoff near the regime boundary can push the optimum a hair above 0.
  return std::min(lb, 0.0);
}

double chernoff_bound(const SubordinatorSpec& spec, double t, double x) {
  return std::exp(chernoff_log_bound(spec, t, x));
}

double chernoff_bound(const BoundQuery& q) {
  validate(q);
  if (q.p != 1.0) throw std::domain_error("chernoff_bound: query must have p = 1");
  return chernoff_bound(q.spec, q.t, q.x);
}

double chernoff_log_bound_power(const SubordinatorSpec& spec, double t, double x, double p) {
  if (!(p > 0.0)) throw std::domain_error("chernoff_log_bound_power: p must be > 0");
  return chernoff_log_bound(spec, t, std::pow(x, 1.0 / p));
}

double chernoff_bound_power(const BoundQuery& q) {
  validate(q);
  return std::exp(chernoff_log_bound_power(q.spec, q.t, q.x, q.p));
}

ClosedFormBound closed_form_bound_detail(const SubordinatorSpec& spec, double t, double x) {
  if (!(t > 0.0) || !(x > 0.0))
    throw std::domain_error("closed_form_bound: t and x must be > 0");
  ClosedFormBound out;
  if (trivial_regime(spec, t, x)) {
    out.trivial = true;
    return out;
  }
  switch (spec.family) {
    case Family::Stable: {
      const double a = spec.p1;
      const double r = t / (a * x);
      out.log_value = t * std::pow(r, 1.0 / (a - 1.0)) - x * std::pow(r, a / (a - 1.0));
      break;
    }
    case Family::TemperedStable: {
      const double a = spec.p1, lam = spec.p2;
      const double r = t / (a * x);
      out.log_value = -lam * t + t * std::pow(r, 1.0 / (a - 1.0)) -
                      x * std::pow(r, a / (a - 1.0)) + std::pow(lam, a) * x;
      break;
    }
    case Family::InverseGaussian: {
      const double d = spec.p1, g = spec.p2;
      out.log_value = -d * d * x * x / (2.0 * t) + d * g * x - g * g * t / 2.0;
      out.ig_variant_log_value = -d * d * x * x / t + d * g * x - g * g * t / 2.0;
      break;
    }
    case Family::Gamma: {
      const double a = spec.p1, b = spec.p2;
      out.log_value = a * x * std::log(b * t / (a * x)) + a * x - b * t;
      break;
    }
  }
  out.log_value = std::min(out.log_value, 0.0);
  out.value = std::exp(out.log_value);
  return out;
}

double closed_form_bound(const SubordinatorSpec& spec, double t, double x) {
  return closed_form_bound_detail(spec, t, x).value;
}

double steutel_ratio(const SubordinatorSpec& spec, double t, double x) {
  if (!(x > 1.0)) throw std::domain_error("steutel_ratio: x must be > 1");
  if (trivial_regime(spec, t, x))
    throw std::domain_error("steutel_ratio: level is inside the trivial-bound regime");
  return -chernoff_log_bound(spec, t, x) / (x * std::log(x));
}

BoundCurve make_bound_curve(const SubordinatorSpec& spec, double t,
                            std::span<const double> x_grid, double p) {
  BoundCurve c;
  c.x.assign(x_grid.begin(), x_grid.end());
  for (size_t i = 1; i < c.x.size(); ++i)
    if (!(c.x[i] > c.x[i - 1]))
      throw std::domain_error("bound curve: levels must be strictly increasing");
  c.log_bound.reserve(c.x.size());
  for (double x : c.x) {
    if (!(x > 0.0)) throw std::domain_error("bound curve: levels must be > 0");
    const double lb = chernoff_log_bound_power(spec, t, x, p);
    c.log_bound.push_back(lb);
    c.bound.push_back(std::exp(lb));
    c.trivial.push_back(lb == 0.0 && trivial_regime(spec, t, std::pow(x, 1.0 / p)));
    c.ratio.push_back(x > 1.0 ? -lb / (x * std::log(x)) : kNaN);
  }
  return c;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi > lo) || points < 2)
    throw std::invalid_argument("log_grid: need 0 < lo < hi and points >= 2");
  std::vector<double> g(points);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < points; ++i)
    g[i] = std::exp(llo + (lhi - llo) * i / (points - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

const char* verdict_name(IDVerdict v) {
  return v == IDVerdict::NotInfinitelyDivisible ? "NotInfinitelyDivisible" : "Inconclusive";
}

namespace {

// Least squares of y against {1, r1, r2} via 3x3 normal equations.
std::array<double, 3> fit3(std::span<const double> r1, std::span<const double> r2,
                           std::span<const double> y) {
  double m[3][3] = {};
  double rhs[3] = {};
  const size_t n = y.size();
  for (size_t i = 0; i < n; ++i) {
    const double b[3] = {1.0, r1[i], r2[i]};
    for (int j = 0; j < 3; ++j) {
      rhs[j] += b[j] * y[i];
      for (int k = 0; k < 3; ++k) m[j][k] += b[j] * b[k];
    }
  }
  // Gaussian elimination with partial pivoting.
  int idx[3] = {0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::fabs(m[idx[r]][col]) > std::fabs(m[idx[piv]][col])) piv = r;
    std::swap(idx[col], idx[piv]);
    const double d = m[idx[col]][col];
    if (d == 0.0) throw std::runtime_error("slope fit: singular normal equations");
    for (int r = col + 1; r < 3; ++r) {
      const double f = m[idx[r]][col] / d;
      for (int k = col; k < 3; ++k) m[idx[r]][k] -= f * m[idx[col]][k];
      rhs[idx[r]] -= f * rhs[idx[col]];
    }
  }
  std::array<double, 3> beta{};
  for (int col = 2; col >= 0; --col) {
    double acc = rhs[idx[col]];
    for (int k = col + 1; k < 3; ++k) acc -= m[idx[col]][k] * beta[k];
    beta[col] = acc / m[idx[col]][col];
  }
  return beta;
}

}  // namespace

IDDiagnosis diagnose_id(const SubordinatorSpec& spec, double t,
                        std::span<const double> x_grid, double p) {
  validate(spec);
  if (!(t > 0.0)) throw std::invalid_argument("diagnose_id: t must be > 0");
  if (!(p > 0.0)) throw std::invalid_argument("diagnose_id: p must be > 0");
  if (x_grid.size() < 8) throw std::invalid_argument("diagnose_id: grid too small");
  for (size_t i = 1; i < x_grid.size(); ++i)
    if (!(x_grid[i] > x_grid[i - 1]))
      throw std::invalid_argument("diagnose_id: grid must be strictly increasing");
  if (!(x_grid.back() >= x_grid.front() * 999.0))
    throw std::invalid_argument("diagnose_id: grid must span at least three decades");
  if (!(x_grid.front() > 1.0))
    throw std::invalid_argument("diagnose_id: grid must start above 1");
  // The whole grid must map above the trivial-bound threshold.
  if (trivial_regime(spec, t, std::pow(x_grid.front(), 1.0 / p)))
    throw std::invalid_argument("diagnose_id: grid starts inside the trivial-bound regime");

  const size_t n = x_grid.size();
  std::vector<double> neg_log_bound(n), ratio(n);
  for (size_t i = 0; i < n; ++i) {
    const double lb = chernoff_log_bound_power(spec, t, x_grid[i], p);
    neg_log_bound[i] = -lb;
    ratio[i] = -lb / (x_grid[i] * std::log(x_grid[i]));
    if (!(neg_log_bound[i] > 0.0))
      throw std::invalid_argument("diagnose_id: bound degenerates to 1 on the grid");
  }

  // Fit over the top two decades.
  std::vector<double> lx, llx, ly;
  const double fit_from = x_grid.back() / 100.0;
  for (size_t i = 0; i < n; ++i) {
    if (x_grid[i] < fit_from) continue;
    lx.push_back(std::log(x_grid[i]));
    llx.push_back(std::log(std::log(x_grid[i])));
    ly.push_back(std::log(neg_log_bound[i]));
  }
  if (lx.size() < 4) throw std::invalid_argument("diagnose_id: too few points in fit window");
  const auto beta = fit3(lx, llx, ly);

  IDDiagnosis d;
  d.slope_estimate = beta[1];
  d.log_factor_estimate = beta[2];

  const double tail_from = x_grid.back() / 10.0;
  for (size_t i = 0; i < n; ++i)
    if (x_grid[i] >= tail_from) d.ratio_tail.push_back(ratio[i]);

  bool increasing = d.ratio_tail.size() >= 2 && d.ratio_tail.back() > d.ratio_tail.front();
  for (size_t i = 1; increasing && i < d.ratio_tail.size(); ++i)
    if (d.ratio_tail[i] < d.ratio_tail[i - 1] * (1.0 - 1e-12)) increasing = false;
  d.ratio_increasing = increasing;

  d.verdict = (increasing && d.slope_estimate > 1.0 + kSlopeMargin)
                  ? IDVerdict::NotInfinitelyDivisible
                  : IDVerdict::Inconclusive;
  return d;
}

}  // namespace isub
