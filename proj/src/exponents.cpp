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

#include "isub/exponents.hpp"

#include <cmath>
#include <limits>

namespace isub {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double laplace_exponent(const SubordinatorSpec& spec, double u) {
  if (!(u >= 0.0)) throw std::domain_error("laplace_exponent: u must be >= 0");
  if (u == 0.0) return 0.0;
  switch (spec.family) {
    case Family::Stable:
      return std::pow(u, spec.p1);
    case Family::TemperedStable: {
      const double lam = spec.p2;
      if (lam == 0.0) return std::pow(u, spec.p1);
      return std::pow(u + lam, spec.p1) - std::pow(lam, spec.p1);
    }
    case Family::InverseGaussian: {
      const double g = spec.p2;
      return spec.p1 * (std::sqrt(2.0 * u + g * g) - g);
    }
    case Family::Gamma:
      return spec.p1 * std::log1p(u / spec.p2);
  }
  return 0.0;
}

std::complex<double> laplace_exponent(const SubordinatorSpec& spec, std::complex<double> s) {
  using C = std::complex<double>;
  switch (spec.family) {
    case Family::Stable:
      return std::pow(s, C(spec.p1));
    case Family::TemperedStable: {
      const double lam = spec.p2;
      if (lam == 0.0) return std::pow(s, C(spec.p1));
      return std::pow(s + lam, C(spec.p1)) - std::pow(lam, spec.p1);
    }
    case Family::InverseGaussian: {
      const double g = spec.p2;
      return spec.p1 * (std::sqrt(2.0 * s + g * g) - g);
    }
    case Family::Gamma:
      return spec.p1 * std::log(1.0 + s / spec.p2);
  }
  return {};
}

double laplace_exponent_derivative(const SubordinatorSpec& spec, double u) {
  if (!(u > 0.0)) throw std::domain_error("laplace_exponent_derivative: u must be > 0");
  switch (spec.family) {
    case Family::Stable:
      return spec.p1 * std::pow(u, spec.p1 - 1.0);
    case Family::TemperedStable:
      return spec.p1 * std::pow(u + spec.p2, spec.p1 - 1.0);
    case Family::InverseGaussian: {
      const double g = spec.p2;
      return spec.p1 / std::sqrt(2.0 * u + g * g);
    }
    case Family::Gamma:
      return spec.p1 / (spec.p2 + u);
  }
  return 0.0;
}

double derivative_sup(const SubordinatorSpec& spec) {
  switch (spec.family) {
    case Family::Stable:
      return kInf;
    case Family::TemperedStable:
      if (spec.p2 == 0.0) return kInf;
      return spec.p1 * std::pow(spec.p2, spec.p1 - 1.0);
    case Family::InverseGaussian:
      if (spec.p2 == 0.0) return kInf;
      return spec.p1 / spec.p2;
    case Family::Gamma:
      return spec.p1 / spec.p2;
  }
  return 0.0;
}

double invert_exponent_derivative(const SubordinatorSpec& spec, double v) {
  if (!(v > 0.0)) throw std::domain_error("invert_exponent_derivative: v must be > 0");
  if (!(v < derivative_sup(spec)))
    throw OutOfDomainError("invert_exponent_derivative: v >= sup of derivative");
  switch (spec.family) {
    case Family::Stable:
      return std::pow(v / spec.p1, 1.0 / (spec.p1 - 1.0));
    case Family::TemperedStable:
      return std::pow(v / spec.p1, 1.0 / (spec.p1 - 1.0)) - spec.p2;
    case Family::InverseGaussian: {
      const double r = spec.p1 / v;
      return 0.5 * (r * r - spec.p2 * spec.p2);
    }
    case Family::Gamma:
      return (spec.p1 - spec.p2 * v) / v;
  }
  return 0.0;
}

double invert_exponent_derivative_numeric(const SubordinatorSpec& spec, double v) {
  if (!(v > 0.0)) throw std::domain_error("invert_exponent_derivative_numeric: v must be > 0");
  // Bracket the root of the strictly decreasing derivative.
  double lo = 1.0, hi = 1.0;
  int guard = 0;
  while (laplace_exponent_derivative(spec, hi) > v) {
    hi *= 2.0;
    if (++guard > 2000 || hi > 1e300)
      throw OutOfDomainError("invert_exponent_derivative_numeric: no root above bracket");
  }
  guard = 0;
  while (laplace_exponent_derivative(spec, lo) < v) {
    lo *= 0.5;
    if (++guard > 2000 || lo < 1e-300)
      throw OutOfDomainError("invert_exponent_derivative_numeric: v >= sup of derivative");
  }
  // Bisection: unconditional convergence on a monotone function.
  for (int it = 0; it < 300; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double d = laplace_exponent_derivative(spec, mid);
    if (std::fabs(d - v) < 1e-12 * std::max(1.0, std::fabs(v)) &&
        (hi - lo) < 1e-12 * mid)
      return mid;
    if (d > v)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

LaplaceTriple make_laplace_triple(const SubordinatorSpec& spec) {
  validate(spec);
  return LaplaceTriple{spec, derivative_sup(spec)};
}

}  // namespace isub
