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

#include "isub/density.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "isub/exponents.hpp"

namespace isub {

LTInversionConfig LTInversionConfig::talbot(int terms) {
  LTInversionConfig c{InversionMethod::Talbot, terms};
  validate(c);
  return c;
}

LTInversionConfig LTInversionConfig::gaver_stehfest(int terms) {
  LTInversionConfig c{InversionMethod::GaverStehfest, terms};
  validate(c);
  return c;
}

void validate(const LTInversionConfig& cfg) {
  if (cfg.method == InversionMethod::Talbot) {
    if (cfg.terms < 16 || cfg.terms > 64)
      throw std::invalid_argument("talbot terms must lie in [16, 64]");
  } else {
    if (cfg.terms < 8 || cfg.terms > 18 || cfg.terms % 2 != 0)
      throw std::invalid_argument("gaver-stehfest terms must be even in [8, 18]");
  }
}

std::complex<double> density_lt(const SubordinatorSpec& spec, double x,
                                std::complex<double> s) {
  if (!(x >= 0.0)) throw std::domain_error("density_lt: x must be >= 0");
  if (s == std::complex<double>(0.0, 0.0)) throw std::domain_error("density_lt: s must be nonzero");
  const std::complex<double> e = laplace_exponent(spec, s);
  return e * std::exp(-x * e) / s;
}

double density_lt(const SubordinatorSpec& spec, double x, double s) {
  if (!(s > 0.0)) throw std::domain_error("density_lt: s must be > 0 on the real axis");
  return density_lt(spec, x, std::complex<double>(s, 0.0)).real();
}

namespace {

// Fixed-Talbot contour s(theta) = r theta (cot theta + i), r = 2M/(5t).
double invert_talbot(const SubordinatorSpec& spec, double x, double t, int terms) {
  const double r = 2.0 * terms / (5.0 * t);
  double sum = 0.5 * std::exp(r * t) * density_lt(spec, x, r);
  for (int k = 1; k < terms; ++k) {
    const double theta = k * std::numbers::pi / terms;
    const double cot = std::cos(theta) / std::sin(theta);
    const std::complex<double> s(r * theta * cot, r * theta);
    const double sigma = theta + (theta * cot - 1.0) * cot;
    const std::complex<double> term =
        std::exp(t * s) * density_lt(spec, x, s) * std::complex<double>(1.0, sigma);
    if (!std::isfinite(term.real()) || !std::isfinite(term.imag()))
      throw InversionError("talbot inversion: non-finite contour term");
    sum += term.real();
  }
  const double f = r / terms * sum;
  if (!std::isfinite(f)) throw InversionError("talbot inversion diverged");
  return f;
}

// Stehfest weights; alternating and huge, so accumulate in long double.
std::vector<double> stehfest_weights(int n) {
  std::vector<double> w(n + 1, 0.0);
  const int half = n / 2;
  auto fact = [](int m) {
    long double f = 1.0L;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  for (int k = 1; k <= n; ++k) {
    long double sum = 0.0L;
    for (int j = (k + 1) / 2; j <= std::min(k, half); ++j) {
      long double term = std::pow(static_cast<long double>(j), half) * fact(2 * j);
      term /= fact(half - j) * fact(j) * fact(j - 1) * fact(k - j) * fact(2 * j - k);
      sum += term;
    }
    const long double sign = ((half + k) % 2 == 0) ? 1.0L : -1.0L;
    w[k] = static_cast<double>(sign * sum);
  }
  return w;
}

double invert_gaver_stehfest(const SubordinatorSpec& spec, double x, double t, int terms) {
  static thread_local std::vector<double> cached_w;
  static thread_local int cached_n = -1;
  if (cached_n != terms) {
    cached_w = stehfest_weights(terms);
    cached_n = terms;
  }
  const double ln2_t = std::numbers::ln2 / t;
  long double sum = 0.0L;  // weights alternate and nearly cancel
  for (int k = 1; k <= terms; ++k) {
    const double term = cached_w[k] * density_lt(spec, x, k * ln2_t);
    if (!std::isfinite(term)) throw InversionError("gaver-stehfest: non-finite term");
    sum += term;
  }
  const double f = ln2_t * static_cast<double>(sum);
  if (!std::isfinite(f)) throw InversionError("gaver-stehfest inversion diverged");
  return f;
}

}  // namespace

DensityValue inverse_subordinator_density(const SubordinatorSpec& spec, double x, double t,
                                          const LTInversionConfig& cfg) {
  if (!(x > 0.0) || !(t > 0.0))
    throw std::domain_error("inverse_subordinator_density: x and t must be > 0");
  validate(cfg);
  DensityValue out;
  out.low_confidence = (t < 1e-3 || x < 1e-3);
  out.value = (cfg.method == InversionMethod::Talbot)
                  ? invert_talbot(spec, x, t, cfg.terms)
                  : invert_gaver_stehfest(spec, x, t, cfg.terms);
  return out;
}

double erlang_pdf(int n, double lambda, double t) {
  if (n < 1) throw std::domain_error("erlang_pdf: n must be >= 1");
  if (!(lambda > 0.0)) throw std::domain_error("erlang_pdf: lambda must be > 0");
  if (!(t >= 0.0)) throw std::domain_error("erlang_pdf: t must be >= 0");
  if (t == 0.0) return n == 1 ? lambda : 0.0;
  return lambda * std::exp((n - 1) * std::log(lambda * t) - lambda * t - std::lgamma(n));
}

std::optional<double> family_pdf(const SubordinatorSpec& spec, double t, double y) {
  if (!(t > 0.0) || !(y > 0.0)) throw std::domain_error("family_pdf: t and y must be > 0");
  switch (spec.family) {
    case Family::InverseGaussian: {
      const double d = spec.p1, g = spec.p2;
      const double c = d * t / std::sqrt(2.0 * std::numbers::pi * y * y * y);
      return c * std::exp(d * g * t - 0.5 * (d * d * t * t / y + g * g * y));
    }
    case Family::Gamma: {
      const double a = spec.p1, b = spec.p2;
      return std::exp(a * t * std::log(b) - std::lgamma(a * t) +
                      (a * t - 1.0) * std::log(y) - b * y);
    }
    default:
      return std::nullopt;
  }
}

double ig_pdf_variant_constant(const SubordinatorSpec& spec, double t, double y) {
  if (spec.family != Family::InverseGaussian)
    throw std::domain_error("ig_pdf_variant_constant: requires the ig family");
  if (!(t > 0.0) || !(y > 0.0)) throw std::domain_error("ig_pdf_variant_constant: t and y must be > 0");
  const double d = spec.p1, g = spec.p2;
  const double c = d * t / (2.0 * std::numbers::pi) * std::pow(y, -1.5);
  return c * std::exp(d * g * t - 0.5 * (d * d * t * t / y + g * g * y));
}

}  // namespace isub
