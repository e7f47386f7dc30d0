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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "isub/density.hpp"
#include "isub/exponents.hpp"
#include "isub/samplers.hpp"
#include "test_util.hpp"

using namespace isub;

namespace {

// Exact first-passage density of the 1/2-stable clock.
double half_stable_inverse_density(double x, double t) {
  return std::exp(-x * x / (4.0 * t)) / std::sqrt(std::numbers::pi * t);
}

}  // namespace

TEST_CASE("transform of the first-passage density") {
  const auto st = SubordinatorSpec::stable(0.5);
  // stable: s^(alpha-1) exp(-x s^alpha)
  CHECK(density_lt(st, 1.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  for (double s : {0.3, 1.0, 4.0}) {
    for (double x : {0.0, 0.7, 2.0}) {
      const double direct = std::pow(s, -0.5) * std::exp(-x * std::sqrt(s));
      CHECK(density_lt(st, x, s) == doctest::Approx(direct).epsilon(1e-13));
    }
  }
  // complex argument agrees with the closed form off the axis
  const std::complex<double> s(0.8, 1.3);
  const auto got = density_lt(st, 2.0, s);
  const auto want = std::pow(s, -0.5) * std::exp(-2.0 * std::sqrt(s));
  CHECK(std::abs(got - want) < 1e-13);

  // x = 0 reduces to exponent(s)/s
  const auto gm = SubordinatorSpec::gamma(1.0, 1.0);
  CHECK(density_lt(gm, 0.0, 2.0) ==
        doctest::Approx(laplace_exponent(gm, 2.0) / 2.0).epsilon(1e-14));
  // gamma pinned value: log(2) e^{-log 2} at x = 1, s = 1
  CHECK(density_lt(gm, 1.0, 1.0) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-14));

  CHECK_THROWS_AS(density_lt(st, 1.0, std::complex<double>(0.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(density_lt(st, 1.0, -1.0), std::domain_error);
}

TEST_CASE("inversion config validation") {
  CHECK_THROWS_AS(LTInversionConfig::gaver_stehfest(13), std::invalid_argument);  // odd
  CHECK_THROWS_AS(LTInversionConfig::gaver_stehfest(20), std::invalid_argument);
  CHECK_THROWS_AS(LTInversionConfig::gaver_stehfest(6), std::invalid_argument);
  CHECK_THROWS_AS(LTInversionConfig::talbot(8), std::invalid_argument);
  CHECK_THROWS_AS(LTInversionConfig::talbot(128), std::invalid_argument);
  CHECK_NOTHROW(LTInversionConfig::gaver_stehfest(14));
  CHECK_NOTHROW(LTInversionConfig::talbot(32));
}

TEST_CASE("inverted density matches the analytic half-stable pair") {
  const auto st = SubordinatorSpec::stable(0.5);
  const auto talbot = LTInversionConfig::talbot(32);
  const auto gs = LTInversionConfig::gaver_stehfest(18);

  CHECK(inverse_subordinator_density(st, 1.0, 1.0, talbot).value ==
        doctest::Approx(0.43939).epsilon(2e-5));
  CHECK(inverse_subordinator_density(st, 1.0, 1.0, talbot).value ==
        doctest::Approx(half_stable_inverse_density(1.0, 1.0)).epsilon(1e-9));
  CHECK(inverse_subordinator_density(st, 1.0, 1.0, gs).value ==
        doctest::Approx(half_stable_inverse_density(1.0, 1.0)).epsilon(4e-6));
  // the two methods validate each other at an interior point
  CHECK(std::fabs(inverse_subordinator_density(st, 1.0, 1.0, talbot).value -
                  inverse_subordinator_density(st, 1.0, 1.0, gs).value) < 4e-6);

  // cross-method agreement on interior points away from the t boundary layer
  for (double x = 0.5; x <= 3.01; x += 0.5) {
    for (double t = 0.5; t <= 3.01; t += 0.5) {
      const double a = inverse_subordinator_density(st, x, t, talbot).value;
      const double b = inverse_subordinator_density(st, x, t, gs).value;
      CHECK(std::fabs(a - b) < 1e-5);
    }
  }

  // at 14 terms the truncation error is visibly larger; document the scale
  const auto gs14 = LTInversionConfig::gaver_stehfest(14);
  const double err14 = std::fabs(inverse_subordinator_density(st, 1.0, 1.0, gs14).value -
                                 half_stable_inverse_density(1.0, 1.0));
  CHECK(err14 < 5e-5);
  CHECK(err14 > std::fabs(inverse_subordinator_density(st, 1.0, 1.0, gs).value -
                          half_stable_inverse_density(1.0, 1.0)));

  CHECK_THROWS_AS(inverse_subordinator_density(st, 0.0, 1.0, talbot), std::domain_error);
  CHECK(inverse_subordinator_density(st, 1.0, 5e-4, talbot).low_confidence);
  CHECK(inverse_subordinator_density(st, 5e-4, 1.0, talbot).low_confidence);
  CHECK_FALSE(inverse_subordinator_density(st, 1.0, 1.0, talbot).low_confidence);
}

TEST_CASE("inverted gamma first-passage density integrates to one") {
  const auto gm = SubordinatorSpec::gamma(1.0, 1.0);
  const double mass = testutil::integrate(
      [&](double x) { return inverse_subordinator_density(gm, x, 1.0).value; }, 1e-6, 50.0,
      128);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("transform round-trip through quadrature in the time variable") {
  // integral of e^{-s t} q(x, t) dt over (0, 60] reproduces the transform.
  // The gamma clock keeps O(t^x) first-passage mass at tiny t, so the small-t
  // end is covered with log-spaced segments down to 1e-6.
  const double cuts[] = {1e-6, 1e-4, 1e-2, 1.0, 60.0};
  const int panels[] = {16, 24, 48, 96};
  for (const auto& spec : {SubordinatorSpec::stable(0.5), SubordinatorSpec::gamma(1.0, 1.0)}) {
    for (double s : {0.5, 1.0, 2.0}) {
      for (double x : {0.5, 1.0, 2.0}) {
        auto f = [&](double t) {
          return std::exp(-s * t) * inverse_subordinator_density(spec, x, t).value;
        };
        double back = 0.0;
        for (int seg = 0; seg < 4; ++seg)
          back += testutil::integrate(f, cuts[seg], cuts[seg + 1], panels[seg]);
        CHECK(back == doctest::Approx(density_lt(spec, x, s)).epsilon(1e-4));
      }
    }
  }
}

TEST_CASE("erlang density") {
  // order 1 is the exponential density
  for (double t : {0.0, 0.5, 2.0})
    CHECK(erlang_pdf(1, 2.0, t) == doctest::Approx(2.0 * std::exp(-2.0 * t)).epsilon(1e-14));
  CHECK(erlang_pdf(2, 1.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(erlang_pdf(2, 1.0, 0.0) == 0.0);
  const double mass =
      testutil::integrate([](double t) { return erlang_pdf(2, 1.0, t); }, 0.0, 60.0, 96);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
  CHECK_THROWS_AS(erlang_pdf(0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(erlang_pdf(1, -1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(erlang_pdf(1, 1.0, -1.0), std::domain_error);
}

TEST_CASE("family marginal densities") {
  // gamma with a t = 1 is the unit exponential
  const auto gm = SubordinatorSpec::gamma(1.0, 1.0);
  for (double y : {0.2, 1.0, 3.0}) {
    const auto f = family_pdf(gm, 1.0, y);
    REQUIRE(f.has_value());
    CHECK(*f == doctest::Approx(std::exp(-y)).epsilon(1e-13));
  }

  // ig normalization
  const auto ig = SubordinatorSpec::inverse_gaussian(1.0, 1.0);
  const double mass =
      testutil::integrate([&](double y) { return *family_pdf(ig, 1.0, y); }, 1e-8, 60.0, 128);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));

  // stable and tempered marginals have no closed form here
  CHECK_FALSE(family_pdf(SubordinatorSpec::stable(0.5), 1.0, 1.0).has_value());
  CHECK_FALSE(family_pdf(SubordinatorSpec::tempered_stable(0.5, 1.0), 1.0, 1.0).has_value());

  // the variant prefactor differs from the normalized one by 1/sqrt(2 pi)
  for (double y : {0.3, 1.0, 2.5}) {
    const double ratio = ig_pdf_variant_constant(ig, 1.0, y) / *family_pdf(ig, 1.0, y);
    CHECK(ratio == doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(ig_pdf_variant_constant(gm, 1.0, 1.0), std::domain_error);
}

TEST_CASE("ig marginal density matches the increment sampler histogram") {
  const auto ig = SubordinatorSpec::inverse_gaussian(1.0, 1.0);
  const std::size_t n = 1000000;
  RngStream rng(51, 0);
  // IG(mean 1, shape 1): bin the draws and chi-square against the density.
  const double lo = 0.0, hi = 5.0;
  const int bins = 40;
  std::vector<std::uint64_t> hist(bins + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = sample_increment(ig, 1.0, rng);
    const int b = v >= hi ? bins : static_cast<int>(v / (hi - lo) * bins);
    hist[b]++;
  }
  double stat = 0.0;
  int dof = -1;
  double tail_p = 1.0;
  for (int b = 0; b < bins; ++b) {
    const double a = lo + (hi - lo) * b / bins;
    const double c = lo + (hi - lo) * (b + 1) / bins;
    const double p = testutil::integrate([&](double y) { return *family_pdf(ig, 1.0, y); },
                                         std::max(a, 1e-12), c, 8);
    tail_p -= p;
    const double e = p * static_cast<double>(n);
    if (e < 10.0) continue;
    stat += (hist[b] - e) * (hist[b] - e) / e;
    ++dof;
  }
  const double etail = tail_p * static_cast<double>(n);
  stat += (hist[bins] - etail) * (hist[bins] - etail) / etail;
  ++dof;
  CHECK(testutil::chi_square_pvalue(stat, dof) > 0.01);
}

TEST_CASE("inverted density matches a bracket-sampler histogram") {
  // gamma(1,1) first passage at t=1; reduced scale (2e4 draws, dt=1e-3).
  const auto gm = SubordinatorSpec::gamma(1.0, 1.0);
  const std::size_t n = 20000;
  RngStream rng(52, 0);
  const double lo = 0.0, hi = 4.0;
  const int bins = 25;
  std::vector<std::uint64_t> hist(bins, 0);
  std::size_t inside = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = sample_inverse_subordinator(gm, 1.0, 1e-3, rng).midpoint();
    if (v >= hi) continue;
    hist[static_cast<int>(v / (hi - lo) * bins)]++;
    ++inside;
  }
  CHECK(inside > n * 0.95);
  const double w = (hi - lo) / bins;
  for (int b = 0; b < bins; ++b) {
    const double center = lo + w * (b + 0.5);
    const double q = inverse_subordinator_density(gm, center, 1.0).value;
    const double p_hat = static_cast<double>(hist[b]) / static_cast<double>(n);
    const double dens_hat = p_hat / w;
    const double se = std::sqrt(std::max(p_hat, 1e-6) * (1.0 - p_hat) / static_cast<double>(n)) / w;
    INFO("bin center ", center);
    CHECK(std::fabs(dens_hat - q) <= 3.0 * se + 0.01 * q + 1e-3);
  }
}
