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

#include "isub/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "isub/exponents.hpp"

namespace isub {

namespace {

constexpr std::uint64_t kRejectionCap = 1'000'000'000ULL;
constexpr std::size_t kGridCap = 100'000'000;
constexpr int kMaxDoublings = 30;
// simulate_path refuses tempered steps beyond this; keeps expected rejection
// iterations below e^5 per increment.
constexpr double kTemperedStepBudget = 5.0;

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::domain_error("stable index alpha must lie in (0,1)");
}

double tempered_increment(double alpha, double lambda, double dt, RngStream& rng) {
  const double scale = std::pow(dt, 1.0 / alpha);
  if (lambda == 0.0) return scale * sample_stable_unit(alpha, rng);
  for (std::uint64_t it = 0; it < kRejectionCap; ++it) {
    const double s = scale * sample_stable_unit(alpha, rng);
    if (rng.next_double() <= std::exp(-lambda * s)) return s;
  }
  throw std::runtime_error(
      "tempered increment: rejection cap exceeded; use a smaller dt");
}

double ig_increment(double delta, double gamma, double dt, RngStream& rng) {
  if (gamma == 0.0) {
    // Exponent degenerates to delta*sqrt(2u); that is the 1/2-stable law
    // with scale 2*(delta*dt)^2.
    const double c = delta * dt;
    return 2.0 * c * c * sample_stable_unit(0.5, rng);
  }
  // Normal-transform method for IG(mean mu, shape lam).
  const double mu = delta * dt / gamma;
  const double lam = delta * dt * delta * dt;
  const double z = rng.next_normal();
  const double y = z * z;
  const double x = mu + mu * mu * y / (2.0 * lam) -
                   mu / (2.0 * lam) * std::sqrt(4.0 * mu * lam * y + mu * mu * y * y);
  if (rng.next_double() <= mu / (mu + x)) return x;
  return mu * mu / x;
}

}  // namespace

double sample_stable_unit(double alpha, RngStream& rng) {
  check_alpha(alpha);
  const double u = std::numbers::pi * rng.next_double();  // (0, pi)
  const double w = rng.next_exponential();
  const double ratio = (1.0 - alpha) / alpha;
  const double num = std::sin(alpha * u) * std::pow(std::sin((1.0 - alpha) * u), ratio);
  const double den = std::pow(std::sin(u), 1.0 / alpha);
  return num / den * std::pow(w, -ratio);
}

double sample_increment(const SubordinatorSpec& spec, double dt, RngStream& rng) {
  if (!(dt > 0.0)) throw std::domain_error("sample_increment: dt must be > 0");
  switch (spec.family) {
    case Family::Stable:
      return std::pow(dt, 1.0 / spec.p1) * sample_stable_unit(spec.p1, rng);
    case Family::TemperedStable:
      return tempered_increment(spec.p1, spec.p2, dt, rng);
    case Family::InverseGaussian:
      return ig_increment(spec.p1, spec.p2, dt, rng);
    case Family::Gamma:
      return gamma_variate(rng, spec.p1 * dt) / spec.p2;
  }
  return 0.0;
}

SamplePath simulate_path(const SubordinatorSpec& spec, double horizon, double dt,
                         RngStream& rng) {
  if (!(horizon > 0.0) || !(dt > 0.0))
    throw std::domain_error("simulate_path: horizon and dt must be > 0");
  if (spec.family == Family::TemperedStable &&
      std::pow(spec.p2, spec.p1) * dt > kTemperedStepBudget)
    throw std::invalid_argument(
        "simulate_path: lambda^alpha * dt too large for tempered rejection; reduce dt");
  const double steps_d = std::ceil(horizon / dt - 1e-12);
  if (!(steps_d < static_cast<double>(kGridCap)))
    throw std::invalid_argument("simulate_path: grid length exceeds cap");
  const std::size_t steps = static_cast<std::size_t>(steps_d);

  SamplePath path;
  path.dt = dt;
  path.values.resize(steps + 1);
  path.values[0] = 0.0;
  double acc = 0.0;
  for (std::size_t k = 1; k <= steps; ++k) {
    acc += sample_increment(spec, dt, rng);
    path.values[k] = acc;
  }
  return path;
}

PassageBracket first_passage(const SamplePath& path, double t) {
  if (path.values.empty() || path.dt <= 0.0)
    throw std::domain_error("first_passage: invalid path");
  if (t < 0.0) return PassageBracket{0.0, 0.0, true};
  auto it = std::upper_bound(path.values.begin(), path.values.end(), t);
  if (it == path.values.end()) {
    const double h = path.horizon();
    return PassageBracket{h, h, false};
  }
  const auto k = static_cast<std::size_t>(it - path.values.begin());
  // values[0] = 0 <= t for t >= 0, so the crossing index is >= 1.
  return PassageBracket{(k - 1) * path.dt, k * path.dt, true};
}

double sample_inverse_stable_exact(double alpha, double t, RngStream& rng) {
  check_alpha(alpha);
  if (!(t >= 0.0)) throw std::domain_error("sample_inverse_stable_exact: t must be >= 0");
  if (t == 0.0) return 0.0;
  const double s = sample_stable_unit(alpha, rng);
  return std::pow(t / s, alpha);
}

PassageBracket sample_inverse_subordinator(const SubordinatorSpec& spec, double t,
                                           double dt, RngStream& rng) {
  if (!(t >= 0.0)) throw std::domain_error("sample_inverse_subordinator: t must be >= 0");
  if (!(dt > 0.0)) throw std::domain_error("sample_inverse_subordinator: dt must be > 0");
  double horizon = std::max(1.0, t);
  SamplePath path = simulate_path(spec, horizon, dt, rng);
  for (int doubling = 0; doubling <= kMaxDoublings; ++doubling) {
    const PassageBracket b = first_passage(path, t);
    if (b.exceeded) return b;
    // Extend the existing trajectory; increments already drawn are kept.
    horizon *= 2.0;
    const double steps_d = std::ceil(horizon / dt - 1e-12);
    if (!(steps_d < static_cast<double>(kGridCap)))
      throw std::runtime_error("sample_inverse_subordinator: horizon grid exceeds cap");
    const std::size_t steps = static_cast<std::size_t>(steps_d);
    double acc = path.values.back();
    path.values.reserve(steps + 1);
    for (std::size_t k = path.values.size(); k <= steps; ++k) {
      acc += sample_increment(spec, dt, rng);
      path.values.push_back(acc);
    }
  }
  throw std::runtime_error("sample_inverse_subordinator: horizon doubling cap reached");
}

double sample_composed_iss(std::span<const double> alphas, double t, RngStream& rng) {
  if (alphas.empty()) throw std::domain_error("sample_composed_iss: empty index list");
  if (!(t >= 0.0)) throw std::domain_error("sample_composed_iss: t must be >= 0");
  double r = t;
  for (auto it = alphas.rbegin(); it != alphas.rend(); ++it)
    r = sample_inverse_stable_exact(*it, r, rng);
  return r;
}

double sample_subordinator_at(const SubordinatorSpec& spec, double t, double dt_hint,
                              RngStream& rng) {
  if (!(t > 0.0)) throw std::domain_error("sample_subordinator_at: t must be > 0");
  if (spec.family != Family::TemperedStable || spec.p2 == 0.0)
    return sample_increment(spec, t, rng);
  // Chunk the tempered draw so each rejection step stays cheap.
  const double lam_a = std::pow(spec.p2, spec.p1);
  double chunk = 1.0 / lam_a;
  if (dt_hint > 0.0) chunk = std::min(chunk, dt_hint);
  const std::size_t m = static_cast<std::size_t>(std::ceil(t / chunk));
  const double dt = t / static_cast<double>(m);
  double acc = 0.0;
  for (std::size_t i = 0; i < m; ++i) acc += sample_increment(spec, dt, rng);
  return acc;
}

double sample_time_changed_iss(double alpha, const SubordinatorSpec& outer, double t,
                               double dt, RngStream& rng) {
  check_alpha(alpha);
  if (!(t > 0.0)) throw std::domain_error("sample_time_changed_iss: t must be > 0");
  const double clock = sample_subordinator_at(outer, t, dt, rng);
  return sample_inverse_stable_exact(alpha, clock, rng);
}

std::uint64_t sample_renewal_count(const WaitingTimeSpec& waiting, double t,
                                   RngStream& rng) {
  validate(waiting);
  if (!(t >= 0.0)) throw std::domain_error("sample_renewal_count: t must be >= 0");
  auto draw = [&]() -> double {
    switch (waiting.kind) {
      case WaitingTimeSpec::Kind::Exponential:
        return rng.next_exponential() / waiting.p1;
      case WaitingTimeSpec::Kind::Deterministic:
        return waiting.p1;
      case WaitingTimeSpec::Kind::Gamma:
        return gamma_variate(rng, waiting.p1) * waiting.p2;
    }
    return 0.0;
  };
  std::uint64_t count = 0;
  double sum = 0.0;
  for (;;) {
    sum += draw();
    if (sum > t) return count;
    ++count;
  }
}

std::uint64_t sample_fractional_poisson(double lambda, double alpha, double t,
                                        RngStream& rng) {
  if (!(lambda > 0.0)) throw std::domain_error("sample_fractional_poisson: lambda must be > 0");
  if (!(alpha > 0.0) || !(alpha <= 1.0))
    throw std::domain_error("sample_fractional_poisson: alpha must lie in (0,1]");
  if (!(t >= 0.0)) throw std::domain_error("sample_fractional_poisson: t must be >= 0");
  if (t == 0.0) return 0;
  const double clock = (alpha == 1.0) ? t : sample_inverse_stable_exact(alpha, t, rng);
  return poisson_variate(rng, lambda * clock);
}

}  // namespace isub
