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

#include "isub/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace isub {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  std::uint64_t a = seed;
  std::uint64_t b = stream_id ^ 0xD1B54A32D192ED03ULL;
  // Fold both words into one SplitMix64 chain so every (seed, stream) pair
  // lands in an unrelated region of the state space.
  std::uint64_t x = splitmix64(a) ^ rotl(splitmix64(b), 31);
  for (auto& w : s_) w = splitmix64(x);
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

std::uint64_t RngStream::next_u64() {
  // xoshiro256++
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double RngStream::next_double() {
  // 52 random bits plus a half-ulp offset: range [2^-53, 1 - 2^-53].
  return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
}

double RngStream::next_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  double u, v, s;
  do {
    u = 2.0 * next_double() - 1.0;
    v = 2.0 * next_double() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double m = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * m;
  has_spare_ = true;
  return u * m;
}

double RngStream::next_exponential() { return -std::log(next_double()); }

double gamma_variate(RngStream& rng, double shape) {
  if (!(shape > 0.0)) throw std::domain_error("gamma_variate: shape must be > 0");
  if (shape < 1.0) {
    const double boost = std::pow(rng.next_double(), 1.0 / shape);
    return gamma_variate(rng, shape + 1.0) * boost;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.next_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.next_double();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

namespace {

std::uint64_t poisson_small(RngStream& rng, double mean) {
  const double limit = std::exp(-mean);
  double prod = 1.0;
  std::uint64_t k = 0;
  for (;;) {
    prod *= rng.next_double();
    if (prod <= limit) return k;
    ++k;
  }
}

// Hormann's PTRS transformed-rejection sampler, valid for mean >= 10.
std::uint64_t poisson_ptrs(RngStream& rng, double mean) {
  const double log_mean = std::log(mean);
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = rng.next_double() - 0.5;
    const double v = rng.next_double();
    const double us = 0.5 - std::fabs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
    const double rhs = kf * log_mean - mean - std::lgamma(kf + 1.0);
    if (lhs <= rhs) return static_cast<std::uint64_t>(kf);
  }
}

}  // namespace

std::uint64_t poisson_variate(RngStream& rng, double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean))
    throw std::domain_error("poisson_variate: mean must be finite and >= 0");
  if (mean == 0.0) return 0;
  if (mean < 10.0) return poisson_small(rng, mean);
  return poisson_ptrs(rng, mean);
}

}  // namespace isub
