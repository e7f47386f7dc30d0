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

#ifndef ISUB_RNG_HPP_
#define ISUB_RNG_HPP_

#include <cstdint>

namespace isub {

// Reproducible random stream.  (seed, stream_id) fully determines the output
// sequence; distinct stream_ids give statistically independent sequences, so
// replicate batches can be fanned out across workers and merged in stream
// order without any scheduling dependence.
//
// Generator: xoshiro256++ with SplitMix64 state derivation from the
// (seed, stream_id) pair.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();

  // Uniform on the open interval (0,1); never returns an endpoint, so it is
  // safe under log().
  double next_double();

  // Standard normal via Marsaglia polar (second variate cached).
  double next_normal();

  // Exponential(1), strictly positive.
  double next_exponential();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t s_[4];
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

// Gamma(shape, rate 1) via Marsaglia-Tsang, with the power boost for
// shape < 1.  shape must be > 0.
double gamma_variate(RngStream& rng, double shape);

// Poisson(mean): product-of-uniforms inversion for small means, transformed
// rejection (PTRS) for mean >= 10.  mean must be >= 0 and finite.
std::uint64_t poisson_variate(RngStream& rng, double mean);

}  // namespace isub

#endif  // ISUB_RNG_HPP_
