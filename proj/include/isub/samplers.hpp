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

#ifndef ISUB_SAMPLERS_HPP_
#define ISUB_SAMPLERS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "isub/rng.hpp"
#include "isub/spec.hpp"

namespace isub {

// Discretized nondecreasing trajectory on a uniform grid in the
// subordinator's own argument: values[k] = T(k * dt).
struct SamplePath {
  double dt = 0.0;
  std::vector<double> values;

  double horizon() const { return dt * static_cast<double>(values.size() - 1); }
};

// First-passage bracket: E(t) lies in [lower, upper] given the path.
// exceeded is false when the path never crossed the level (caller must
// extend the horizon); then lower = upper = horizon.
struct PassageBracket {
  double lower = 0.0;
  double upper = 0.0;
  bool exceeded = false;

  double midpoint() const { return 0.5 * (lower + upper); }
};

// One draw of the unit positively skewed strictly stable variate S with
// E exp(-u S) = exp(-u^alpha), via the trigonometric construction
// (uniform angle + unit exponential).  alpha in (0,1) strictly.
double sample_stable_unit(double alpha, RngStream& rng);

// One increment T(dt), exact per family:
//   stable    dt^(1/alpha) * S
//   tempered  rejection: stable proposal accepted with prob exp(-lambda s)
//   ig        normal-transform method; gamma=0 falls back to the scaled
//             1/2-stable draw matched to the exponent delta*sqrt(2u)
//   gamma     gamma variate with shape a*dt and rate b
double sample_increment(const SubordinatorSpec& spec, double dt, RngStream& rng);

// Cumulative sum of i.i.d. increments; values[0] = 0.  Refuses grids longer
// than 1e8 entries and tempered-stable steps with lambda^alpha * dt > 5
// (rejection cost blows up).
SamplePath simulate_path(const SubordinatorSpec& spec, double horizon, double dt,
                         RngStream& rng);

// Smallest grid cell whose value exceeds t.  Never throws: non-crossing is
// reported through the flag; t < 0 yields the degenerate bracket [0,0].
PassageBracket first_passage(const SamplePath& path, double t);

// Exact draw of the inverse stable subordinator at time t, via
// E_alpha(t) = (t/S)^alpha with S the unit stable variate.
double sample_inverse_stable_exact(double alpha, double t, RngStream& rng);

// Bracket draw of the first passage for any family: simulates a path with
// geometric horizon doubling until crossing.  The reported point sample is
// the bracket midpoint.
PassageBracket sample_inverse_subordinator(const SubordinatorSpec& spec, double t,
                                           double dt, RngStream& rng);

// Nested inverse stable draws: innermost index is applied to t first.
double sample_composed_iss(std::span<const double> alphas, double t, RngStream& rng);

// Exact draw of T(t) for stable/ig/gamma clocks; tempered clocks are chunked
// so each rejection stays cheap (dt_hint caps the chunk width).
double sample_subordinator_at(const SubordinatorSpec& spec, double t, double dt_hint,
                              RngStream& rng);

// Inverse stable subordinator run on the random clock T(t).
double sample_time_changed_iss(double alpha, const SubordinatorSpec& outer, double t,
                               double dt, RngStream& rng);

// Renewal count: number of partial waiting-time sums <= t.
std::uint64_t sample_renewal_count(const WaitingTimeSpec& waiting, double t, RngStream& rng);

// Poisson process on the inverse stable clock.  alpha = 1 is admitted as
// the identity time change (plain Poisson), alpha in (0,1) otherwise.
std::uint64_t sample_fractional_poisson(double lambda, double alpha, double t,
                                        RngStream& rng);

}  // namespace isub

#endif  // ISUB_SAMPLERS_HPP_
