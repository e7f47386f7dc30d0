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

#ifndef ISUB_SPEC_HPP_
#define ISUB_SPEC_HPP_

#include <cstdint>
#include <string>

namespace isub {

// Driftless subordinator families supported by the toolkit.
enum class Family { Stable, TemperedStable, InverseGaussian, Gamma };

// Tagged parameter record identifying one subordinator.
//
//   Stable           p1 = alpha in (0,1)
//   TemperedStable   p1 = alpha in (0,1),  p2 = lambda >= 0 (tempering rate)
//   InverseGaussian  p1 = delta > 0,       p2 = gamma >= 0
//   Gamma            p1 = a > 0 (shape rate), p2 = b > 0 (rate)
//
// lambda = 0 reduces TemperedStable to Stable exactly; gamma = 0 gives the
// totally skewed 1/2-stable special case of the inverse Gaussian clock.
struct SubordinatorSpec {
  Family family = Family::Stable;
  double p1 = 0.5;
  double p2 = 0.0;

  static SubordinatorSpec stable(double alpha);
  static SubordinatorSpec tempered_stable(double alpha, double lambda);
  static SubordinatorSpec inverse_gaussian(double delta, double gamma);
  static SubordinatorSpec gamma(double a, double b);

  double alpha() const { return p1; }       // Stable / TemperedStable
  double tempering() const { return p2; }   // TemperedStable
  double delta() const { return p1; }       // InverseGaussian
  double ig_gamma() const { return p2; }    // InverseGaussian
  double shape_rate() const { return p1; }  // Gamma
  double rate() const { return p2; }        // Gamma

  bool operator==(const SubordinatorSpec&) const = default;
};

// Throws std::invalid_argument when parameters are out of range.
void validate(const SubordinatorSpec& spec);

const char* family_name(Family f);

// Serialization: JSON object {"family": "stable"|"tempered"|"ig"|"gamma",
// "params": {...}} and the CLI mini-syntax "family:p1[,p2]" both parse to
// the same record.  parse_spec accepts either form.
std::string to_json_string(const SubordinatorSpec& spec);
SubordinatorSpec spec_from_json_string(const std::string& text);
SubordinatorSpec spec_from_mini(const std::string& text);
SubordinatorSpec parse_spec(const std::string& text);
std::string to_mini(const SubordinatorSpec& spec);

// Renewal waiting-time laws (positive support).
struct WaitingTimeSpec {
  enum class Kind { Exponential, Deterministic, Gamma };
  Kind kind = Kind::Exponential;
  double p1 = 1.0;  // rate | value | shape
  double p2 = 0.0;  // unused | unused | scale

  static WaitingTimeSpec exponential(double rate);
  static WaitingTimeSpec deterministic(double value);
  static WaitingTimeSpec gamma(double shape, double scale);
};

void validate(const WaitingTimeSpec& w);

// Mini-syntax "exp:rate" | "det:value" | "gamma:shape,scale".
WaitingTimeSpec parse_waiting(const std::string& text);
std::string to_mini(const WaitingTimeSpec& w);

}  // namespace isub

#endif  // ISUB_SPEC_HPP_
