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

#ifndef ISUB_DENSITY_HPP_
#define ISUB_DENSITY_HPP_

#include <complex>
#include <optional>
#include <stdexcept>

#include "isub/spec.hpp"

namespace isub {

// Numerical transform inversion diverged (blown-up or non-finite terms).
class InversionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InversionMethod { Talbot, GaverStehfest };

// Fixed-Talbot is the default (smooth, completely monotone integrands);
// Gaver-Stehfest is the cross-check with an independent failure mode.
// Term limits reflect double precision.  18 Gaver-Stehfest terms is the
// sweet spot for first-passage transforms: 14 leaves ~2e-5 truncation
// error, while past 18 weight cancellation eats the gain.
struct LTInversionConfig {
  InversionMethod method = InversionMethod::Talbot;
  int terms = 32;

  static LTInversionConfig talbot(int terms = 32);
  static LTInversionConfig gaver_stehfest(int terms = 18);
};

void validate(const LTInversionConfig& cfg);

// Laplace transform (in the time variable) of the first-passage density at
// level x: psi(s) exp(-x psi(s)) / s, principal branch off the real axis.
// s = 0 is a domain error.
std::complex<double> density_lt(const SubordinatorSpec& spec, double x,
                                std::complex<double> s);
double density_lt(const SubordinatorSpec& spec, double x, double s);

struct DensityValue {
  double value = 0.0;
  // Evaluations with t < 1e-3 or x < 1e-3 sit in an inversion boundary
  // layer and are outside the accuracy contract.
  bool low_confidence = false;
};

// First-passage density q(x, t) by numerical inversion of density_lt in the
// s variable.  x > 0, t > 0.
DensityValue inverse_subordinator_density(const SubordinatorSpec& spec, double x, double t,
                                          const LTInversionConfig& cfg = {});

// Erlang density of order n: lambda e^(-lambda t) (lambda t)^(n-1) / (n-1)!.
double erlang_pdf(int n, double lambda, double t);

// Closed-form marginal density of T(t) where one is available (ig, gamma);
// stable and tempered marginals are served by Monte Carlo histograms only.
std::optional<double> family_pdf(const SubordinatorSpec& spec, double t, double y);

// Variant inverse-Gaussian prefactor delta*t/(2*pi) that circulates in
// place of the normalized delta*t/sqrt(2*pi*y^3); kept read-only for
// comparison, does not integrate to one.
double ig_pdf_variant_constant(const SubordinatorSpec& spec, double t, double y);

}  // namespace isub

#endif  // ISUB_DENSITY_HPP_
