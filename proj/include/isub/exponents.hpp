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

#ifndef ISUB_EXPONENTS_HPP_
#define ISUB_EXPONENTS_HPP_

#include <complex>
#include <stdexcept>

#include "isub/spec.hpp"

namespace isub {

// Requested value lies outside the range of the exponent derivative; the
// caller is in the trivial-bound regime and must clamp instead of inverting.
class OutOfDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Laplace exponent: E exp(-u T(t)) = exp(-t * laplace_exponent(u)).
// Closed forms per family:
//   stable      u^alpha
//   tempered    (u+lambda)^alpha - lambda^alpha
//   ig          delta*(sqrt(2u+gamma^2) - gamma)
//   gamma       a*log(1 + u/b)
// Strictly increasing and concave on (0,inf), exactly 0 at u = 0.
double laplace_exponent(const SubordinatorSpec& spec, double u);

// Principal-branch extension off the real axis (used by transform inversion).
std::complex<double> laplace_exponent(const SubordinatorSpec& spec, std::complex<double> s);

// First derivative; strictly decreasing and positive on (0,inf).
double laplace_exponent_derivative(const SubordinatorSpec& spec, double u);

// sup of the derivative on (0,inf), i.e. its limit at 0+.  Equals the mean
// of T(1).  May be +inf (stable always; tempered with lambda=0; ig with
// gamma=0).
double derivative_sup(const SubordinatorSpec& spec);

// Unique u > 0 with derivative(u) = v, by closed form.
// Throws OutOfDomainError when v >= derivative_sup, std::domain_error when
// v <= 0.
double invert_exponent_derivative(const SubordinatorSpec& spec, double v);

// Bisection fallback over an exponentially expanded bracket; cross-check
// oracle for the closed forms.  Same domain contract.
double invert_exponent_derivative_numeric(const SubordinatorSpec& spec, double v);

// Bundles a spec with the cached derivative sup so bound code can detect the
// trivial regime without exception-driven control flow.
struct LaplaceTriple {
  SubordinatorSpec spec;
  double v_sup = 0.0;

  double value(double u) const { return laplace_exponent(spec, u); }
  double derivative(double u) const { return laplace_exponent_derivative(spec, u); }
  double derivative_inverse(double v) const { return invert_exponent_derivative(spec, v); }
};

LaplaceTriple make_laplace_triple(const SubordinatorSpec& spec);

}  // namespace isub

#endif  // ISUB_EXPONENTS_HPP_
