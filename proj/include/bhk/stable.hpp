/* Copyright 2026 the bhk authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BHK_STABLE_HPP
#define BHK_STABLE_HPP

#include <vector>

#include "bhk/common.hpp"

namespace bhk {

/// Density sigma_t^{(beta)}(tau) of the one-sided beta-stable subordinator,
/// normalized by the Laplace transform
///   int_0^inf e^{-tau lambda} sigma_t^{(beta)}(tau) dtau = e^{-t lambda^beta}.
/// Computed from sigma_1 through the exact scaling
///   sigma_t(tau) = t^{-1/beta} sigma_1(tau t^{-1/beta}).
double stable_density(double beta, double t, double tau);

/// sigma_1^{(beta)}(x).  Dispatches between the beta = 1/2 closed form, the
/// convergent large-x power series, the Pollard branch-cut integral, and a
/// saddle-point Bromwich contour for the double-exponentially small left tail.
double stable_density_1(double beta, double x);

/// log sigma_1^{(beta)}(x); usable far below the double underflow threshold.
double stable_log_density_1(double beta, double x);

/// Spline-backed evaluator of sigma_1^{(beta)}.  The stored quantity is the
/// slowly varying correction to the saddle-point form, so the interpolation
/// stays relative-accurate down to the underflow threshold.  Used by the
/// subordination quadrature; the rigorous paths above remain the oracle.
class stable_table {
public:
    explicit stable_table(double beta);
    double beta() const { return beta_; }
    double density(double x) const;
    double rel_err() const { return 4e-9; }

private:
    double saddle_log_prefactor(double x) const;
    double beta_;
    double a_const_;     // (1-beta) beta^{beta/(1-beta)}
    double x_left_, x_right_;
    double v_lo_, dv_;
    std::vector<double> h_, m_;  // spline values and second derivatives
};

}  // namespace bhk

#endif
