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

#ifndef BHK_SPECIAL_HPP
#define BHK_SPECIAL_HPP

#include "bhk/common.hpp"

namespace bhk {

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// 1/Gamma(x), entire: exactly 0 at the poles x = 0, -1, -2, ...
double rgamma(double x);

/// sign(Gamma(x)) and log|Gamma(x)| for non-pole x; sign is 0 at poles.
struct signed_log_gamma {
    double log_abs;
    int sign;
};
signed_log_gamma gamma_signed(double x);

/// sin(pi x) and cos(pi x) with exact argument reduction at (half-)integers.
double sin_pi(double x);
double cos_pi(double x);

/// Scaled modified Bessel function e^{-x} I_nu(x).
/// Supported for nu >= -1 (the Bessel kernel uses indices zeta - 1/2 with
/// zeta > -1/2) and x >= 0.  For nu in (-1,0) and x = 0 the limit is +inf.
double bessel_i_scaled(double nu, double x);

/// Bessel function of the first kind J_nu(x), nu >= -1/2, x >= 0.
double bessel_j(double nu, double x);

/// Regularized Gauss hypergeometric 2F1(a,b;c;z)/Gamma(c) for z in [0,1).
/// Entire in c; stays accurate as z -> 1^- (connection formula when
/// c-a-b is not close to an integer, Euler-transformed summation otherwise).
double hyp2f1_regularized(double a, double b, double c, double z);

}  // namespace bhk

#endif
