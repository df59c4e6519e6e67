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

#ifndef BHK_KERNELS_HPP
#define BHK_KERNELS_HPP

#include <memory>
#include <string>

#include "bhk/coupling.hpp"
#include "bhk/stable.hpp"

namespace bhk {

/// Space-time evaluation point (t, r, s), all strictly positive.
struct EvalPoint {
    double t;
    double r;
    double s;
    static EvalPoint make(double t, double r, double s) {
        require(t > 0.0 && std::isfinite(t), "EvalPoint: requires t > 0");
        require(r > 0.0 && std::isfinite(r), "EvalPoint: requires r > 0");
        require(s > 0.0 && std::isfinite(s), "EvalPoint: requires s > 0");
        return EvalPoint{t, r, s};
    }
};

enum class Method {
    closed_alpha2,
    closed_alpha1,
    subordination,
    spectral,
    series,
    picard,
};

const char* method_name(Method m);

struct EvalResult {
    double value = 0.0;
    double err_est = 0.0;
    Method method = Method::closed_alpha2;
};

/// Two-sided comparison bounds.  For alpha < 2 lower and upper hold the same
/// comparison function (constants are fitted by the certifier); for alpha = 2
/// they carry distinct exponential constants.
struct Envelope {
    double lower = 0.0;
    double upper = 0.0;
    double exp_const_lower = 0.0;
    double exp_const_upper = 0.0;
};

/// Bessel heat kernel
///   p_zeta^{(2)}(t,r,s) = (rs)^{1/2-zeta}/(2t) exp(-(r^2+s^2)/(4t))
///                         I_{zeta-1/2}(rs/(2t)),
/// evaluated overflow-free through the scaled Bessel function; the small
/// rs/(2t) regime goes through a combined series so the (rs)^{1/2-zeta}
/// prefactor never meets a diverging I_{zeta-1/2} alone.
EvalResult bessel_heat_2(double zeta, const EvalPoint& p);

/// Closed form of the alpha = 1 (Cauchy subordinated) kernel; the
/// zeta in {0, 1} rational expressions are used as fast paths.
EvalResult cauchy_heat_closed(double zeta, const EvalPoint& p);

/// Subordination quadrature
///   p_zeta^{(alpha)}(t,r,s) = int_0^inf p_zeta^{(2)}(tau,r,s)
///                             sigma_t^{(alpha/2)}(tau) dtau
/// for alpha in (0,2), reduced to t = 1 by scaling.
EvalResult subordinated_heat(double zeta, double alpha, const EvalPoint& p,
                             const AccuracyBudget& budget = {},
                             const stable_table* table = nullptr);

/// Independent Hankel-spectral oracle
///   p_zeta^{(alpha)}(t,r,s) = (rs)^{1/2-zeta} int_0^inf k e^{-t k^alpha}
///                             J_{zeta-1/2}(kr) J_{zeta-1/2}(ks) dk,
/// with oscillation-aware segmentation.  zeta >= 0.
EvalResult spectral_heat(double zeta, double alpha, const EvalPoint& p,
                         const AccuracyBudget& budget = {});

/// Levy kernel nu_zeta(r,s) of the subordinated Bessel process, alpha in
/// (0,2), r != s.  Near the diagonal (|r-s|/(r+s) below the switch) the
/// singular comparison form with a two-term calibration in u^2 is used.
double levy_kernel(double zeta, double alpha, double r, double s);

/// Comparison-function envelope of the free kernel.
/// alpha < 2: t / (|r-s|^{1+alpha} (r+s)^{2 zeta}
///                 + t^{(1+alpha)/alpha} (t^{1/alpha}+r+s)^{2 zeta});
/// alpha = 2: t^{-1/2} exp(-(r-s)^2/(c t)) / (rs+t)^{zeta} with distinct c.
Envelope free_envelope(double zeta, double alpha, const EvalPoint& p,
                       double c_lower = 4.0, double c_upper = 8.0);

/// Unified free-kernel evaluator: closed form for alpha in {1, 2},
/// table-backed subordination otherwise.  Copyable, cheap to pass around;
/// the stable table is shared.
class FreeKernel {
public:
    FreeKernel(double zeta, double alpha, AccuracyBudget budget = {});

    double zeta() const { return zeta_; }
    double alpha() const { return alpha_; }
    const AccuracyBudget& budget() const { return budget_; }

    EvalResult eval(double t, double r, double s) const;
    double operator()(double t, double r, double s) const { return eval(t, r, s).value; }

    /// Force a specific evaluation path (subordination / spectral / closed).
    EvalResult eval_method(Method m, double t, double r, double s) const;

private:
    double zeta_;
    double alpha_;
    AccuracyBudget budget_;
    std::shared_ptr<const stable_table> table_;
};

/// Shared, lazily built sigma_1^{(alpha/2)} table for the given alpha.
std::shared_ptr<const stable_table> shared_stable_table(double alpha);

/// int_0^inf p_zeta^{(alpha)}(t,r,s) s^{2 zeta - delta} ds with analytic
/// power-law tail correction; delta must satisfy 2 zeta - delta > -1 and
/// delta > -alpha.  delta = 0 gives the normalization mass.
double radial_weighted_integral(const FreeKernel& k, double t, double r, double delta,
                                double rel_tol = 1e-9);

}  // namespace bhk

#endif
