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

#ifndef BHK_COUPLING_HPP
#define BHK_COUPLING_HPP

#include "bhk/common.hpp"

namespace bhk {

/// Coupling map Psi_zeta(eta) = 2^alpha Gamma((2 zeta+1-eta)/2) Gamma((alpha+eta)/2)
///   / (Gamma(eta/2) Gamma((2 zeta+1-eta-alpha)/2)),
/// evaluated through reciprocal Gamma so Psi(0) = 0 exactly.
/// Domain: zeta > -1/2, alpha in (0,2) with alpha < 2 zeta + 1,
/// eta in (-alpha, 2 zeta + 1).
double coupling_psi(double zeta, double alpha, double eta);

/// Coupling map Phi_{d_ell}^{(alpha)}(eta) in the effective-dimension
/// parameterization; for alpha = 2 this is exactly eta (d_ell - eta - 2).
/// Domain: alpha in (0,2] with alpha < d_ell, eta in (-S, d_ell - alpha + S)
/// where S = alpha for alpha < 2 and S = inf for alpha = 2.
double coupling_phi(double d_ell, double alpha, double eta);

/// Critical coupling kappa_c^{(alpha)}(d_ell) = 2^alpha
///   Gamma((d_ell+alpha)/4)^2 / Gamma((d_ell-alpha)/4)^2;
/// equals coupling_phi at eta = (d_ell - alpha)/2.
double kappa_crit(double d_ell, double alpha);

/// The unique eta <= (2 zeta + 1 - alpha)/2 with Psi_zeta(eta) = kappa
/// (Phi for alpha = 2), by monotone root bracketing.
/// Requires kappa <= kappa_crit(2 zeta + 1, alpha).
double eta_from_kappa(double zeta, double alpha, double kappa);

/// Upper bound S of the admissible eta interval (-S, (2 zeta+1-alpha)/2].
inline double eta_lower_span(double alpha) { return alpha < 2.0 ? alpha : inf; }

/// (zeta, alpha, eta) triple with the derived coupling kappa.
struct CouplingParams {
    double zeta;
    double alpha;
    double eta;
    double kappa;

    /// Build from (zeta, alpha, eta); validates all invariants.
    static CouplingParams make(double zeta, double alpha, double eta);
    /// Build from (zeta, alpha, kappa); eta recovered by eta_from_kappa.
    static CouplingParams from_kappa(double zeta, double alpha, double kappa);

    double eta_critical() const { return 0.5 * (2.0 * zeta + 1.0 - alpha); }
};

/// Physical channel (d, ell) with derived effective dimension and index.
struct ChannelParams {
    int d;
    int ell;
    int d_ell;
    double zeta;

    static ChannelParams make(int d, int ell);
};

/// Numerical budgets shared by quadrature- and series-based evaluators.
struct AccuracyBudget {
    double rel_tol = 1e-8;
    double abs_tol = 0.0;
    int max_subdivisions = 800;
    int series_terms_max = 200000;

    void validate() const {
        require(rel_tol > 0.0, "AccuracyBudget: rel_tol must be > 0");
        require(abs_tol >= 0.0, "AccuracyBudget: abs_tol must be >= 0");
        require(max_subdivisions >= 1 && series_terms_max >= 1,
                "AccuracyBudget: caps must be >= 1");
    }
};

}  // namespace bhk

#endif
