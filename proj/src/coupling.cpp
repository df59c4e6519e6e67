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

#include "bhk/coupling.hpp"

#include <cmath>

#include "bhk/special.hpp"

namespace bhk {

double coupling_psi(double zeta, double alpha, double eta) {
    require(zeta > -0.5, "coupling_psi: requires zeta > -1/2");
    require(alpha > 0.0 && alpha < 2.0, "coupling_psi: requires alpha in (0,2)");
    require(alpha < 2.0 * zeta + 1.0, "coupling_psi: requires alpha < 2 zeta + 1");
    require(eta > -alpha && eta < 2.0 * zeta + 1.0,
            "coupling_psi: requires eta in (-alpha, 2 zeta + 1)");
    double a1 = 0.5 * (2.0 * zeta + 1.0 - eta);  // > 0 on the domain
    double a2 = 0.5 * (alpha + eta);             // > 0 on the domain
    double rg1 = rgamma(0.5 * eta);
    double rg2 = rgamma(0.5 * (2.0 * zeta + 1.0 - eta - alpha));
    if (rg1 == 0.0 || rg2 == 0.0) return 0.0;
    double lg = alpha * std::log(2.0) + std::lgamma(a1) + std::lgamma(a2);
    return std::exp(lg) * rg1 * rg2;
}

double coupling_phi(double d_ell, double alpha, double eta) {
    require(d_ell > 0.0, "coupling_phi: requires d_ell > 0");
    require(alpha > 0.0 && alpha <= 2.0 && alpha < d_ell,
            "coupling_phi: requires alpha in (0,2] and alpha < d_ell");
    if (alpha == 2.0) return eta * (d_ell - eta - 2.0);
    require(eta > -alpha && eta < d_ell,
            "coupling_phi: requires eta in (-alpha, d_ell)");
    double a1 = 0.5 * (eta + alpha);
    double a2 = 0.5 * (d_ell - eta);
    double rg1 = rgamma(0.5 * eta);
    double rg2 = rgamma(0.5 * (d_ell - eta - alpha));
    if (rg1 == 0.0 || rg2 == 0.0) return 0.0;
    double lg = alpha * std::log(2.0) + std::lgamma(a1) + std::lgamma(a2);
    return std::exp(lg) * rg1 * rg2;
}

double kappa_crit(double d_ell, double alpha) {
    require(d_ell > 0.0, "kappa_crit: requires d_ell > 0");
    require(alpha > 0.0 && alpha <= 2.0 && alpha < d_ell,
            "kappa_crit: requires alpha in (0,2] and alpha < d_ell");
    if (alpha == 2.0) return 0.25 * (d_ell - 2.0) * (d_ell - 2.0);
    return std::exp(alpha * std::log(2.0) + 2.0 * std::lgamma(0.25 * (d_ell + alpha)) -
                    2.0 * std::lgamma(0.25 * (d_ell - alpha)));
}

namespace {

double coupling_dispatch(double zeta, double alpha, double eta) {
    if (alpha == 2.0) return coupling_phi(2.0 * zeta + 1.0, 2.0, eta);
    return coupling_psi(zeta, alpha, eta);
}

}  // namespace

double eta_from_kappa(double zeta, double alpha, double kappa) {
    require(zeta > -0.5, "eta_from_kappa: requires zeta > -1/2");
    require(alpha > 0.0 && alpha <= 2.0 && alpha < 2.0 * zeta + 1.0,
            "eta_from_kappa: requires alpha in (0,2] and alpha < 2 zeta + 1");
    double kc = kappa_crit(2.0 * zeta + 1.0, alpha);
    require(kappa <= kc * (1.0 + 1e-12) + 1e-300,
            "eta_from_kappa: kappa exceeds the critical coupling (form unbounded below)");
    double eta_c = 0.5 * (2.0 * zeta + 1.0 - alpha);
    if (kappa >= kc * (1.0 - 1e-14)) return eta_c;
    if (kappa == 0.0) return 0.0;

    // Psi is strictly increasing on (-S, eta_c]; bracket downward from eta_c.
    double hi = eta_c;
    double lo;
    if (alpha < 2.0) {
        lo = eta_c - 0.5;
        while (lo > -alpha && coupling_dispatch(zeta, alpha, lo) > kappa)
            lo = -alpha + 0.5 * (lo + alpha);
        if (lo <= -alpha) lo = -alpha + 1e-14 * std::max(1.0, alpha);
    } else {
        double step = 1.0;
        lo = eta_c - step;
        while (coupling_dispatch(zeta, alpha, lo) > kappa) {
            step *= 2.0;
            lo = eta_c - step;
        }
    }
    // bisection, then a few secant polish steps
    double flo = coupling_dispatch(zeta, alpha, lo) - kappa;
    double fhi = kc - kappa;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double fm = coupling_dispatch(zeta, alpha, mid) - kappa;
        if (fm <= 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
        if (std::abs(fm) <= 1e-13 * (1.0 + std::abs(kappa))) break;
        (void)fhi;
    }
    double eta = (std::abs(flo) <= std::abs(fhi)) ? lo : hi;
    if (std::abs(coupling_dispatch(zeta, alpha, eta) - kappa) >
        1e-12 * (1.0 + std::abs(kappa))) {
        double mid = 0.5 * (lo + hi);
        if (std::abs(coupling_dispatch(zeta, alpha, mid) - kappa) <
            std::abs(coupling_dispatch(zeta, alpha, eta) - kappa))
            eta = mid;
    }
    return eta;
}

CouplingParams CouplingParams::make(double zeta, double alpha, double eta) {
    require(zeta > -0.5, "CouplingParams: requires zeta > -1/2");
    require(alpha > 0.0 && alpha <= 2.0, "CouplingParams: requires alpha in (0,2]");
    require(alpha < 2.0 * zeta + 1.0, "CouplingParams: requires alpha < 2 zeta + 1");
    double eta_c = 0.5 * (2.0 * zeta + 1.0 - alpha);
    if (alpha < 2.0)
        require(eta > -alpha && eta <= eta_c,
                "CouplingParams: requires eta in (-alpha, (2 zeta+1-alpha)/2]");
    else
        require(eta <= eta_c, "CouplingParams: requires eta <= (2 zeta - 1)/2");
    CouplingParams p;
    p.zeta = zeta;
    p.alpha = alpha;
    p.eta = eta;
    p.kappa = coupling_dispatch(zeta, alpha, eta);
    return p;
}

CouplingParams CouplingParams::from_kappa(double zeta, double alpha, double kappa) {
    double eta = eta_from_kappa(zeta, alpha, kappa);
    CouplingParams p = make(zeta, alpha, eta);
    p.kappa = kappa;  // keep the caller's kappa exactly
    return p;
}

ChannelParams ChannelParams::make(int d, int ell) {
    require(d >= 1, "ChannelParams: requires d >= 1");
    if (d == 1)
        require(ell == 0 || ell == 1, "ChannelParams: d = 1 admits ell in {0, 1}");
    else
        require(ell >= 0, "ChannelParams: requires ell >= 0");
    ChannelParams c;
    c.d = d;
    c.ell = ell;
    c.d_ell = d + 2 * ell;
    c.zeta = 0.5 * (c.d_ell - 1);
    return c;
}

}  // namespace bhk
