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

#include "bhk/special.hpp"

#include <cmath>
#include <cstdlib>

#include "bhk/quad.hpp"

namespace bhk {

double log_gamma(double x) {
    require(std::isfinite(x) && x > 0.0, "log_gamma: requires finite x > 0");
    return std::lgamma(x);
}

double sin_pi(double x) {
    // reduce to |r| <= 1/2 so that integer arguments give exactly 0
    double r = std::remainder(x, 2.0);  // r in [-1, 1]
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    return std::sin(pi * r);
}

double cos_pi(double x) {
    double r = std::remainder(x, 2.0);
    double ar = std::abs(r);
    if (ar <= 0.5) return std::cos(pi * r);
    return -std::cos(pi * (1.0 - ar));
}

double rgamma(double x) {
    if (!std::isfinite(x)) {
        if (x > 0.0) return 0.0;  // Gamma(+inf) = inf
        throw domain_error("rgamma: non-finite argument");
    }
    if (x >= 0.5) {
        double lg = std::lgamma(x);
        if (lg > 709.0) return 0.0;
        return std::exp(-lg);
    }
    // reflection: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi; vanishes at poles
    double s = sin_pi(x);
    if (s == 0.0) return 0.0;
    double lg = std::lgamma(1.0 - x);
    double mag = std::log(std::abs(s) / pi) + lg;
    if (mag > 709.0) return s > 0.0 ? inf : -inf;
    return std::copysign(std::exp(mag), s);
}

signed_log_gamma gamma_signed(double x) {
    signed_log_gamma r;
    if (x > 0.0) {
        r.log_abs = std::lgamma(x);
        r.sign = 1;
        return r;
    }
    double s = sin_pi(x);
    if (s == 0.0) {
        r.log_abs = inf;
        r.sign = 0;
        return r;
    }
    // |Gamma(x)| = pi / (|sin(pi x)| Gamma(1-x))
    r.log_abs = std::log(pi / std::abs(s)) - std::lgamma(1.0 - x);
    r.sign = s > 0.0 ? 1 : -1;
    return r;
}

// ---------------------------------------------------------------------------
// Modified Bessel I, scaled
// ---------------------------------------------------------------------------

namespace {

// power series for e^{-x} I_nu(x); all terms positive, no cancellation
double bessel_i_scaled_series(double nu, double x) {
    double q = 0.25 * x * x;
    double sum = 1.0;
    double term = 1.0;
    for (int k = 0; k < 2000; ++k) {
        term *= q / ((k + 1.0) * (nu + k + 1.0));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    double lead = nu * std::log(0.5 * x) - x;
    return rgamma(nu + 1.0) * sum * std::exp(lead);
}

// Hankel asymptotic expansion of e^{-x} I_nu(x) for large x.
// The e^{-2x} reflected term is dropped; negligible where this is called.
double bessel_i_scaled_asymptotic(double nu, double x) {
    double mu = 4.0 * nu * nu;
    double sum = 1.0;
    double term = 1.0;
    double prev = inf;
    for (int k = 1; k <= 40; ++k) {
        double num = mu - (2.0 * k - 1.0) * (2.0 * k - 1.0);
        term *= -num / (8.0 * x * k);
        if (std::abs(term) >= prev) break;  // asymptotic series started diverging
        sum += term;
        prev = std::abs(term);
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum / std::sqrt(2.0 * pi * x);
}

}  // namespace

double bessel_i_scaled(double nu, double x) {
    require(nu >= -1.0, "bessel_i_scaled: order must be >= -1");
    require(std::isfinite(x) && x >= 0.0, "bessel_i_scaled: requires x >= 0");
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        return inf;  // (x/2)^nu / Gamma(nu+1) -> inf for nu in (-1,0)
    }
    // half-integer fast paths used by the zeta = 0, 1 channels
    if (nu == -0.5) return std::sqrt(2.0 / (pi * x)) * 0.5 * (1.0 + std::exp(-2.0 * x));
    if (nu == 0.5) return std::sqrt(2.0 / (pi * x)) * 0.5 * (1.0 - std::exp(-2.0 * x));
    if (x < 35.0 || (x < 600.0 && x < 0.5 * nu * nu)) return bessel_i_scaled_series(nu, x);
    return bessel_i_scaled_asymptotic(nu, x);
}

// ---------------------------------------------------------------------------
// Bessel J
// ---------------------------------------------------------------------------

namespace {

double bessel_j_series(double nu, double x) {
    double q = -0.25 * x * x;
    double sum = 1.0;
    double term = 1.0;
    for (int k = 0; k < 400; ++k) {
        term *= q / ((k + 1.0) * (nu + k + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) && k > 3) break;
    }
    return rgamma(nu + 1.0) * sum * std::exp(nu * std::log(0.5 * x));
}

// Hankel expansion: J_nu(x) = sqrt(2/(pi x)) [P cos w - Q sin w],
// w = x - nu pi/2 - pi/4.
double bessel_j_asymptotic(double nu, double x) {
    double mu = 4.0 * nu * nu;
    double p = 1.0, q = 0.0;
    double term = 1.0;
    double prev = inf;
    for (int k = 1; k <= 40; ++k) {
        double num = mu - (2.0 * k - 1.0) * (2.0 * k - 1.0);
        term *= num / (8.0 * x * k);
        if (std::abs(term) >= prev) break;
        prev = std::abs(term);
        switch (k % 4) {
            case 1: q += term; break;
            case 2: p -= term; break;
            case 3: q -= term; break;
            case 0: p += term; break;
        }
        if (std::abs(term) < 1e-17) break;
    }
    double w = x - (0.5 * nu + 0.25) * pi;
    return std::sqrt(2.0 / (pi * x)) * (p * std::cos(w) - q * std::sin(w));
}

// Integral representation for the gap between series and asymptotic ranges:
// J_nu(x) = (1/pi) int_0^pi cos(x sin t - nu t) dt
//           - sin(nu pi)/pi int_0^inf e^{-x sinh u - nu u} du.
double bessel_j_integral(double nu, double x) {
    int panels = std::max(8, static_cast<int>(x / 2.0) + 4);
    kahan_sum osc;
    for (int i = 0; i < panels; ++i) {
        double a = pi * i / panels;
        double b = pi * (i + 1) / panels;
        osc.add(gauss_legendre(
            [nu, x](double t) { return std::cos(x * std::sin(t) - nu * t); }, a, b, 12));
    }
    double result = osc.value() / pi;
    double snp = sin_pi(nu);
    if (snp != 0.0) {
        double umax = std::asinh(50.0 / x) + 1.0;
        double tail = gauss_legendre(
            [nu, x](double u) { return std::exp(-x * std::sinh(u) - nu * u); }, 0.0, umax, 48);
        result -= snp / pi * tail;
    }
    return result;
}

}  // namespace

double bessel_j(double nu, double x) {
    require(nu >= -0.5, "bessel_j: order must be >= -1/2");
    require(std::isfinite(x) && x >= 0.0, "bessel_j: requires x >= 0");
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        return inf;
    }
    if (nu == -0.5) return std::sqrt(2.0 / (pi * x)) * std::cos(x);
    if (nu == 0.5) return std::sqrt(2.0 / (pi * x)) * std::sin(x);
    if (x <= 7.0) return bessel_j_series(nu, x);
    double xasy = std::max(17.0, 1.2 * nu * nu);
    if (x >= xasy) return bessel_j_asymptotic(nu, x);
    return bessel_j_integral(nu, x);
}

// ---------------------------------------------------------------------------
// Regularized hypergeometric 2F1
// ---------------------------------------------------------------------------

namespace {

constexpr int hyp_max_terms = 2000000;

// direct regularized series sum_k (a)_k (b)_k z^k / (k! Gamma(c+k));
// valid for any real c (poles of Gamma(c) cancel).  The term itself is
// tracked recursively once k is past the pole region of Gamma(c+k), since
// the bare Pochhammer product overflows long before the terms do.
double hyp_series_regularized(double a, double b, double c, double z) {
    int kc = c >= 0.5 ? 0 : static_cast<int>(std::ceil(0.5 - c)) + 1;
    double poch = 1.0;  // (a)_k (b)_k z^k / k!, tracked only while k <= kc
    kahan_sum sum;
    double term = 0.0;
    for (int k = 0; k < hyp_max_terms; ++k) {
        if (k <= kc) {
            term = poch * rgamma(c + k);
            poch *= (a + k) * (b + k) / (k + 1.0) * z;
        } else {
            term *= (a + k - 1.0) * (b + k - 1.0) * z / (k * (c + k - 1.0));
        }
        sum.add(term);
        double s = std::abs(sum.value());
        // geometric tail bound with ratio -> z
        if (k > 2 && k > kc &&
            std::abs(term) * z / std::max(1e-300, 1.0 - z) < 1e-16 * std::max(s, 1e-300))
            break;
    }
    return sum.value();
}

// plain (non-regularized) series; c must stay away from non-positive integers
double hyp_series_plain(double a, double b, double c, double z) {
    double term = 1.0;
    kahan_sum sum;
    for (int k = 0; k < hyp_max_terms; ++k) {
        sum.add(term);
        double next = term * (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        if (std::abs(next) * std::abs(z) / std::max(1e-300, 1.0 - std::abs(z)) <
                1e-17 * std::abs(sum.value()) && k > 2) {
            sum.add(next);
            break;
        }
        term = next;
    }
    return sum.value();
}

// two-term z -> 1-z connection, regularized in c; needs s = c-a-b away
// from integers
double hyp_connection(double a, double b, double c, double z) {
    double s = c - a - b;
    double w = 1.0 - z;
    signed_log_gamma gs = gamma_signed(s);
    signed_log_gamma gms = gamma_signed(-s);
    double t1 = 0.0, t2 = 0.0;
    double rca = rgamma(c - a), rcb = rgamma(c - b);
    if (gs.sign != 0 && rca != 0.0 && rcb != 0.0) {
        double f1 = hyp_series_plain(a, b, 1.0 - s, w);
        t1 = gs.sign * std::exp(gs.log_abs) * rca * rcb * f1;
    }
    double ra = rgamma(a), rb = rgamma(b);
    if (gms.sign != 0 && ra != 0.0 && rb != 0.0) {
        double f2 = hyp_series_plain(c - a, c - b, 1.0 + s, w);
        t2 = gms.sign * std::exp(gms.log_abs + s * std::log(w)) * ra * rb * f2;
    }
    return t1 + t2;
}

}  // namespace

double hyp2f1_regularized(double a, double b, double c, double z) {
    require(std::isfinite(a) && std::isfinite(b) && std::isfinite(c),
            "hyp2f1_regularized: parameters must be finite");
    require(z >= 0.0 && z < 1.0, "hyp2f1_regularized: requires 0 <= z < 1");
    if (z == 0.0) return rgamma(c);
    if (z <= 0.75) return hyp_series_regularized(a, b, c, z);

    double s = c - a - b;
    double dist = std::abs(s - std::round(s));
    if (dist > 1e-3) {
        if (s > 0.0) return hyp_connection(a, b, c, z);
        // Euler transformation flips the sign of c-a-b
        return std::pow(1.0 - z, s) * hyp_connection(c - a, c - b, c, z);
    }
    // s (numerically) an integer: sum the variant that converges at z = 1
    if (s > 0.0) return hyp_series_regularized(a, b, c, z);
    return std::pow(1.0 - z, s) * hyp_series_regularized(c - a, c - b, c, z);
}

}  // namespace bhk
