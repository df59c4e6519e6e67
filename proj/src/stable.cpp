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

#include "bhk/stable.hpp"

#include <algorithm>
#include <cmath>

#include "bhk/quad.hpp"
#include "bhk/special.hpp"

namespace bhk {

namespace {

double a_const(double beta) {
    return (1.0 - beta) * std::pow(beta, beta / (1.0 - beta));
}

// -xi = value of x*lam - lam^beta at the saddle lam* = (beta/x)^{1/(1-beta)}
double saddle_exponent(double beta, double x) {
    return -a_const(beta) * std::pow(x, -beta / (1.0 - beta));
}

bool tail_series_applicable(double beta, double x) {
    double r1 = std::exp(std::lgamma(2.0 * beta + 1.0) - std::lgamma(beta + 1.0)) *
                std::pow(x, -beta) / 2.0;
    return r1 < 0.25;
}

// convergent expansion sigma_1(x) = (1/pi) sum_k (-1)^{k+1}
//   Gamma(k beta + 1)/k! sin(pi k beta) x^{-k beta - 1}
double tail_series(double beta, double x, bool& ok) {
    double lx = std::log(x);
    kahan_sum sum;
    double lkfac = 0.0;
    double maxterm = 0.0;
    ok = false;
    // termination watches the sin-free envelope: sin(pi k beta) has exact
    // zeros at rational beta and must not stop the sum early
    int small_count = 0;
    for (int k = 1; k <= 400; ++k) {
        lkfac += std::log(static_cast<double>(k));
        double lt = std::lgamma(k * beta + 1.0) - lkfac - (k * beta + 1.0) * lx;
        double env = std::exp(lt);
        double term = ((k % 2) ? 1.0 : -1.0) * env * sin_pi(k * beta);
        sum.add(term);
        maxterm = std::max(maxterm, env);
        small_count = (env < 1e-17 * std::abs(sum.value())) ? small_count + 1 : 0;
        if (small_count >= 2 && k > 3) {
            ok = true;
            break;
        }
    }
    if (maxterm > 1e4 * std::abs(sum.value())) ok = false;  // cancellation too deep
    return sum.value() / pi;
}

// Pollard branch-cut integral
//   sigma_1(x) = (1/pi) int_0^inf e^{-x u} e^{-u^beta cos(pi beta)}
//                sin(u^beta sin(pi beta)) du
double pollard(double beta, double x) {
    const double cb = cos_pi(beta);
    const double sb = sin_pi(beta);
    auto f = [=](double u) {
        double ub = std::pow(u, beta);
        return std::exp(-x * u - ub * cb) * std::sin(ub * sb);
    };
    // upper cutoff where the envelope falls below 1e-22
    double uhi = 50.0 / x;
    for (int it = 0; it < 50; ++it) {
        double need = 50.0 + std::max(0.0, -cb) * std::pow(uhi, beta);
        double next = need / x;
        if (next <= uhi * 1.0000001) break;
        uhi = next;
    }
    double ulo = std::pow(1e-22, 1.0 / (1.0 + beta));
    ulo = std::min(ulo, 1e-6 * uhi);
    // seed splits at the sign changes of the oscillating factor
    std::vector<double> splits;
    for (int k = 1; k < 10000; ++k) {
        double u = std::pow(k * pi / sb, 1.0 / beta);
        if (u >= uhi) break;
        splits.push_back(u);
    }
    quad_options opt;
    opt.rel_tol = 1e-12;
    opt.abs_tol = 0.0;
    opt.max_subdivisions = 2000;
    quad_result q = integrate_log(f, ulo, uhi, opt, splits);
    return q.value / pi;
}

// Bromwich contour through the saddle; returns log sigma_1(x).
// The quadrature factor is O(1), the exponential carried separately.
double saddle_log(double beta, double x) {
    const double lam = std::pow(beta / x, 1.0 / (1.0 - beta));
    const double f0 = x * lam - std::pow(lam, beta);  // = -xi < 0
    const double fpp = beta * (1.0 - beta) * std::pow(lam, beta - 2.0);
    const double w = 1.0 / std::sqrt(fpp);
    auto g = [=](double v) {
        double rho = std::hypot(lam, v);
        double th = std::atan2(v, lam);
        double rb = std::pow(rho, beta);
        double re = x * lam - rb * std::cos(beta * th) - f0;
        double im = x * v - rb * std::sin(beta * th);
        return std::exp(re) * std::cos(im);
    };
    double vmax = w;
    for (int it = 0; it < 200; ++it) {
        double rho = std::hypot(lam, vmax);
        double th = std::atan2(vmax, lam);
        double re = x * lam - std::pow(rho, beta) * std::cos(beta * th) - f0;
        if (re < -50.0) break;
        vmax *= 2.0;
    }
    std::vector<double> splits;
    for (double v = w; v < vmax; v *= 2.0) splits.push_back(v);
    quad_options opt;
    opt.rel_tol = 1e-12;
    opt.max_subdivisions = 2000;
    quad_result q = integrate(g, 0.0, vmax, opt, splits);
    return f0 + std::log(std::max(q.value, 1e-300) / pi);
}

constexpr double xi_saddle_switch = 8.0;

}  // namespace

double stable_density_1(double beta, double x) {
    require(beta > 0.0 && beta < 1.0, "stable_density: requires beta in (0,1)");
    require(std::isfinite(x) && x > 0.0, "stable_density: requires positive argument");
    if (std::abs(beta - 0.5) < 1e-13)
        return 0.5 / sqrt_pi * std::pow(x, -1.5) * std::exp(-0.25 / x);
    if (tail_series_applicable(beta, x)) {
        bool ok = false;
        double v = tail_series(beta, x, ok);
        if (ok) return v;
    }
    double xi = -saddle_exponent(beta, x);
    if (xi > xi_saddle_switch) {
        double ls = saddle_log(beta, x);
        return ls < -745.0 ? 0.0 : std::exp(ls);
    }
    return pollard(beta, x);
}

double stable_log_density_1(double beta, double x) {
    require(beta > 0.0 && beta < 1.0, "stable_density: requires beta in (0,1)");
    if (std::abs(beta - 0.5) < 1e-13)
        return -std::log(2.0 * sqrt_pi) - 1.5 * std::log(x) - 0.25 / x;
    double xi = -saddle_exponent(beta, x);
    if (xi > xi_saddle_switch) return saddle_log(beta, x);
    return std::log(stable_density_1(beta, x));
}

double stable_density(double beta, double t, double tau) {
    require(beta > 0.0 && beta < 1.0, "stable_density: requires beta in (0,1)");
    require(t > 0.0 && tau > 0.0, "stable_density: requires t, tau > 0");
    double scale = std::pow(t, -1.0 / beta);
    return scale * stable_density_1(beta, tau * scale);
}

// ---------------------------------------------------------------------------
// stable_table
// ---------------------------------------------------------------------------

double stable_table::saddle_log_prefactor(double x) const {
    double lam = std::pow(beta_ / x, 1.0 / (1.0 - beta_));
    return 0.5 * (2.0 - beta_) * std::log(lam) -
           0.5 * std::log(2.0 * pi * beta_ * (1.0 - beta_));
}

stable_table::stable_table(double beta) : beta_(beta) {
    require(beta > 0.0 && beta < 1.0, "stable_table: requires beta in (0,1)");
    a_const_ = a_const(beta);
    // left end at the underflow threshold of the exponential factor
    x_left_ = std::pow(a_const_ / 700.0, (1.0 - beta) / beta);
    x_right_ = std::pow(3.0 * std::exp(std::lgamma(2.0 * beta + 1.0) -
                                       std::lgamma(beta + 1.0)),
                        1.0 / beta);
    x_right_ = std::max(x_right_, 4.0);
    const int n = 1600;
    v_lo_ = std::log(x_left_);
    dv_ = (std::log(x_right_) - v_lo_) / (n - 1);
    h_.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::exp(v_lo_ + i * dv_);
        double ls = stable_log_density_1(beta, x);
        h_[i] = ls - saddle_exponent(beta, x) - saddle_log_prefactor(x);
    }
    // natural cubic spline second derivatives
    m_.assign(n, 0.0);
    std::vector<double> u(n, 0.0);
    for (int i = 1; i < n - 1; ++i) {
        double p = 0.5 * m_[i - 1] + 2.0;
        m_[i] = -0.5 / p;
        u[i] = (h_[i + 1] - 2.0 * h_[i] + h_[i - 1]) * 3.0 / (dv_ * dv_);
        u[i] = (u[i] - 0.5 * u[i - 1]) / p;
    }
    for (int i = n - 2; i >= 1; --i) m_[i] = m_[i] * m_[i + 1] + u[i];
}

double stable_table::density(double x) const {
    if (!(x > 0.0)) throw domain_error("stable_table: requires x > 0");
    if (x <= x_left_) return 0.0;
    if (x >= x_right_) {
        bool ok = false;
        double v = tail_series(beta_, x, ok);
        return ok ? v : stable_density_1(beta_, x);
    }
    double v = std::log(x);
    int i = static_cast<int>((v - v_lo_) / dv_);
    i = std::clamp(i, 0, static_cast<int>(h_.size()) - 2);
    double va = v_lo_ + i * dv_;
    double a = (v_lo_ + (i + 1) * dv_ - v) / dv_;
    double b = (v - va) / dv_;
    double hval = a * h_[i] + b * h_[i + 1] +
                  ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * dv_ * dv_ / 6.0;
    double ls = saddle_exponent(beta_, x) + saddle_log_prefactor(x) + hval;
    return ls < -745.0 ? 0.0 : std::exp(ls);
}

}  // namespace bhk
