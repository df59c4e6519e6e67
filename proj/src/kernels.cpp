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

#include "bhk/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "bhk/quad.hpp"
#include "bhk/special.hpp"

namespace bhk {

const char* method_name(Method m) {
    switch (m) {
        case Method::closed_alpha2: return "closed_alpha2";
        case Method::closed_alpha1: return "closed_alpha1";
        case Method::subordination: return "subordination";
        case Method::spectral: return "spectral";
        case Method::series: return "series";
        case Method::picard: return "picard";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Bessel heat kernel, alpha = 2
// ---------------------------------------------------------------------------

EvalResult bessel_heat_2(double zeta, const EvalPoint& p) {
    require(zeta > -0.5, "bessel_heat_2: requires zeta > -1/2");
    const double t = p.t, r = p.r, s = p.s;
    const double x = r * s / (2.0 * t);
    EvalResult out;
    out.method = Method::closed_alpha2;
    if (x < 0.5) {
        // combined series: (rs)^{1/2-zeta} I_{zeta-1/2}(x)
        //   = (4t)^{1/2-zeta} sum_k (x/2)^{2k} rgamma(zeta+1/2+k) / k!
        double q = 0.25 * x * x;
        double c = rgamma(zeta + 0.5);
        kahan_sum sum;
        double term = c;
        sum.add(term);
        for (int k = 1; k < 200; ++k) {
            // rgamma recurrence is safe: zeta+1/2+k > 0 throughout
            term *= q / (k * (zeta - 0.5 + k));
            sum.add(term);
            if (term < 1e-18 * sum.value()) break;
        }
        double lead = (0.5 - zeta) * std::log(4.0 * t) - 0.25 * (r * r + s * s) / t;
        out.value = std::exp(lead) / (2.0 * t) * sum.value();
    } else {
        double lead = (0.5 - zeta) * std::log(r * s) -
                      0.25 * (r - s) * (r - s) / t;
        out.value = std::exp(lead) / (2.0 * t) * bessel_i_scaled(zeta - 0.5, x);
    }
    out.err_est = 2e-13 * out.value;
    return out;
}

// ---------------------------------------------------------------------------
// alpha = 1 closed form
// ---------------------------------------------------------------------------

EvalResult cauchy_heat_closed(double zeta, const EvalPoint& p) {
    require(zeta > -0.5, "cauchy_heat_closed: requires zeta > -1/2");
    const double t = p.t, r = p.r, s = p.s;
    const double dm = (r - s) * (r - s) + t * t;
    const double dp = (r + s) * (r + s) + t * t;
    EvalResult out;
    out.method = Method::closed_alpha1;
    if (zeta == 0.0) {
        double R = r * r + s * s + t * t;
        out.value = 2.0 * t * R / (pi * dm * dp);
        out.err_est = 1e-14 * out.value;
        return out;
    }
    if (zeta == 1.0) {
        out.value = 4.0 * t / (pi * dm * dp);
        out.err_est = 1e-14 * out.value;
        return out;
    }
    double R = r * r + s * s + t * t;
    double z = 2.0 * r * s / R;
    z *= z;
    double pref = 2.0 / sqrt_pi * std::exp(std::lgamma(zeta + 1.0) -
                                           (zeta + 1.0) * std::log(R));
    out.value = pref * t *
                hyp2f1_regularized(0.5 * (zeta + 1.0), 0.5 * (zeta + 2.0), zeta + 0.5, z);
    out.err_est = 3e-10 * out.value;
    return out;
}

// ---------------------------------------------------------------------------
// subordination quadrature
// ---------------------------------------------------------------------------

std::shared_ptr<const stable_table> shared_stable_table(double alpha) {
    require(alpha > 0.0 && alpha < 2.0, "shared_stable_table: requires alpha in (0,2)");
    static std::mutex mtx;
    static std::map<double, std::shared_ptr<const stable_table>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(alpha);
    if (it != cache.end()) return it->second;
    auto tab = std::make_shared<const stable_table>(0.5 * alpha);
    cache.emplace(alpha, tab);
    return tab;
}

EvalResult subordinated_heat(double zeta, double alpha, const EvalPoint& p,
                             const AccuracyBudget& budget, const stable_table* table) {
    require(zeta > -0.5, "subordinated_heat: requires zeta > -1/2");
    require(alpha > 0.0 && alpha < 2.0, "subordinated_heat: requires alpha in (0,2)");
    budget.validate();
    std::shared_ptr<const stable_table> owned;
    if (!table) {
        owned = shared_stable_table(alpha);
        table = owned.get();
    }
    const double beta = 0.5 * alpha;
    // scaling reduction to t = 1
    const double tpow = std::pow(p.t, 1.0 / alpha);
    const double x = p.r / tpow, y = p.s / tpow;
    const double scale_out = std::pow(p.t, -(2.0 * zeta + 1.0) / alpha);

    auto f = [&](double tau) {
        double sig = table->density(tau);
        if (sig == 0.0) return 0.0;
        return bessel_heat_2(zeta, EvalPoint{tau, x, y}).value * sig;
    };
    double d2 = (x - y) * (x - y);
    double tau_lo = d2 > 0.0 ? d2 / (4.0 * 745.0) : 0.0;
    tau_lo = std::max(tau_lo, 1e-300);
    double tau_hi = 1e6 * std::max({1.0, 0.25 * (x + y) * (x + y)});
    std::vector<double> splits = {0.25 * d2, d2, 0.5 * x * y, (x + y) * (x + y), 1.0};
    quad_options opt;
    opt.rel_tol = 0.3 * budget.rel_tol;
    opt.abs_tol = 0.0;
    opt.max_subdivisions = budget.max_subdivisions;
    quad_result q = integrate_log(f, tau_lo, tau_hi, opt, splits);

    // analytic power tail: p2 -> 2^{-2 zeta} rg(zeta+1/2) tau^{-1/2-zeta},
    // sigma_1 -> Gamma(beta+1) sin(pi beta)/pi tau^{-1-beta}
    double cpow = 0.5 + zeta + beta;
    double ctail = std::pow(2.0, -2.0 * zeta) * rgamma(zeta + 0.5) *
                   std::exp(std::lgamma(beta + 1.0)) * sin_pi(beta) / pi;
    double tail = ctail * std::pow(tau_hi, -cpow) / cpow;
    double tail_err = tail * ((x * x + y * y) / (4.0 * tau_hi) +
                              std::pow(tau_hi, -beta) + 1e-10);

    EvalResult out;
    out.method = Method::subordination;
    out.value = scale_out * (q.value + tail);
    out.err_est = scale_out * (q.err + tail + tail_err) +
                  (table->rel_err() + 1e-13) * std::abs(out.value);
    if (!q.converged)
        throw accuracy_error("subordinated_heat: quadrature budget exhausted",
                             out.value, out.err_est);
    return out;
}

// ---------------------------------------------------------------------------
// Hankel-spectral oracle
// ---------------------------------------------------------------------------

EvalResult spectral_heat(double zeta, double alpha, const EvalPoint& p,
                         const AccuracyBudget& budget) {
    require(zeta >= 0.0, "spectral_heat: requires zeta >= 0");
    require(alpha > 0.0 && alpha <= 2.0, "spectral_heat: requires alpha in (0,2]");
    budget.validate();
    const double t = p.t, r = p.r, s = p.s;
    const double nu = zeta - 0.5;
    const double kmax = std::pow(42.0 / t, 1.0 / alpha);
    const double dk = pi / (r + s);
    const double pref = std::pow(r * s, 0.5 - zeta);

    auto g = [&](double k) {
        if (k <= 0.0) return 0.0;
        return k * std::exp(-t * std::pow(k, alpha)) * bessel_j(nu, k * r) *
               bessel_j(nu, k * s);
    };
    // oscillation-free envelope of |g| beyond k, integrated: bounds truncation
    auto tail_bound = [&](double k) {
        double e = std::exp(-t * std::pow(k, alpha));
        return 2.0 / (pi * std::sqrt(r * s)) * e * std::pow(k, 1.0 - alpha) /
               (t * alpha) * 2.0;
    };

    kahan_sum acc, errs;
    int evals = 0;
    // head: possible k^{1+2nu} behavior at 0
    double khead = std::min(4.0 * dk, kmax);
    {
        quad_options opt;
        opt.rel_tol = 0.1 * budget.rel_tol;
        opt.max_subdivisions = 200;
        quad_result q = integrate(g, 0.0, khead, opt, {dk, 2.0 * dk, 3.0 * dk});
        acc.add(q.value);
        errs.add(q.err);
        evals += q.evaluations;
    }
    double k0 = khead;
    double trunc = tail_bound(k0) * pref;
    while (k0 < kmax) {
        double k1 = std::min(k0 + dk, kmax);
        quad_options opt;
        opt.rel_tol = 1e-12;
        opt.max_subdivisions = 8;
        quad_result q = integrate(g, k0, k1, opt);
        acc.add(q.value);
        errs.add(q.err);
        evals += q.evaluations;
        k0 = k1;
        trunc = tail_bound(k0) * pref;
        double cur = std::abs(pref * acc.value());
        if (trunc < 0.05 * budget.rel_tol * cur && k0 > 8.0 * dk) break;
    }

    EvalResult out;
    out.method = Method::spectral;
    out.value = pref * acc.value();
    out.err_est = pref * errs.value() + trunc + 1e-12 * std::abs(out.value);
    if (out.value < 0.0 && -out.value <= out.err_est) out.value = 0.0;
    return out;
}

// ---------------------------------------------------------------------------
// Levy kernel
// ---------------------------------------------------------------------------

namespace {

constexpr double levy_u_switch = 0.05;

double levy_exact_scaled(double zeta, double alpha, double u) {
    // nu at r+s = 1, |r-s| = u: scale-free shape function
    double rps2 = 0.5 * (1.0 + u * u);  // r^2 + s^2 when r+s = 1
    double one_m = (1.0 - u * u) / (1.0 + u * u);
    double z = one_m * one_m;
    double a = zeta + 0.5 * alpha + 0.5;
    double pref = std::exp((1.0 + alpha) * std::log(2.0) + std::lgamma(0.5 * alpha + 1.0) +
                           std::lgamma(a)) *
                  sin_pi(0.5 * alpha) / pi;
    return pref * std::pow(rps2, -a) *
           hyp2f1_regularized(0.5 * a, 0.5 * (a + 1.0), zeta + 0.5, z);
}

struct levy_calib {
    double c0;
    double c2;
};

levy_calib levy_calibration(double zeta, double alpha) {
    static std::mutex mtx;
    static std::map<std::pair<double, double>, levy_calib> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(zeta, alpha);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    double u0 = levy_u_switch;
    double u1 = u0 / std::sqrt(2.0);
    // g(u) = nu * (r+s)^{2 zeta} |r-s|^{1+alpha}, analytic in u^2
    double g0 = levy_exact_scaled(zeta, alpha, u0) * std::pow(u0, 1.0 + alpha);
    double g1 = levy_exact_scaled(zeta, alpha, u1) * std::pow(u1, 1.0 + alpha);
    levy_calib c;
    c.c2 = (g0 - g1) / (u0 * u0 - u1 * u1);
    c.c0 = g0 - c.c2 * u0 * u0;
    cache.emplace(key, c);
    return c;
}

}  // namespace

double levy_kernel(double zeta, double alpha, double r, double s) {
    require(zeta > -0.5, "levy_kernel: requires zeta > -1/2");
    require(alpha > 0.0 && alpha < 2.0, "levy_kernel: requires alpha in (0,2)");
    require(r > 0.0 && s > 0.0, "levy_kernel: requires r, s > 0");
    require(r != s, "levy_kernel: diverges on the diagonal r = s");
    double a = r + s;
    double u = std::abs(r - s) / a;
    // homogeneity: nu(r,s) = a^{-(2 zeta + 1 + alpha)} nu_shape(u)
    double scale = std::pow(a, -(2.0 * zeta + 1.0 + alpha));
    if (u >= levy_u_switch) return scale * levy_exact_scaled(zeta, alpha, u);
    levy_calib c = levy_calibration(zeta, alpha);
    double g = c.c0 + c.c2 * u * u;
    return scale * g * std::pow(u, -(1.0 + alpha));
}

// ---------------------------------------------------------------------------
// free envelope
// ---------------------------------------------------------------------------

Envelope free_envelope(double zeta, double alpha, const EvalPoint& p,
                       double c_lower, double c_upper) {
    require(zeta > -0.5, "free_envelope: requires zeta > -1/2");
    require(alpha > 0.0 && alpha <= 2.0, "free_envelope: requires alpha in (0,2]");
    const double t = p.t, r = p.r, s = p.s;
    Envelope e;
    if (alpha < 2.0) {
        double d = std::abs(r - s);
        double a = r + s;
        double t1a = std::pow(t, 1.0 / alpha);
        double denom = std::pow(d, 1.0 + alpha) * std::pow(a, 2.0 * zeta) +
                       std::pow(t, (1.0 + alpha) / alpha) * std::pow(t1a + a, 2.0 * zeta);
        e.lower = e.upper = t / denom;
        return e;
    }
    require(c_lower > 0.0 && c_upper > 0.0, "free_envelope: Gaussian constants must be > 0");
    double base = std::pow(t, -0.5) * std::pow(r * s + t, -zeta);
    double d2 = (r - s) * (r - s);
    e.exp_const_lower = c_lower;
    e.exp_const_upper = c_upper;
    e.lower = base * std::exp(-d2 / (c_lower * t));
    e.upper = base * std::exp(-d2 / (c_upper * t));
    return e;
}

// ---------------------------------------------------------------------------
// FreeKernel facade
// ---------------------------------------------------------------------------

FreeKernel::FreeKernel(double zeta, double alpha, AccuracyBudget budget)
    : zeta_(zeta), alpha_(alpha), budget_(budget) {
    require(zeta > -0.5, "FreeKernel: requires zeta > -1/2");
    require(alpha > 0.0 && alpha <= 2.0, "FreeKernel: requires alpha in (0,2]");
    budget_.validate();
    if (alpha != 1.0 && alpha != 2.0) table_ = shared_stable_table(alpha);
}

EvalResult FreeKernel::eval(double t, double r, double s) const {
    EvalPoint p = EvalPoint::make(t, r, s);
    if (alpha_ == 2.0) return bessel_heat_2(zeta_, p);
    if (alpha_ == 1.0) return cauchy_heat_closed(zeta_, p);
    return subordinated_heat(zeta_, alpha_, p, budget_, table_.get());
}

EvalResult FreeKernel::eval_method(Method m, double t, double r, double s) const {
    EvalPoint p = EvalPoint::make(t, r, s);
    switch (m) {
        case Method::closed_alpha2:
            require(alpha_ == 2.0, "eval_method: closed_alpha2 requires alpha = 2");
            return bessel_heat_2(zeta_, p);
        case Method::closed_alpha1:
            require(alpha_ == 1.0, "eval_method: closed_alpha1 requires alpha = 1");
            return cauchy_heat_closed(zeta_, p);
        case Method::subordination: {
            require(alpha_ < 2.0, "eval_method: subordination requires alpha < 2");
            auto tab = table_ ? table_ : shared_stable_table(alpha_);
            return subordinated_heat(zeta_, alpha_, p, budget_, tab.get());
        }
        case Method::spectral:
            return spectral_heat(zeta_, alpha_, p, budget_);
        default:
            throw domain_error("eval_method: method not available for the free kernel");
    }
}

// ---------------------------------------------------------------------------
// weighted radial integrals with power tail correction
// ---------------------------------------------------------------------------

double radial_weighted_integral(const FreeKernel& k, double t, double r, double delta,
                                double rel_tol) {
    const double zeta = k.zeta(), alpha = k.alpha();
    require(2.0 * zeta - delta > -1.0,
            "radial_weighted_integral: requires 2 zeta - delta > -1");
    require(delta > -alpha, "radial_weighted_integral: requires delta > -alpha");
    // scaling reduction: value = t^{-delta/alpha} W(r t^{-1/alpha})
    const double tpow = std::pow(t, 1.0 / alpha);
    const double x = r / tpow;

    auto f = [&](double y) { return k(1.0, x, y) * std::pow(y, 2.0 * zeta - delta); };

    double y_lo = 1e-8 * std::min(1.0, x);
    double y_hi = 1e4 * std::max(1.0, x);
    // large-y constant of p(1,x,y) y^{2 zeta}: the Levy prefactor at z = 0
    double cnu = 0.0;
    if (alpha < 2.0) {
        cnu = std::exp((1.0 + alpha) * std::log(2.0) + std::lgamma(0.5 * alpha + 1.0) +
                       std::lgamma(zeta + 0.5 * alpha + 0.5)) *
              sin_pi(0.5 * alpha) / pi * rgamma(zeta + 0.5);
        // push y_hi far enough that the O(y^{-alpha}) correction to the
        // tail model is below tolerance
        for (int i = 0; i < 12; ++i) {
            double tail = cnu * std::pow(y_hi, -(alpha + delta)) / (alpha + delta);
            if (tail * std::pow(y_hi, -alpha) < 0.05 * rel_tol) break;
            y_hi *= 10.0;
        }
    } else {
        y_hi = std::max(x + 45.0, 50.0);  // Gaussian cutoff
    }

    quad_options opt;
    opt.rel_tol = 0.2 * rel_tol;
    opt.max_subdivisions = 2000;
    std::vector<double> splits = {0.5 * x, x, 2.0 * x, 1.0, x + 1.0};
    quad_result q = integrate_log(f, y_lo, y_hi, opt, splits);
    double tail = alpha < 2.0
                      ? cnu * std::pow(y_hi, -(alpha + delta)) / (alpha + delta)
                      : 0.0;
    return std::pow(t, -delta / alpha) * (q.value + tail);
}

}  // namespace bhk
