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

#include "bhk/quad.hpp"

#include <algorithm>
#include <cmath>

namespace bhk {

namespace {

// 15-point Kronrod abscissae on [-1,1] (nonnegative half) and weights,
// with the embedded 7-point Gauss weights. Values from QUADPACK dqk15.
const double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
const double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct panel {
    double a, b;
    double value;
    double err;
};

// One GK15 application; returns (integral, error estimate, evals).
panel gk15(const std::function<double(double)>& f, double a, double b, int& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fc = f(c);
    evals += 15;
    if (!std::isfinite(fc)) fc = 0.0;  // integrable endpoint spikes: drop the node
    double resg = fc * wg[3];
    double resk = fc * wgk[7];
    double resabs = std::abs(resk);
    for (int j = 0; j < 7; ++j) {
        double dx = h * xgk[j];
        double f1 = f(c - dx);
        double f2 = f(c + dx);
        if (!std::isfinite(f1)) f1 = 0.0;
        if (!std::isfinite(f2)) f2 = 0.0;
        double fsum = f1 + f2;
        if (j % 2 == 1) resg += wg[j / 2] * fsum;
        resk += wgk[j] * fsum;
        resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
    }
    panel p;
    p.a = a;
    p.b = b;
    p.value = resk * h;
    double scale = resabs * std::abs(h);
    double raw = std::abs((resk - resg) * h);
    // QUADPACK-style error sharpening
    if (scale > 0.0 && raw > 0.0) {
        double r = 200.0 * raw / scale;
        p.err = scale * std::min(1.0, r * std::sqrt(r));
    } else {
        p.err = raw;
    }
    return p;
}

quad_result adapt(const std::function<double(double)>& f, double a, double b,
                  const quad_options& opt, const std::vector<double>& splits) {
    quad_result out;
    std::vector<double> edges;
    edges.push_back(a);
    for (double s : splits)
        if (s > a && s < b) edges.push_back(s);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<panel> heap;
    int evals = 0;
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        heap.push_back(gk15(f, edges[i], edges[i + 1], evals));

    auto cmp = [](const panel& x, const panel& y) { return x.err < y.err; };
    std::make_heap(heap.begin(), heap.end(), cmp);

    int ndiv = static_cast<int>(heap.size());
    while (true) {
        double total = 0.0, toterr = 0.0;
        {
            kahan_sum sv, se;
            for (const panel& p : heap) {
                sv.add(p.value);
                se.add(p.err);
            }
            total = sv.value();
            toterr = se.value();
        }
        double target = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
        if (toterr <= target || ndiv >= opt.max_subdivisions) {
            out.value = total;
            out.err = toterr;
            out.evaluations = evals;
            out.converged = (toterr <= target) || toterr <= 1e-15 * std::abs(total);
            if (!out.converged && opt.throw_on_failure)
                throw accuracy_error("adaptive quadrature: subdivision budget exhausted",
                                     total, toterr);
            return out;
        }
        std::pop_heap(heap.begin(), heap.end(), cmp);
        panel worst = heap.back();
        heap.pop_back();
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval cannot be split further in double precision
            worst.err = 0.0;
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end(), cmp);
            continue;
        }
        heap.push_back(gk15(f, worst.a, mid, evals));
        std::push_heap(heap.begin(), heap.end(), cmp);
        heap.push_back(gk15(f, mid, worst.b, evals));
        std::push_heap(heap.begin(), heap.end(), cmp);
        ++ndiv;
    }
}

}  // namespace

quad_result integrate(const std::function<double(double)>& f, double a, double b,
                      const quad_options& opt, const std::vector<double>& splits) {
    if (!(a < b)) {
        quad_result r;
        return r;
    }
    return adapt(f, a, b, opt, splits);
}

quad_result integrate_to_inf(const std::function<double(double)>& f, double a,
                             const quad_options& opt) {
    auto g = [&f, a](double u) {
        double om = 1.0 - u;
        double x = a + u / om;
        return f(x) / (om * om);
    };
    return adapt(g, 0.0, 1.0, opt, {0.5, 0.9, 0.99});
}

quad_result integrate_log(const std::function<double(double)>& f, double lo, double hi,
                          const quad_options& opt, const std::vector<double>& splits) {
    require(lo > 0.0 && hi > lo, "integrate_log: need 0 < lo < hi");
    auto g = [&f](double v) {
        double x = std::exp(v);
        return f(x) * x;
    };
    std::vector<double> vsplits;
    vsplits.reserve(splits.size());
    for (double s : splits)
        if (s > lo && s < hi) vsplits.push_back(std::log(s));
    return adapt(g, std::log(lo), std::log(hi), opt, vsplits);
}

void gauss_legendre_nodes(double a, double b, int n,
                          std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    // Newton iteration on P_n; standard symmetric construction.
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p0 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        double xm = 0.5 * (b + a);
        double xl = 0.5 * (b - a);
        x[i] = xm - xl * z;
        x[n - 1 - i] = xm + xl * z;
        w[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int n) {
    std::vector<double> x, w;
    gauss_legendre_nodes(a, b, n, x, w);
    kahan_sum s;
    for (int i = 0; i < n; ++i) s.add(w[i] * f(x[i]));
    return s.value();
}

}  // namespace bhk
