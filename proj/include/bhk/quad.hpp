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

#ifndef BHK_QUAD_HPP
#define BHK_QUAD_HPP

#include <functional>
#include <vector>

#include "bhk/common.hpp"

namespace bhk {

struct quad_result {
    double value = 0.0;
    double err = 0.0;        // estimated absolute error
    int evaluations = 0;
    bool converged = true;
};

struct quad_options {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    int max_subdivisions = 400;
    // When false, budget exhaustion returns converged=false instead of
    // throwing; callers that can live with a partial value use this.
    bool throw_on_failure = false;
};

/// Adaptive Gauss-Kronrod (7,15) integration of f over [a, b] with
/// optional interior split points. Splits are seeds for the subdivision,
/// not hard boundaries of independent integrals.
quad_result integrate(const std::function<double(double)>& f, double a, double b,
                      const quad_options& opt = {},
                      const std::vector<double>& splits = {});

/// Integral of f over [a, inf), mapped through x = a + u/(1-u).
quad_result integrate_to_inf(const std::function<double(double)>& f, double a,
                             const quad_options& opt = {});

/// Integral of f over (0, b] in logarithmic variable, i.e.
/// int f(x) dx = int f(e^v) e^v dv over v in [log(lo), log(b)], where lo
/// is an explicit positive cutoff below which the contribution is known
/// negligible by the caller.
quad_result integrate_log(const std::function<double(double)>& f, double lo, double hi,
                          const quad_options& opt = {},
                          const std::vector<double>& splits = {});

/// Fixed-order Gauss-Legendre rule on [a,b] (n in {4, 8, 12, 16, 20, 32, 48}).
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int n);

/// Nodes and weights of the n-point Gauss-Legendre rule on [a,b].
void gauss_legendre_nodes(double a, double b, int n,
                          std::vector<double>& x, std::vector<double>& w);

}  // namespace bhk

#endif
