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

#ifndef BHK_COMMON_HPP
#define BHK_COMMON_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bhk {

/// Thrown when an argument lies outside the mathematical domain of an
/// operation (wrong sign, out-of-range index, ...).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when an algorithm fails to reach its accuracy target within
/// its budget (quadrature refinement cap, series term cap, ...).
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, double partial, double err)
        : std::runtime_error(what), partial_value(partial), err_estimate(err) {}
    double partial_value;
    double err_estimate;
};

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double sqrt_pi = 1.77245385090551602729816748334114518;
inline constexpr double inf = std::numeric_limits<double>::infinity();
inline constexpr double quiet_nan = std::numeric_limits<double>::quiet_NaN();

inline bool finite(double x) { return std::isfinite(x); }

/// Neumaier compensated accumulator.  Used wherever many quadrature
/// contributions are reduced so that results do not depend on panel count
/// at the last few ulps.
struct kahan_sum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

inline void require(bool cond, const char* msg) {
    if (!cond) throw domain_error(msg);
}

}  // namespace bhk

#endif
