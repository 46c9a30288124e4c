// Copyright 2026 The onc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONC_QUADRATURE_HPP
#define ONC_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace onc {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
};

/// Adaptive 31-point Gauss-Kronrod on [a, b] to an absolute tolerance.
/// Bisection stops at `max_depth`; `converged` is false when the error
/// estimate is still above `abs_tolerance` there.
template <typename F>
QuadratureResult integrate_adaptive(F &&f, double a, double b, double abs_tolerance, unsigned max_depth = 15) {
    using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
    double error = 0.0, l1 = 0.0;
    // First pass sizes the integrand so the absolute target can be passed as a relative one.
    double value = Rule::integrate(f, a, b, max_depth, 1e-6, &error, &l1);
    if (error > abs_tolerance) {
        const double relative = abs_tolerance / std::max(l1, std::numeric_limits<double>::min());
        value = Rule::integrate(f, a, b, max_depth, relative, &error, &l1);
    }
    return {value, error, error <= abs_tolerance};
}

}  // namespace onc

#endif  // ONC_QUADRATURE_HPP
