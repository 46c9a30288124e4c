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

#ifndef ONC_INDICATOR_HPP
#define ONC_INDICATOR_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "onc/extrema.hpp"
#include "onc/orbit_space.hpp"
#include "onc/parallel.hpp"
#include "onc/quadrature.hpp"
#include "onc/random_ensembles.hpp"
#include "onc/sw_kernel.hpp"

namespace onc {

// The indicator Q_N is the Hilbert-Schmidt volume fraction of the orbit
// space (ordered eigenvalue simplex) on which the Wigner lower bound is
// nonnegative. Both the constraint and the measure depend on the spectrum
// alone, so no unitary integration is ever needed.

enum class Method { ClosedForm, Quadrature, MonteCarlo };

inline const char *to_string(Method m) {
    switch (m) {
        case Method::ClosedForm: return "closed-form";
        case Method::Quadrature: return "quadrature";
        case Method::MonteCarlo: return "monte-carlo";
    }
    return "unknown";
}

struct IndicatorMeta {
    int dim = 0;
    std::optional<double> zeta;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> samples;
    std::optional<unsigned> workers;
};

struct IndicatorResult {
    double value = 0.0;
    Method method = Method::ClosedForm;
    std::optional<double> std_error;  // Monte Carlo only
    IndicatorMeta meta;
};

/// Q_2 = 1/(3 sqrt 3).
inline IndicatorResult q2_closed() {
    IndicatorResult out;
    out.value = 1.0 / (3.0 * std::numbers::sqrt3);
    out.meta.dim = 2;
    return out;
}

/// Q_2 as the ratio of the radial integrals of t^2 over [0, 1/sqrt3] and [0, 1].
inline IndicatorResult q2_quadrature(double abs_tolerance = 1e-12) {
    const auto density = [](double t) { return t * t; };
    const auto num = integrate_adaptive(density, 0.0, orbit::kPureRadius, abs_tolerance / 4.0);
    const auto den = integrate_adaptive(density, 0.0, 1.0, abs_tolerance / 4.0);
    IndicatorResult out;
    out.value = num.value / den.value;
    out.method = Method::Quadrature;
    out.meta.dim = 2;
    if (!num.converged || !den.converged) throw ToleranceError("qubit quadrature did not converge", out.value);
    return out;
}

/// Q_3(zeta) = (1 + 20c) / (128 (4c - 1)^5), c = cos^2(zeta - pi/6).
inline IndicatorResult q3_closed(double zeta) {
    zeta = require_zeta(zeta);
    const double cs = std::cos(zeta - std::numbers::pi / 6.0);
    const double c = cs * cs;
    IndicatorResult out;
    out.value = (1.0 + 20.0 * c) / (128.0 * std::pow(4.0 * c - 1.0, 5));
    out.meta.dim = 3;
    out.meta.zeta = zeta;
    return out;
}

/// Q_3(zeta) from the volume integrals with measure r^7 sin^2(phi): the
/// radial integrals are R(phi)^8 / 8 in closed form and the remaining phi
/// integrals go through adaptive Gauss-Kronrod quadrature.
inline IndicatorResult q3_quadrature(double zeta, double abs_tolerance = 1e-12) {
    zeta = require_zeta(zeta);
    if (!(abs_tolerance > 0.0)) throw Error(ErrorKind::Domain, "quadrature tolerance must be positive");
    const double pi = std::numbers::pi;
    // Both integrands scaled by 8 (2 sqrt3)^8; the ratio then carries 1/4^8 * 4^4 = 1/256.
    const auto orbit_integrand = [](double phi) {
        const double s = std::sin(phi);
        return s * s / std::pow(std::cos(phi / 3.0), 8);
    };
    const auto positive_integrand = [zeta, pi](double phi) {
        const double s = std::sin(phi);
        return s * s / std::pow(2.0 * std::cos(phi / 3.0 + zeta - pi / 3.0), 8);
    };
    const auto rough_den = integrate_adaptive(orbit_integrand, 0.0, pi, 1e-6);
    const auto rough_num = integrate_adaptive(positive_integrand, 0.0, pi, 1e-6);
    const double q_rough = rough_num.value / rough_den.value;
    const double num_tol = 0.25 * abs_tolerance * rough_den.value;
    const double den_tol = std::min(0.25 * abs_tolerance * rough_den.value / std::max(q_rough, 1e-300), 1e-3 * rough_den.value);
    const auto den = integrate_adaptive(orbit_integrand, 0.0, pi, den_tol);
    const auto num = integrate_adaptive(positive_integrand, 0.0, pi, num_tol);
    IndicatorResult out;
    out.value = num.value / den.value;
    out.method = Method::Quadrature;
    out.meta.dim = 3;
    out.meta.zeta = zeta;
    if (!num.converged || !den.converged) {
        std::ostringstream msg;
        msg << "qutrit quadrature did not reach " << abs_tolerance;
        throw ToleranceError(msg.str(), out.value);
    }
    return out;
}

/// Lower Wigner bound sum_i pi_i r_{N-1-i} for descending spectra.
inline double lower_bound_value(const std::vector<double> &r_desc, const std::vector<double> &pi_desc) {
    const std::size_t n = r_desc.size();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += pi_desc[i] * r_desc[n - 1 - i];
    return s;
}

inline constexpr std::uint64_t kMonteCarloBlock = 1u << 16;

/// Fraction of Hilbert-Schmidt states whose Wigner lower bound is >= 0.
/// Block b of kMonteCarloBlock samples draws from SeededStream(seed, b), so
/// the estimate depends on (seed, samples) only, never on `threads`.
inline IndicatorResult q_monte_carlo(const SWKernelSpectrum &kernel, std::uint64_t samples, std::uint64_t seed,
                                     unsigned threads = 1) {
    if (samples < 1) throw Error(ErrorKind::Domain, "samples must be >= 1");
    const int n = kernel.dim();
    const auto &pi = kernel.pi().values();
    const std::uint64_t blocks = (samples + kMonteCarloBlock - 1) / kMonteCarloBlock;
    const auto counts = map_blocks<std::uint64_t>(blocks, threads, [&](std::uint64_t b) {
        SeededStream stream(seed, b);
        const std::uint64_t begin = b * kMonteCarloBlock;
        const std::uint64_t end = std::min(samples, begin + kMonteCarloBlock);
        std::uint64_t hits = 0;
        for (std::uint64_t k = begin; k < end; ++k) {
            const auto r = hs_spectrum(n, stream);
            if (lower_bound_value(r.values(), pi) >= 0.0) ++hits;
        }
        return hits;
    });
    std::uint64_t hits = 0;
    for (auto c : counts) hits += c;
    const double p = double(hits) / double(samples);
    IndicatorResult out;
    out.value = p;
    out.method = Method::MonteCarlo;
    out.std_error = std::sqrt(p * (1.0 - p) / double(samples));
    out.meta.dim = n;
    out.meta.seed = seed;
    out.meta.samples = samples;
    out.meta.workers = threads;
    return out;
}

struct SweepRow {
    double zeta;
    double q_closed;
    double q_quadrature;
};

/// Uniform zeta grid over [0, pi/3] with both evaluation routes.
inline std::vector<SweepRow> q3_sweep(int steps, double abs_tolerance = 1e-12) {
    if (steps < 2) throw Error(ErrorKind::Domain, "sweep needs at least 2 steps");
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        const double zeta = k == steps - 1 ? QutritModuli::kZetaMax : QutritModuli::kZetaMax * k / (steps - 1);
        rows.push_back({zeta, q3_closed(zeta).value, q3_quadrature(zeta, abs_tolerance).value});
    }
    return rows;
}

}  // namespace onc

#endif  // ONC_INDICATOR_HPP
