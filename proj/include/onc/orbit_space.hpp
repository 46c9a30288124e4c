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

#ifndef ONC_ORBIT_SPACE_HPP
#define ONC_ORBIT_SPACE_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "onc/matrix_core.hpp"
#include "onc/sw_kernel.hpp"

namespace onc {

namespace orbit {
inline constexpr double kShell = 1e-12;
inline constexpr double kSqrt3 = std::numbers::sqrt3;
/// Radius below which every kernel gives a nonnegative lower bound.
inline constexpr double kInnerRadius = 1.0 / (4.0 * kSqrt3);
/// Radius beyond which the lower bound is negative for every kernel.
inline constexpr double kOuterRadius = 1.0 / (2.0 * kSqrt3);
/// Polar radius of a pure qutrit state.
inline constexpr double kPureRadius = 1.0 / kSqrt3;
}  // namespace orbit

/// Point of the ordered eigenvalue simplex 1 >= r_1 >= ... >= r_N >= 0.
class SimplexPoint {
   public:
    explicit SimplexPoint(OrderedSpectrum r) : r_(r.order() == Order::Descending ? std::move(r) : r.reversed()) {
        if (std::abs(r_.sum() - 1.0) > 1e-12) throw Error(ErrorKind::Validation, "simplex point must sum to 1");
        if (r_[r_.size() - 1] < -1e-14) throw Error(ErrorKind::Validation, "simplex point has a negative entry");
    }

    explicit SimplexPoint(std::vector<double> r) : SimplexPoint(OrderedSpectrum::descending(std::move(r))) {}

    int dim() const { return r_.size(); }
    const OrderedSpectrum &spectrum() const { return r_; }
    double operator[](int i) const { return r_[i]; }

   private:
    OrderedSpectrum r_;
};

/// Polar coordinates (r, phi) on the qutrit orbit plane, phi in [0, pi].
/// Membership in the orbit space itself is a separate predicate.
class QutritOrbitPoint {
   public:
    QutritOrbitPoint(double r, double phi) : r_(r), phi_(phi) {
        if (!(r >= 0.0) || !(phi >= 0.0 && phi <= std::numbers::pi)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "polar point (r, phi) = (" << r << ", " << phi << ") outside r >= 0, 0 <= phi <= pi";
            throw Error(ErrorKind::Domain, msg.str());
        }
    }

    double r() const { return r_; }
    double phi() const { return phi_; }
    double x() const { return r_ * std::cos(phi_); }
    double y() const { return r_ * std::sin(phi_); }

   private:
    double r_;
    double phi_;
};

enum class BandClassification { AlwaysPositive, KernelDependent, AlwaysNegative };

inline const char *to_string(BandClassification band) {
    switch (band) {
        case BandClassification::AlwaysPositive: return "always-positive";
        case BandClassification::KernelDependent: return "kernel-dependent";
        case BandClassification::AlwaysNegative: return "always-negative";
    }
    return "unknown";
}

struct QutritXi {
    double xi3;
    double xi8;
};

inline QutritXi simplex_to_xi(const SimplexPoint &p) {
    if (p.dim() != 3) throw Error(ErrorKind::InvalidDimension, "qutrit coordinates need N = 3");
    return {std::numbers::sqrt3 / 2.0 * (p[0] - p[1]), (1.0 - 3.0 * p[2]) / 2.0};
}

inline SimplexPoint xi_to_simplex(const QutritXi &xi) {
    const double s3 = std::numbers::sqrt3;
    return SimplexPoint(std::vector<double>{1.0 / 3.0 + xi.xi3 / s3 + xi.xi8 / 3.0,
                                            1.0 / 3.0 - xi.xi3 / s3 + xi.xi8 / 3.0,
                                            1.0 / 3.0 - 2.0 / 3.0 * xi.xi8});
}

/// 0 <= xi3 <= sqrt3/2 and xi3/sqrt3 <= xi8 <= 1/2, with a 1e-12 shell.
inline bool in_xi_region(const QutritXi &xi) {
    const double s = orbit::kShell;
    return xi.xi3 >= -s && xi.xi3 <= std::numbers::sqrt3 / 2.0 + s && xi.xi3 / std::numbers::sqrt3 <= xi.xi8 + s &&
           xi.xi8 <= 0.5 + s;
}

inline QutritOrbitPoint xi_to_polar(const QutritXi &xi) {
    if (!in_xi_region(xi)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "(xi3, xi8) = (" << xi.xi3 << ", " << xi.xi8 << ") outside the qutrit orbit region";
        throw Error(ErrorKind::Domain, msg.str());
    }
    const double r = std::hypot(xi.xi3, xi.xi8) / std::numbers::sqrt3;
    if (r == 0.0) return {0.0, 0.0};
    const double phi = std::clamp(3.0 * std::atan2(std::max(xi.xi3, 0.0), xi.xi8), 0.0, std::numbers::pi);
    return {r, phi};
}

inline QutritXi polar_to_xi(const QutritOrbitPoint &p) {
    const double s3r = std::numbers::sqrt3 * p.r();
    return {s3r * std::sin(p.phi() / 3.0), s3r * std::cos(p.phi() / 3.0)};
}

inline QutritOrbitPoint simplex_to_polar(const SimplexPoint &p) { return xi_to_polar(simplex_to_xi(p)); }

inline SimplexPoint polar_to_simplex(const QutritOrbitPoint &p) { return xi_to_simplex(polar_to_xi(p)); }

/// cos(phi/3) <= 1/(2 sqrt3 r): inside the trisectrix of Maclaurin.
inline bool orbit_membership(const QutritOrbitPoint &p) {
    return 2.0 * orbit::kSqrt3 * p.r() * std::cos(p.phi() / 3.0) <= 1.0 + orbit::kShell;
}

inline double require_zeta(double zeta) { return QutritModuli{zeta}.zeta(); }

/// W3- = 1/3 - (4r/sqrt3) cos(zeta + phi/3 - pi/3).
inline double qutrit_lower_bound(const QutritOrbitPoint &p, double zeta) {
    zeta = require_zeta(zeta);
    return 1.0 / 3.0 - 4.0 * p.r() / orbit::kSqrt3 * std::cos(zeta + p.phi() / 3.0 - std::numbers::pi / 3.0);
}

/// W3+ = 1/3 + (4r/sqrt3) cos(zeta - phi/3).
inline double qutrit_upper_bound(const QutritOrbitPoint &p, double zeta) {
    zeta = require_zeta(zeta);
    return 1.0 / 3.0 + 4.0 * p.r() / orbit::kSqrt3 * std::cos(zeta - p.phi() / 3.0);
}

/// cos(phi/3 + zeta - pi/3) <= 1/(4 sqrt3 r), i.e. W3- >= 0 (shell counts as inside).
inline bool positive_membership(const QutritOrbitPoint &p, double zeta) {
    zeta = require_zeta(zeta);
    return 4.0 * orbit::kSqrt3 * p.r() * std::cos(p.phi() / 3.0 + zeta - std::numbers::pi / 3.0) <= 1.0 + orbit::kShell;
}

/// Radius bands only; points beyond the trisectrix classify by r as well.
inline BandClassification classify_band(const QutritOrbitPoint &p) {
    if (p.r() <= orbit::kInnerRadius) return BandClassification::AlwaysPositive;
    if (p.r() >= orbit::kOuterRadius) return BandClassification::AlwaysNegative;
    return BandClassification::KernelDependent;
}

/// Qubit Hilbert-Schmidt density t^2 in the gap t = r1 - r2 in [0, 1].
inline double hs_density_qubit(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::Domain, "qubit gap must lie in [0, 1]");
    return t * t;
}

/// Qutrit Hilbert-Schmidt density r^7 sin^2(phi) in polar coordinates.
inline double hs_density_polar(const QutritOrbitPoint &p) {
    const double s = std::sin(p.phi());
    return std::pow(p.r(), 7) * s * s;
}

/// Squared Vandermonde of the eigenvalues (N = 2, 3 only).
inline double hs_density_simplex(const SimplexPoint &p) {
    const int n = p.dim();
    if (n != 2 && n != 3) throw Error(ErrorKind::InvalidDimension, "closed-form HS density only for N = 2, 3");
    double v = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) v *= (p[i] - p[j]) * (p[i] - p[j]);
    return v;
}

/// |d(r1, r2) / d(r, phi)| of the simplex-to-polar map.
inline double polar_jacobian(double r) { return 2.0 * r / (3.0 * orbit::kSqrt3); }

/// Bloch radius sqrt(N+1)/(N^2-1) inside which every kernel gives W >= 0.
inline double positivity_ball_radius(int n) {
    if (n < 2) throw Error(ErrorKind::InvalidDimension, "positivity ball needs N >= 2");
    return std::sqrt(n + 1.0) / (double(n) * n - 1.0);
}

struct CurveSample {
    std::string curve;
    double phi;
    double r;
    double x;
    double y;
};

namespace curve {
inline constexpr const char *kOrbitBoundary = "orbit_boundary";
inline constexpr const char *kPositivityBoundary = "positivity_boundary";
inline constexpr const char *kInnerCircle = "inner_circle";
inline constexpr const char *kOuterCircle = "outer_circle";
}  // namespace curve

/// K-point polylines for the trisectrix, the kernel-dependent positivity
/// boundary at zeta, and the two band circles; phi runs uniformly 0..pi.
inline std::vector<CurveSample> boundary_curves(double zeta, int resolution) {
    zeta = require_zeta(zeta);
    if (resolution < 2) throw Error(ErrorKind::Domain, "resolution must be >= 2");
    std::vector<CurveSample> out;
    out.reserve(static_cast<std::size_t>(4 * resolution));
    const auto emit = [&](const char *id, auto radius) {
        for (int k = 0; k < resolution; ++k) {
            const double phi = k == resolution - 1 ? std::numbers::pi : std::numbers::pi * k / (resolution - 1);
            const double r = radius(phi);
            out.push_back({id, phi, r, r * std::cos(phi), r * std::sin(phi)});
        }
    };
    emit(curve::kOrbitBoundary, [](double phi) { return 1.0 / (2.0 * orbit::kSqrt3 * std::cos(phi / 3.0)); });
    emit(curve::kPositivityBoundary, [zeta](double phi) {
        return 1.0 / (4.0 * orbit::kSqrt3 * std::cos(phi / 3.0 + zeta - std::numbers::pi / 3.0));
    });
    emit(curve::kInnerCircle, [](double) { return orbit::kInnerRadius; });
    emit(curve::kOuterCircle, [](double) { return orbit::kOuterRadius; });
    return out;
}

}  // namespace onc

#endif  // ONC_ORBIT_SPACE_HPP
