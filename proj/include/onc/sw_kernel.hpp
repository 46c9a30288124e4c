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

#ifndef ONC_SW_KERNEL_HPP
#define ONC_SW_KERNEL_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "onc/matrix_core.hpp"

namespace onc {

/// Spectrum of a Stratonovich-Weyl kernel: descending, sum 1, sum of
/// squares N. General-N kernels enter only through this check.
class SWKernelSpectrum {
   public:
    SWKernelSpectrum() = default;

    explicit SWKernelSpectrum(std::vector<double> pi, double tolerance = 1e-10)
        : pi_(OrderedSpectrum::descending(std::move(pi))) {
        const int n = pi_.size();
        if (n < 2) throw Error(ErrorKind::InvalidDimension, "kernel spectrum needs N >= 2");
        const double trace_residual = pi_.sum() - 1.0;
        const double square_residual = pi_.sum_of_squares() - n;
        if (std::abs(trace_residual) > tolerance || std::abs(square_residual) > tolerance) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "kernel spectrum violates tr(D)=1 / tr(D^2)=N: sum(pi)-1 = " << trace_residual
                << ", sum(pi^2)-N = " << square_residual;
            throw Error(ErrorKind::Constraint, msg.str());
        }
    }

    int dim() const { return pi_.size(); }
    const OrderedSpectrum &pi() const { return pi_; }
    double operator[](int i) const { return pi_[i]; }

   private:
    OrderedSpectrum pi_;
};

inline SWKernelSpectrum validate_kernel_spectrum(std::vector<double> pi) { return SWKernelSpectrum(std::move(pi)); }

/// The unique qubit kernel: ((1+sqrt3)/2, (1-sqrt3)/2).
inline SWKernelSpectrum qubit_kernel_spectrum() {
    const double s3 = std::numbers::sqrt3;
    return SWKernelSpectrum({(1.0 + s3) / 2.0, (1.0 - s3) / 2.0});
}

/// Qutrit kernel moduli. zeta in [0, pi/3] is the only free parameter;
/// mu3 = sin(zeta), mu8 = cos(zeta) and nu = 1/3 - 4/3 cos(zeta) follow.
class QutritModuli {
   public:
    static constexpr double kZetaMax = std::numbers::pi / 3.0;

    /// Inputs within this distance of the range are clamped onto it.
    static constexpr double kZetaSlack = 1e-10;

    explicit QutritModuli(double zeta) : zeta_(std::clamp(zeta, 0.0, kZetaMax)) {
        if (!(zeta >= -kZetaSlack && zeta <= kZetaMax + kZetaSlack)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "zeta = " << zeta << " outside [0, pi/3]";
            throw Error(ErrorKind::Domain, msg.str());
        }
    }

    double zeta() const { return zeta_; }
    double mu3() const { return std::sin(zeta_); }
    double mu8() const { return std::cos(zeta_); }
    double nu() const { return 1.0 / 3.0 - 4.0 / 3.0 * std::cos(zeta_); }

   private:
    double zeta_;
};

inline SWKernelSpectrum qutrit_kernel_spectrum(const QutritModuli &m) {
    const double s3 = std::numbers::sqrt3;
    const double mu3 = m.mu3();
    const double mu8 = m.mu8();
    return SWKernelSpectrum({1.0 / 3.0 + 2.0 / s3 * mu3 + 2.0 / 3.0 * mu8,
                             1.0 / 3.0 - 2.0 / s3 * mu3 + 2.0 / 3.0 * mu8,
                             1.0 / 3.0 - 4.0 / 3.0 * mu8});
}

inline SWKernelSpectrum qutrit_kernel_spectrum(double zeta) { return qutrit_kernel_spectrum(QutritModuli(zeta)); }

/// Unit vector (mu_3, mu_8, ..., mu_{N^2-1}) of Cartan-direction coefficients.
class ModuliVector {
   public:
    ModuliVector(int n, std::vector<double> mu) : n_(n), mu_(std::move(mu)) {
        if (n < 2) throw Error(ErrorKind::InvalidDimension, "moduli vector needs N >= 2");
        if (static_cast<int>(mu_.size()) != n - 1) {
            throw Error(ErrorKind::DimensionMismatch, "moduli vector must have N-1 components");
        }
        double sq = 0.0;
        for (double v : mu_) sq += v * v;
        if (std::abs(std::sqrt(sq) - 1.0) > 1e-10) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "moduli vector norm is " << std::sqrt(sq) << ", expected 1";
            throw Error(ErrorKind::Constraint, msg.str());
        }
    }

    static ModuliVector qutrit(const QutritModuli &m) { return ModuliVector(3, {m.mu3(), m.mu8()}); }

    int dim() const { return n_; }
    const std::vector<double> &mu() const { return mu_; }

   private:
    int n_;
    std::vector<double> mu_;
};

/// Diagonal of (1/N)(I + kappa sum_s mu_s lambda_s) over the Cartan generators,
/// in the basis order (not sorted).
inline std::vector<double> moduli_diagonal(const ModuliVector &mu) {
    const int n = mu.dim();
    const double kappa = kernel_kappa(n);
    std::vector<double> diag(static_cast<std::size_t>(n), 1.0);
    for (int k = 1; k < n; ++k) {
        const double c = kappa * mu.mu()[static_cast<std::size_t>(k - 1)] * std::sqrt(2.0 / (double(k) * (k + 1)));
        for (int j = 0; j < k; ++j) diag[static_cast<std::size_t>(j)] += c;
        diag[static_cast<std::size_t>(k)] -= k * c;
    }
    for (double &d : diag) d /= n;
    return diag;
}

inline SWKernelSpectrum kernel_from_moduli(const ModuliVector &mu) { return SWKernelSpectrum(moduli_diagonal(mu)); }

/// Delta = U diag(pi) U^dagger.
inline HermitianOperator assemble_kernel(const SWKernelSpectrum &pi, const CMatrix &u) {
    if (u.rows() != pi.dim() || u.cols() != pi.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "unitary and kernel spectrum dimensions differ");
    }
    require_unitary(u, "kernel frame");
    return HermitianOperator(u * diagonal_matrix(pi.pi().values()) * u.adjoint(), 1e-10);
}

}  // namespace onc

#endif  // ONC_SW_KERNEL_HPP
