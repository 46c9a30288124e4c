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

#ifndef ONC_WIGNER_EVAL_HPP
#define ONC_WIGNER_EVAL_HPP

#include <cmath>
#include <sstream>

#include "onc/matrix_core.hpp"
#include "onc/sw_kernel.hpp"

namespace onc {

/// Point of phase space, represented by a unitary coset representative.
/// Every quantity computed here is insensitive to the isotropy part of U.
class PhasePoint {
   public:
    explicit PhasePoint(CMatrix u) : u_(std::move(u)) { require_unitary(u_, "phase-space point"); }

    int dim() const { return static_cast<int>(u_.rows()); }
    const CMatrix &unitary() const { return u_; }

   private:
    CMatrix u_;
};

/// Nonnegative matrix with unit row and column sums.
class BistochasticMatrix {
   public:
    explicit BistochasticMatrix(RMatrix entries) : b_(std::move(entries)) {
        if (b_.rows() != b_.cols() || b_.rows() < 1) {
            throw Error(ErrorKind::InvalidDimension, "bistochastic matrix must be square");
        }
        if (b_.minCoeff() < -1e-14) throw Error(ErrorKind::Validation, "bistochastic matrix has a negative entry");
        const double row_err = (b_.rowwise().sum().array() - 1.0).abs().maxCoeff();
        const double col_err = (b_.colwise().sum().array() - 1.0).abs().maxCoeff();
        if (row_err > 1e-10 || col_err > 1e-10) {
            std::ostringstream msg;
            msg << "row/column sums deviate from 1 by " << std::max(row_err, col_err);
            throw Error(ErrorKind::Validation, msg.str());
        }
    }

    /// Permutation matrix with B(sigma[j], j) = 1.
    static BistochasticMatrix permutation(const std::vector<int> &sigma) {
        const auto n = static_cast<Eigen::Index>(sigma.size());
        RMatrix p = RMatrix::Zero(n, n);
        for (Eigen::Index j = 0; j < n; ++j) p(sigma[static_cast<std::size_t>(j)], j) = 1.0;
        return BistochasticMatrix(std::move(p));
    }

    int dim() const { return static_cast<int>(b_.rows()); }
    const RMatrix &matrix() const { return b_; }
    double operator()(int i, int j) const { return b_(i, j); }

   private:
    RMatrix b_;
};

/// W = tr(rho U diag(pi) U^dagger).
inline double wigner_trace(const DensityMatrix &rho, const SWKernelSpectrum &pi, const PhasePoint &omega) {
    const int n = rho.dim();
    if (pi.dim() != n || omega.dim() != n) throw Error(ErrorKind::DimensionMismatch, "state, kernel and phase point dimensions differ");
    // tr(rho U D U^dagger) = sum_j pi_j (U^dagger rho U)_jj
    const CMatrix &u = omega.unitary();
    double w = 0.0;
    for (int j = 0; j < n; ++j) {
        const Complex q = (u.col(j).adjoint() * rho.matrix() * u.col(j))(0, 0);
        w += pi[j] * q.real();
    }
    return w;
}

/// n-vector n_a = sum_s mu_s (1/2) tr(U lambda_s U^dagger lambda_a) over the
/// Cartan directions s.
inline RVector moduli_n_vector(const ModuliVector &mu, const PhasePoint &omega) {
    const int n = mu.dim();
    if (omega.dim() != n) throw Error(ErrorKind::DimensionMismatch, "moduli and phase point dimensions differ");
    const auto basis = gell_mann_basis(n);
    const CMatrix &u = omega.unitary();
    CMatrix rotated = CMatrix::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        rotated += mu.mu()[static_cast<std::size_t>(k - 1)] * basis[static_cast<std::size_t>(cartan_index(k + 1))].matrix();
    }
    rotated = u * rotated * u.adjoint();
    RVector nvec(n * n - 1);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        nvec[static_cast<Eigen::Index>(a)] = 0.5 * (rotated * basis[a].matrix()).trace().real();
    }
    return nvec;
}

/// W = (1/N)[1 + (N^2-1)/sqrt(N+1) (n, xi)]. Cross-check of the trace form
/// for the kernel (1/N) U (I + kappa sum mu_s lambda_s) U^dagger.
inline double wigner_bloch(const BlochVector &xi, const ModuliVector &mu, const PhasePoint &omega) {
    const int n = xi.dim();
    if (mu.dim() != n) throw Error(ErrorKind::DimensionMismatch, "Bloch vector and moduli dimensions differ");
    const RVector nvec = moduli_n_vector(mu, omega);
    return (1.0 + (double(n) * n - 1.0) / std::sqrt(n + 1.0) * nvec.dot(xi.xi())) / n;
}

/// B_ij = |U_ij|^2.
inline BistochasticMatrix unistochastic(const CMatrix &u) {
    require_unitary(u);
    return BistochasticMatrix(u.cwiseAbs2());
}

/// (r, B pi) = sum_ij B_ij r_i pi_j.
inline double birkhoff_form(const OrderedSpectrum &r, const OrderedSpectrum &pi, const BistochasticMatrix &b) {
    const int n = b.dim();
    if (r.size() != n || pi.size() != n) throw Error(ErrorKind::DimensionMismatch, "spectra and bistochastic matrix dimensions differ");
    double w = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += b(i, j) * pi[j];
        w += r[i] * row;
    }
    return w;
}

}  // namespace onc

#endif  // ONC_WIGNER_EVAL_HPP
