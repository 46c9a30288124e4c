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

#ifndef ONC_MATRIX_CORE_HPP
#define ONC_MATRIX_CORE_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "onc/error.hpp"

namespace onc {

using Complex = std::complex<double>;
using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RVector = Eigen::VectorXd;

namespace tol {
inline constexpr double kConstruction = 1e-12;
inline constexpr double kRoundTrip = 1e-10;
inline constexpr double kPsdSlack = 1e-10;
inline constexpr double kUnitary = 1e-10;
}  // namespace tol

inline double frobenius(const CMatrix &m) { return m.norm(); }

inline bool is_unitary(const CMatrix &u, double tolerance = tol::kUnitary) {
    if (u.rows() != u.cols() || u.rows() == 0) return false;
    const CMatrix gram = u.adjoint() * u;
    return (gram - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tolerance;
}

inline void require_unitary(const CMatrix &u, const char *what = "matrix") {
    if (!is_unitary(u)) {
        throw Error(ErrorKind::NotUnitary, std::string(what) + " is not unitary within 1e-10");
    }
}

/// Dense N x N complex Hermitian matrix. The stored matrix is the exact
/// Hermitian part of the input, which must already be Hermitian to 1e-12.
class HermitianOperator {
   public:
    HermitianOperator() = default;

    explicit HermitianOperator(CMatrix entries, double tolerance = tol::kConstruction) {
        if (entries.rows() != entries.cols() || entries.rows() < 1) {
            throw Error(ErrorKind::InvalidDimension, "Hermitian operator must be a non-empty square matrix");
        }
        const auto n = entries.rows();
        double worst = 0.0;
        Eigen::Index wi = 0, wj = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = i; j < n; ++j) {
                const double d = std::abs(entries(i, j) - std::conj(entries(j, i)));
                if (d > worst) {
                    worst = d;
                    wi = i;
                    wj = j;
                }
            }
        }
        if (worst > tolerance) {
            std::ostringstream msg;
            msg << "entries (" << wi << "," << wj << ") and (" << wj << "," << wi
                << ") violate Hermiticity by " << worst;
            throw Error(ErrorKind::NotHermitian, msg.str());
        }
        m_ = (entries + entries.adjoint()) * 0.5;
    }

    int dim() const { return static_cast<int>(m_.rows()); }
    const CMatrix &matrix() const { return m_; }
    Complex operator()(int i, int j) const { return m_(i, j); }
    double trace() const { return m_.trace().real(); }

   private:
    CMatrix m_;
};

enum class Order { Descending, Ascending };

/// Real eigenvalue vector kept monotone in a declared direction.
class OrderedSpectrum {
   public:
    OrderedSpectrum() = default;

    OrderedSpectrum(std::vector<double> values, Order order) : values_(std::move(values)), order_(order) {
        for (std::size_t i = 1; i < values_.size(); ++i) {
            const bool ok = order_ == Order::Descending ? values_[i - 1] >= values_[i] : values_[i - 1] <= values_[i];
            if (!ok) throw Error(ErrorKind::Validation, "spectrum is not monotone in its declared order");
        }
    }

    static OrderedSpectrum descending(std::vector<double> values) {
        std::stable_sort(values.begin(), values.end(), std::greater<>());
        return OrderedSpectrum(std::move(values), Order::Descending);
    }

    static OrderedSpectrum ascending(std::vector<double> values) {
        std::stable_sort(values.begin(), values.end());
        return OrderedSpectrum(std::move(values), Order::Ascending);
    }

    /// Same values in the opposite order.
    OrderedSpectrum reversed() const {
        return OrderedSpectrum(std::vector<double>(values_.rbegin(), values_.rend()),
                               order_ == Order::Descending ? Order::Ascending : Order::Descending);
    }

    const std::vector<double> &values() const { return values_; }
    Order order() const { return order_; }
    int size() const { return static_cast<int>(values_.size()); }
    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    double sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }
    double sum_of_squares() const {
        return std::inner_product(values_.begin(), values_.end(), values_.begin(), 0.0);
    }

   private:
    std::vector<double> values_;
    Order order_ = Order::Descending;
};

struct Eigensystem {
    OrderedSpectrum values;  // descending
    CMatrix vectors;         // columns match `values`
};

/// A = U diag(values) U^dagger with values descending.
inline Eigensystem eig_hermitian(const HermitianOperator &a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(a.matrix()));
    const Eigen::VectorXd &ev = solver.eigenvalues();
    const auto n = static_cast<std::size_t>(ev.size());
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t l, std::size_t r) { return ev[l] > ev[r]; });
    std::vector<double> values(n);
    CMatrix vectors(a.dim(), a.dim());
    for (std::size_t k = 0; k < n; ++k) {
        values[k] = ev[static_cast<Eigen::Index>(idx[k])];
        vectors.col(static_cast<Eigen::Index>(k)) = solver.eigenvectors().col(static_cast<Eigen::Index>(idx[k]));
    }
    return {OrderedSpectrum(std::move(values), Order::Descending), std::move(vectors)};
}

inline OrderedSpectrum eigenvalues_descending(const CMatrix &hermitian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(hermitian), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd &ev = solver.eigenvalues();
    return OrderedSpectrum::descending(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

/// Quantum state: Hermitian, unit trace, positive semidefinite up to -1e-10.
class DensityMatrix {
   public:
    DensityMatrix() = default;

    explicit DensityMatrix(HermitianOperator op) : op_(std::move(op)) {
        const double tr = op_.trace();
        if (std::abs(tr - 1.0) > tol::kConstruction) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "trace is " << tr << ", expected 1";
            throw Error(ErrorKind::Validation, msg.str());
        }
        const auto spectrum = eigenvalues_descending(op_.matrix());
        const double lowest = spectrum[spectrum.size() - 1];
        if (lowest < -tol::kPsdSlack) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "not positive semidefinite: minimum eigenvalue " << lowest;
            throw Error(ErrorKind::Validation, msg.str());
        }
    }

    explicit DensityMatrix(CMatrix entries) : DensityMatrix(HermitianOperator(std::move(entries))) {}

    int dim() const { return op_.dim(); }
    const CMatrix &matrix() const { return op_.matrix(); }
    const HermitianOperator &op() const { return op_; }

   private:
    HermitianOperator op_;
};

/// sqrt(N(N^2-1)/2), the kernel normalization constant.
inline double kernel_kappa(int n) { return std::sqrt(n * (double(n) * n - 1.0) / 2.0); }

/// sqrt(N(N-1)/2), the Bloch-form coefficient of a state.
inline double bloch_coefficient(int n) { return std::sqrt(n * (n - 1.0) / 2.0); }

/// Zero-based position of the diagonal generator lambda_{k^2-1}, k = 2..N.
inline int cartan_index(int level) { return level * level - 2; }

/// Generalized Gell-Mann matrices in the standard ordering: for each level
/// k = 2..N the symmetric/antisymmetric pairs coupling j < k, then the
/// diagonal generator lambda_{k^2-1}. Normalized to tr(l_a l_b) = 2 delta_ab.
inline std::vector<HermitianOperator> gell_mann_basis(int n) {
    if (n < 2) throw Error(ErrorKind::InvalidDimension, "Gell-Mann basis needs N >= 2");
    std::vector<HermitianOperator> basis;
    basis.reserve(static_cast<std::size_t>(n * n - 1));
    const Complex i_unit(0.0, 1.0);
    for (int k = 1; k < n; ++k) {
        for (int j = 0; j < k; ++j) {
            CMatrix sym = CMatrix::Zero(n, n);
            sym(j, k) = 1.0;
            sym(k, j) = 1.0;
            basis.emplace_back(std::move(sym));
            CMatrix anti = CMatrix::Zero(n, n);
            anti(j, k) = -i_unit;
            anti(k, j) = i_unit;
            basis.emplace_back(std::move(anti));
        }
        CMatrix diag = CMatrix::Zero(n, n);
        const double scale = std::sqrt(2.0 / (double(k) * (k + 1)));
        for (int j = 0; j < k; ++j) diag(j, j) = scale;
        diag(k, k) = -k * scale;
        basis.emplace_back(std::move(diag));
    }
    return basis;
}

/// Coefficients of a state in rho = (1/N)(I + sqrt(N(N-1)/2) (xi, lambda)).
class BlochVector {
   public:
    BlochVector() = default;

    BlochVector(int n, RVector xi) : n_(n), xi_(std::move(xi)) {
        if (n < 2) throw Error(ErrorKind::InvalidDimension, "Bloch vector needs N >= 2");
        if (xi_.size() != n * n - 1) {
            throw Error(ErrorKind::DimensionMismatch, "Bloch vector must have N^2-1 components");
        }
    }

    int dim() const { return n_; }
    const RVector &xi() const { return xi_; }
    double operator[](int a) const { return xi_[a]; }
    double norm() const { return xi_.norm(); }

   private:
    int n_ = 0;
    RVector xi_;
};

inline BlochVector to_bloch(const DensityMatrix &rho) {
    const int n = rho.dim();
    if (n < 2) throw Error(ErrorKind::InvalidDimension, "Bloch vector needs N >= 2");
    const auto basis = gell_mann_basis(n);
    const double scale = n / (2.0 * bloch_coefficient(n));
    RVector xi(n * n - 1);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        xi[static_cast<Eigen::Index>(a)] = scale * (rho.matrix() * basis[a].matrix()).trace().real();
    }
    return BlochVector(n, std::move(xi));
}

/// Hermitian, unit-trace reconstruction without the positivity check.
inline HermitianOperator bloch_operator(const BlochVector &xi) {
    const int n = xi.dim();
    const auto basis = gell_mann_basis(n);
    CMatrix m = CMatrix::Identity(n, n);
    const double c = bloch_coefficient(n);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        m += (c * xi[static_cast<int>(a)]) * basis[a].matrix();
    }
    return HermitianOperator(m / double(n));
}

inline DensityMatrix from_bloch(const BlochVector &xi) { return DensityMatrix(bloch_operator(xi)); }

inline CMatrix diagonal_matrix(const std::vector<double> &values) {
    const auto n = static_cast<Eigen::Index>(values.size());
    CMatrix d = CMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) d(i, i) = values[static_cast<std::size_t>(i)];
    return d;
}

}  // namespace onc

#endif  // ONC_MATRIX_CORE_HPP
