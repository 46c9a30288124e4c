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

#ifndef ONC_RANDOM_ENSEMBLES_HPP
#define ONC_RANDOM_ENSEMBLES_HPP

#include <cstdint>
#include <random>

#include "onc/matrix_core.hpp"

namespace onc {

/// Random source identified by (base seed, stream index). Equal identities
/// yield identical sequences; distinct indices are seeded through
/// std::seed_seq, so substreams are independent for Monte Carlo purposes.
/// Not thread-safe: each worker owns its own stream.
class SeededStream {
   public:
    SeededStream(std::uint64_t base_seed, std::uint64_t stream_index)
        : base_seed_(base_seed), stream_index_(stream_index), engine_(make_engine(base_seed, stream_index)) {}

    std::uint64_t base_seed() const { return base_seed_; }
    std::uint64_t stream_index() const { return stream_index_; }

    /// Independent stream derived from this one's identity (not its state).
    SeededStream child(std::uint64_t index) const { return SeededStream(splitmix64(base_seed_ ^ splitmix64(stream_index_)), index); }

    double normal() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }

    /// Standard complex normal: E|z|^2 = 1.
    Complex complex_normal() {
        const double re = normal_(engine_);
        const double im = normal_(engine_);
        return Complex(re, im) * M_SQRT1_2;
    }

    std::mt19937_64 &engine() { return engine_; }

   private:
    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    static std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t index) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
        return std::mt19937_64(seq);
    }

    std::uint64_t base_seed_;
    std::uint64_t stream_index_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// N x N matrix of i.i.d. standard complex normal entries.
inline CMatrix ginibre(int n, SeededStream &stream) {
    if (n < 1) throw Error(ErrorKind::InvalidDimension, "Ginibre matrix needs N >= 1");
    CMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = stream.complex_normal();
    return g;
}

/// Haar-distributed element of U(N): QR of a Ginibre matrix with the phases
/// of diag(R) moved into Q.
inline CMatrix haar_unitary(int n, SeededStream &stream) {
    if (n < 2) throw Error(ErrorKind::InvalidDimension, "Haar unitary needs N >= 2");
    const Eigen::MatrixXcd g = ginibre(n, stream);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        const double mag = std::abs(d);
        if (mag > 0.0) q.col(j) *= d / mag;
    }
    return q;
}

/// Haar element of SU(N): a U(N) sample with det^(1/N) divided out.
inline CMatrix haar_special_unitary(int n, SeededStream &stream) {
    CMatrix u = haar_unitary(n, stream);
    const Complex det = Eigen::MatrixXcd(u).determinant();
    u /= std::pow(det, 1.0 / n);
    return u;
}

/// Hilbert-Schmidt random state rho = G G^dagger / tr(G G^dagger).
inline DensityMatrix hs_density(int n, SeededStream &stream) {
    if (n < 2) throw Error(ErrorKind::InvalidDimension, "Hilbert-Schmidt state needs N >= 2");
    const CMatrix g = ginibre(n, stream);
    CMatrix w = g * g.adjoint();
    w /= w.trace().real();
    return DensityMatrix(std::move(w));
}

/// Descending spectrum of an HS state. Draws exactly what hs_density draws,
/// but skips validation and eigenvectors; this is the Monte Carlo hot path.
inline OrderedSpectrum hs_spectrum(int n, SeededStream &stream) {
    if (n < 2) throw Error(ErrorKind::InvalidDimension, "Hilbert-Schmidt state needs N >= 2");
    const CMatrix g = ginibre(n, stream);
    Eigen::MatrixXcd w = g * g.adjoint();
    const double tr = w.trace().real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(w, Eigen::EigenvaluesOnly);
    std::vector<double> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = solver.eigenvalues()[n - 1 - i] / tr;
    return OrderedSpectrum::descending(std::move(values));
}

}  // namespace onc

#endif  // ONC_RANDOM_ENSEMBLES_HPP
