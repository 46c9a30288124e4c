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

#ifndef ONC_EXTREMA_HPP
#define ONC_EXTREMA_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "onc/matrix_core.hpp"
#include "onc/parallel.hpp"
#include "onc/random_ensembles.hpp"
#include "onc/sw_kernel.hpp"

namespace onc {

/// sigma[i] is the state eigenvalue index paired with kernel eigenvalue i.
using Permutation = std::vector<int>;

struct ExtremaResult {
    double w_minus = 0.0;
    double w_plus = 0.0;
    Permutation argmin;
    Permutation argmax;
};

namespace detail {

inline double paired_sum(const std::vector<double> &r, const std::vector<double> &pi, const Permutation &sigma) {
    double s = 0.0;
    for (std::size_t i = 0; i < pi.size(); ++i) s += pi[i] * r[static_cast<std::size_t>(sigma[i])];
    return s;
}

inline double tie_tolerance(const std::vector<double> &r, const std::vector<double> &pi) {
    double scale = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) scale += std::abs(r[i]) * std::abs(pi[i]);
    return 1e-12 * std::max(scale, 1.0);
}

/// Best value of sum_i pi[i] * r[rest[k]] over assignments of `rest` to the
/// kernel positions `from..N-1`, by the rearrangement inequality.
inline double best_completion(const std::vector<double> &r, const std::vector<double> &pi, std::size_t from,
                              std::vector<int> rest, bool maximize) {
    std::vector<double> tail_pi(pi.begin() + static_cast<std::ptrdiff_t>(from), pi.end());
    std::vector<double> tail_r;
    for (int k : rest) tail_r.push_back(r[static_cast<std::size_t>(k)]);
    std::sort(tail_pi.begin(), tail_pi.end());
    std::sort(tail_r.begin(), tail_r.end());
    if (!maximize) std::reverse(tail_r.begin(), tail_r.end());
    double s = 0.0;
    for (std::size_t k = 0; k < tail_pi.size(); ++k) s += tail_pi[k] * tail_r[k];
    return s;
}

/// Lexicographically smallest permutation attaining `target` (within `tol`).
inline Permutation lex_smallest_optimal(const std::vector<double> &r, const std::vector<double> &pi, double target,
                                        bool maximize, double tol) {
    const std::size_t n = pi.size();
    Permutation sigma;
    std::vector<int> unused(n);
    std::iota(unused.begin(), unused.end(), 0);
    double partial = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < unused.size(); ++c) {
            std::vector<int> rest = unused;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(c));
            const double head = partial + pi[i] * r[static_cast<std::size_t>(unused[c])];
            const double value = head + best_completion(r, pi, i + 1, rest, maximize);
            if (std::abs(value - target) <= tol) {
                sigma.push_back(unused[c]);
                partial = head;
                unused = std::move(rest);
                break;
            }
        }
    }
    return sigma;
}

}  // namespace detail

/// Global extrema of the Wigner function for a state with spectrum r:
/// W- = sum pi_i r_{N-i+1}, W+ = sum pi_i r_i (both descending).
inline ExtremaResult wigner_bounds(const OrderedSpectrum &r, const SWKernelSpectrum &kernel) {
    const int n = r.size();
    if (kernel.dim() != n) throw Error(ErrorKind::DimensionMismatch, "state and kernel spectra lengths differ");
    const OrderedSpectrum rd = r.order() == Order::Descending ? r : r.reversed();
    const auto &rv = rd.values();
    const auto &pv = kernel.pi().values();
    Permutation identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    Permutation reversal(identity.rbegin(), identity.rend());
    ExtremaResult out;
    out.w_plus = detail::paired_sum(rv, pv, identity);
    out.w_minus = detail::paired_sum(rv, pv, reversal);
    const double tol = detail::tie_tolerance(rv, pv);
    out.argmax = detail::lex_smallest_optimal(rv, pv, out.w_plus, true, tol);
    out.argmin = detail::lex_smallest_optimal(rv, pv, out.w_minus, false, tol);
    return out;
}

inline constexpr int kMaxBruteForceDim = 8;

/// Exhaustive min/max of sum_i pi_i r_{sigma(i)} over all N! permutations.
inline ExtremaResult permutation_bruteforce(const OrderedSpectrum &r, const OrderedSpectrum &pi) {
    const int n = r.size();
    if (pi.size() != n) throw Error(ErrorKind::DimensionMismatch, "spectra lengths differ");
    if (n > kMaxBruteForceDim) throw Error(ErrorKind::InvalidDimension, "permutation enumeration refused for N > 8");
    const auto &rv = r.values();
    const auto &pv = pi.values();
    Permutation sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    do {
        const double v = detail::paired_sum(rv, pv, sigma);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    // second pass in lexicographic order picks the first permutation in the tie class
    const double tol = detail::tie_tolerance(rv, pv);
    ExtremaResult out;
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        const double v = detail::paired_sum(rv, pv, sigma);
        if (out.argmin.empty() && v <= lo + tol) out.argmin = sigma;
        if (out.argmax.empty() && v >= hi - tol) out.argmax = sigma;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    out.w_minus = lo;
    out.w_plus = hi;
    return out;
}

/// Unitary V_rho P_sigma W_Delta^dagger at which tr(rho U diag(pi) U^dagger)
/// equals sum_i pi_i r_{sigma(i)}. `state_frame` holds the eigenvectors of
/// rho in descending order; `kernel_frame` those of the kernel (identity when
/// the kernel is given by its spectrum).
inline CMatrix witness_unitary(const CMatrix &state_frame, const Permutation &sigma, const CMatrix &kernel_frame) {
    const auto n = static_cast<Eigen::Index>(sigma.size());
    CMatrix p = CMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) p(sigma[static_cast<std::size_t>(j)], j) = 1.0;
    return state_frame * p * kernel_frame.adjoint();
}

inline CMatrix witness_unitary(const CMatrix &state_frame, const Permutation &sigma) {
    return witness_unitary(state_frame, sigma, CMatrix::Identity(state_frame.rows(), state_frame.cols()));
}

/// ||[A, B]||_F.
inline double criticality_residual(const HermitianOperator &a, const HermitianOperator &orbit_b) {
    if (a.dim() != orbit_b.dim()) throw Error(ErrorKind::DimensionMismatch, "operators have different dimensions");
    const CMatrix c = a.matrix() * orbit_b.matrix() - orbit_b.matrix() * a.matrix();
    return c.norm();
}

struct OrbitOptimizerOptions {
    int max_iterations = 20000;
    /// Stop when ||[A, gBg^dagger]||_F <= gradient_tolerance * ||A|| ||B||.
    double gradient_tolerance = 1e-10;
    unsigned threads = 1;
};

struct OrbitExtremaEstimate {
    double min_value = 0.0;
    double max_value = 0.0;
    CMatrix argmin;  // g attaining min_value
    CMatrix argmax;
    double min_residual = 0.0;  // ||[A, gBg^dagger]||_F at the optimizers
    double max_residual = 0.0;
    bool converged = false;     // every restart met the gradient tolerance
    int restarts = 0;
};

namespace detail {

struct Ascent {
    double value;
    CMatrix g;
    double residual;
    bool converged;
};

/// Riemannian steepest ascent of sense * tr(A g B g^dagger) on U(N) with
/// retraction g <- exp(t sense [A, M]) g, M = g B g^dagger, and Armijo
/// backtracking on t.
/// Replaces g by W_A P W_B^dagger, where P pairs each eigenvector of A with
/// the eigenvector of B it overlaps most under g (greedy on |overlap|^2).
inline CMatrix snap_to_critical(const CMatrix &a, const CMatrix &b, const CMatrix &g) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ea{Eigen::MatrixXcd(a)}, eb{Eigen::MatrixXcd(b)};
    const Eigen::MatrixXcd wa = ea.eigenvectors(), wb = eb.eigenvectors();
    const Eigen::MatrixXd overlap = (wa.adjoint() * g * wb).cwiseAbs2();
    const Eigen::Index n = overlap.rows();
    std::vector<bool> row_used(static_cast<std::size_t>(n), false), col_used(static_cast<std::size_t>(n), false);
    CMatrix p = CMatrix::Zero(n, n);
    for (Eigen::Index round = 0; round < n; ++round) {
        Eigen::Index bi = -1, bj = -1;
        double best = -1.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (row_used[static_cast<std::size_t>(i)]) continue;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (!col_used[static_cast<std::size_t>(j)] && overlap(i, j) > best) {
                    best = overlap(i, j);
                    bi = i;
                    bj = j;
                }
            }
        }
        row_used[static_cast<std::size_t>(bi)] = col_used[static_cast<std::size_t>(bj)] = true;
        p(bi, bj) = 1.0;
    }
    return wa * p * wb.adjoint();
}

inline Ascent orbit_ascent(const CMatrix &a, const CMatrix &b, CMatrix g, double sense,
                           const OrbitOptimizerOptions &options) {
    const auto phi = [&](const CMatrix &u) { return (a * u * b * u.adjoint()).trace().real(); };
    const double scale = std::max(a.norm() * b.norm(), std::numeric_limits<double>::min());
    const Complex i_unit(0.0, 1.0);
    double value = phi(g);
    double step = 1.0 / scale;
    double residual = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    for (int it = 0; it < options.max_iterations; ++it) {
        const CMatrix m = g * b * g.adjoint();
        const CMatrix c = a * m - m * a;  // skew-Hermitian
        residual = c.norm();
        if (residual <= options.gradient_tolerance * scale) return {value, std::move(g), residual, true};
        if (residual <= 1e-3 * scale) {
            // Close to a critical point A and gBg^dagger almost commute; snap to the exact one.
            CMatrix snapped = snap_to_critical(a, b, g);
            const CMatrix sm = snapped * b * snapped.adjoint();
            const double snapped_residual = (a * sm - sm * a).norm();
            const double snapped_value = phi(snapped);
            const double slack = 100.0 * residual * residual / scale + 64.0 * eps * scale;
            if (snapped_residual <= options.gradient_tolerance * scale && sense * (snapped_value - value) >= -slack) {
                return {snapped_value, std::move(snapped), snapped_residual, true};
            }
        }
        // exp(t sense C) = V exp(-i t sense diag(h)) V^dagger with H = i C Hermitian
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(Eigen::MatrixXcd(i_unit * c));
        const Eigen::MatrixXcd &v = eig.eigenvectors();
        const Eigen::VectorXd &h = eig.eigenvalues();
        const double slope = residual * residual;
        step = std::min(step * 2.0, 16.0 / scale);
        bool accepted = false;
        for (int backtrack = 0; backtrack < 60; ++backtrack) {
            Eigen::VectorXcd phases(h.size());
            for (Eigen::Index k = 0; k < h.size(); ++k) phases[k] = std::exp(-i_unit * (step * sense * h[k]));
            CMatrix trial = v * phases.asDiagonal() * v.adjoint() * g;
            const double trial_value = phi(trial);
            bool accept = sense * (trial_value - value) >= 0.5 * step * slope;
            if (!accept && 0.5 * step * slope <= 64.0 * eps * std::max(1.0, std::abs(value))) {
                // Armijo gain is below rounding of Phi; fall back to shrinking the gradient.
                const CMatrix tm = trial * b * trial.adjoint();
                accept = sense * (trial_value - value) >= -64.0 * eps * std::max(1.0, std::abs(value)) &&
                         (a * tm - tm * a).norm() < residual;
            }
            if (accept) {
                g = std::move(trial);
                value = trial_value;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;  // no ascent possible at working precision
    }
    const CMatrix m = g * b * g.adjoint();
    residual = (a * m - m * a).norm();
    return {value, std::move(g), residual, residual <= options.gradient_tolerance * scale};
}

}  // namespace detail

/// Random-restart estimates of min and max of tr(A g B g^dagger) over
/// g in U(N). Restart k starts from a Haar sample of stream.child(k); the
/// best-value reduction is ordered by restart index, so results depend only
/// on the stream identity and the restart count.
inline OrbitExtremaEstimate phi_orbit_extrema(const HermitianOperator &a, const HermitianOperator &b, int restarts,
                                              const SeededStream &stream,
                                              const OrbitOptimizerOptions &options = {}) {
    if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "operators have different dimensions");
    if (restarts < 1) throw Error(ErrorKind::Domain, "restarts must be >= 1");
    const int n = a.dim();
    struct Pair {
        detail::Ascent lo, hi;
    };
    auto runs = map_blocks<std::optional<Pair>>(static_cast<std::uint64_t>(restarts), options.threads,
                                                [&](std::uint64_t k) -> std::optional<Pair> {
                                                    SeededStream s = stream.child(k);
                                                    const CMatrix g0 = n >= 2 ? haar_unitary(n, s) : CMatrix::Identity(n, n);
                                                    return Pair{detail::orbit_ascent(a.matrix(), b.matrix(), g0, -1.0, options),
                                                                detail::orbit_ascent(a.matrix(), b.matrix(), g0, 1.0, options)};
                                                });
    OrbitExtremaEstimate out;
    out.restarts = restarts;
    out.converged = true;
    out.min_value = std::numeric_limits<double>::infinity();
    out.max_value = -out.min_value;
    for (auto &run : runs) {
        out.converged = out.converged && run->lo.converged && run->hi.converged;
        if (run->lo.value < out.min_value) {
            out.min_value = run->lo.value;
            out.argmin = run->lo.g;
            out.min_residual = run->lo.residual;
        }
        if (run->hi.value > out.max_value) {
            out.max_value = run->hi.value;
            out.argmax = run->hi.g;
            out.max_residual = run->hi.residual;
        }
    }
    return out;
}

/// Closed-form bracket <mu(A) desc, mu(B) asc> <= Phi <= <mu(A) desc, mu(B) desc>.
inline std::pair<double, double> phi_orbit_bounds(const HermitianOperator &a, const HermitianOperator &b) {
    const auto sa = eigenvalues_descending(a.matrix()).values();
    const auto sb = eigenvalues_descending(b.matrix()).values();
    double lo = 0.0, hi = 0.0;
    const std::size_t n = sa.size();
    for (std::size_t i = 0; i < n; ++i) {
        hi += sa[i] * sb[i];
        lo += sa[i] * sb[n - 1 - i];
    }
    return {lo, hi};
}

}  // namespace onc

#endif  // ONC_EXTREMA_HPP
