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

#ifndef ONC_TOOLS_CLI_HPP
#define ONC_TOOLS_CLI_HPP

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "manifest.hpp"
#include "onc/onc.hpp"

namespace onc::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kNumerical = 3;
inline constexpr int kUnwritable = 4;

/// Raised for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WriteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a --verify check fails.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Accepts "p/q" or a decimal and returns it times pi.
inline double parse_zeta_over_pi(const std::string &text) {
    try {
        const auto slash = text.find('/');
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const double v = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return v * std::numbers::pi;
        }
        const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        const double p = std::stod(num, &used);
        if (used != num.size()) throw std::invalid_argument(text);
        const double q = std::stod(den, &used);
        if (used != den.size() || q == 0.0) throw std::invalid_argument(text);
        return std::numbers::pi * p / q;
    } catch (const std::logic_error &) {
        throw UsageError("--zeta-over-pi expects a rational such as 1/6, got '" + text + "'");
    }
}

inline std::uint64_t seed_from_env_or(std::uint64_t fallback) {
    const char *env = std::getenv("ONC_SEED");
    if (env == nullptr || *env == '\0') return fallback;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
        return v;
    } catch (const std::logic_error &) {
        throw UsageError(std::string("ONC_SEED must be an unsigned integer, got '") + env + "'");
    }
}

/// Kernel selection shared by several subcommands.
struct KernelFlags {
    std::optional<double> zeta;
    std::optional<std::string> zeta_over_pi;
    std::optional<std::string> kernel_file;

    void attach(CLI::App *cmd) {
        auto *z = cmd->add_option("--zeta", zeta, "qutrit kernel moduli angle in radians, [0, pi/3]");
        auto *zp = cmd->add_option("--zeta-over-pi", zeta_over_pi, "zeta as a multiple of pi, e.g. 1/6");
        auto *kf = cmd->add_option("--kernel-file", kernel_file, "kernel spectrum JSON {\"dim\", \"pi\", \"zeta\"?}");
        z->excludes(zp)->excludes(kf);
        zp->excludes(kf);
    }

    bool given() const { return zeta || zeta_over_pi || kernel_file; }

    std::optional<double> angle() const {
        if (zeta) return zeta;
        if (zeta_over_pi) return parse_zeta_over_pi(*zeta_over_pi);
        return std::nullopt;
    }

    /// Kernel for dimension n; the qubit kernel is unique and needs no flag.
    io::KernelSpec resolve(int n, RunManifest &manifest) const {
        if (kernel_file) {
            manifest.add_input(*kernel_file);
            auto spec = io::kernel_from_json(io::read_json_file(*kernel_file));
            if (spec.spectrum.dim() != n) throw UsageError("kernel dimension does not match the state dimension");
            return spec;
        }
        if (auto z = angle()) {
            if (n != 3) throw UsageError("--zeta applies to qutrits (dimension 3) only");
            return {qutrit_kernel_spectrum(*z), z};
        }
        if (n == 2) return {qubit_kernel_spectrum(), std::nullopt};
        throw UsageError("dimension " + std::to_string(n) + " needs --zeta or --kernel-file");
    }
};

inline void write_text(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw WriteError("cannot write " + path);
    file << text;
    file.close();
    if (!file) throw WriteError("cannot write " + path);
}

inline void finish_manifest(RunManifest &manifest, const std::string &out_path, const std::string &text,
                            const std::string &manifest_path) {
    std::string target = manifest_path;
    if (!out_path.empty() && out_path != "-") {
        manifest.outputs.emplace_back(out_path, sha256_hex(text));
        if (target.empty()) target = out_path + ".manifest.json";
    }
    if (target.empty()) return;
    std::ofstream file(target, std::ios::binary | std::ios::trunc);
    if (!file) throw WriteError("cannot write " + target);
    file << manifest.to_json().dump(2) << '\n';
    if (!file) throw WriteError("cannot write " + target);
}

inline nlohmann::json permutation_json(const Permutation &sigma) {
    nlohmann::json j = nlohmann::json::array();
    for (int s : sigma) j.push_back(s + 1);
    return j;
}

/// Runs the command line; returns the process exit code. Data goes to `out`,
/// diagnostics to `err`.
inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Wigner-function nonclassicality indicator toolkit", "onc"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ONC_VERSION);

    RunManifest manifest;
    manifest.command_line = args;

    std::optional<std::uint64_t> seed_flag;
    unsigned threads = default_thread_count();
    std::string manifest_path;
    const auto common = [&](CLI::App *cmd) {
        cmd->add_option("--manifest", manifest_path, "write a run manifest to this path");
    };
    const auto seeded = [&](CLI::App *cmd) {
        cmd->add_option("--seed", seed_flag, "random seed (default: $ONC_SEED, else 42)");
        cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    };

    // qindicator
    auto *qind = app.add_subcommand("qindicator", "global nonclassicality indicator Q_N");
    int q_dim = 0;
    std::string q_method = "closed";
    std::uint64_t q_samples = 1000000;
    double q_tol = 1e-12;
    bool q_json = false;
    KernelFlags q_kernel;
    qind->add_option("--dim", q_dim, "Hilbert space dimension N")->required()->check(CLI::Range(2, 64));
    qind->add_option("--method", q_method, "closed | quadrature | mc")->check(CLI::IsMember({"closed", "quadrature", "mc"}));
    auto *q_samples_opt = qind->add_option("--samples", q_samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
    qind->add_option("--tol", q_tol, "quadrature absolute tolerance")->check(CLI::PositiveNumber);
    qind->add_flag("--json", q_json, "emit JSON (always on; accepted for scripts)");
    q_kernel.attach(qind);
    seeded(qind);
    common(qind);

    // bounds
    auto *bnd = app.add_subcommand("bounds", "global Wigner extrema of a state");
    std::string b_state;
    bool b_verify = false;
    int b_restarts = 20;
    KernelFlags b_kernel;
    bnd->add_option("--state-file", b_state, "density matrix JSON")->required();
    bnd->add_flag("--verify", b_verify, "cross-check with random-restart optimization over U(N)");
    bnd->add_option("--restarts", b_restarts, "optimizer restarts for --verify")->check(CLI::PositiveNumber);
    b_kernel.attach(bnd);
    seeded(bnd);
    common(bnd);

    // wigner-eval
    auto *wev = app.add_subcommand("wigner-eval", "Wigner function at one phase-space point");
    std::string w_state;
    std::optional<std::string> w_unitary;
    KernelFlags w_kernel;
    wev->add_option("--state-file", w_state, "density matrix JSON")->required();
    wev->add_option("--unitary-file", w_unitary, "phase-space point as a unitary matrix JSON (default: Haar sample)");
    w_kernel.attach(wev);
    seeded(wev);
    common(wev);

    // region
    auto *reg = app.add_subcommand("region", "qutrit orbit-space boundary curves as CSV");
    int r_resolution = 512;
    std::string r_out = "-";
    KernelFlags r_kernel;
    reg->add_option("--resolution", r_resolution, "samples per curve")->check(CLI::Range(2, 10000000));
    reg->add_option("--out", r_out, "output CSV path ('-' for stdout)");
    auto *rz = reg->add_option("--zeta", r_kernel.zeta, "kernel moduli angle in radians");
    auto *rzp = reg->add_option("--zeta-over-pi", r_kernel.zeta_over_pi, "zeta as a multiple of pi");
    rz->excludes(rzp);
    common(reg);

    // sweep
    auto *swp = app.add_subcommand("sweep", "Q_3 over the kernel moduli range as CSV");
    int s_steps = 1001;
    std::string s_out = "-";
    double s_tol = 1e-12;
    swp->add_option("--steps", s_steps, "grid points on [0, pi/3]")->check(CLI::Range(2, 10000000));
    swp->add_option("--out", s_out, "output CSV path ('-' for stdout)");
    swp->add_option("--tol", s_tol, "quadrature absolute tolerance")->check(CLI::PositiveNumber);
    common(swp);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, err, err);
        return kUsage;
    }

    try {
        const auto seed = [&] {
            const std::uint64_t s = seed_flag ? *seed_flag : seed_from_env_or(42);
            manifest.seed = s;
            return s;
        };

        if (qind->parsed()) {
            const bool mc = q_method == "mc";
            if (q_samples_opt->count() > 0 && !mc) throw UsageError("--samples applies to --method mc only");
            if (q_kernel.angle() && q_dim != 3) throw UsageError("--zeta applies to --dim 3 only");
            IndicatorResult result;
            if (mc) {
                const auto kernel = q_kernel.resolve(q_dim, manifest);
                result = q_monte_carlo(kernel.spectrum, q_samples, seed(), threads);
                result.meta.zeta = kernel.zeta;
            } else if (q_dim == 2) {
                if (q_kernel.given()) q_kernel.resolve(2, manifest);
                result = q_method == "closed" ? q2_closed() : q2_quadrature(q_tol);
            } else if (q_dim == 3) {
                const auto kernel = q_kernel.resolve(3, manifest);
                if (!kernel.zeta) throw UsageError("closed-form and quadrature Q_3 need the kernel angle (--zeta or \"zeta\" in the kernel file)");
                result = q_method == "closed" ? q3_closed(*kernel.zeta) : q3_quadrature(*kernel.zeta, q_tol);
            } else {
                throw UsageError("dimension " + std::to_string(q_dim) + " supports --method mc only");
            }
            const std::string text = io::result_to_json(result).dump() + "\n";
            out << text;
            finish_manifest(manifest, "", text, manifest_path);
            return kOk;
        }

        if (bnd->parsed()) {
            manifest.add_input(b_state);
            const DensityMatrix rho = io::density_from_json(io::read_json_file(b_state));
            const auto kernel = b_kernel.resolve(rho.dim(), manifest);
            const auto eig = eig_hermitian(rho.op());
            const auto bounds = wigner_bounds(eig.values, kernel.spectrum);
            nlohmann::json j;
            j["dim"] = rho.dim();
            j["spectrum"] = eig.values.values();
            j["kernel"] = kernel.spectrum.pi().values();
            j["w_minus"] = bounds.w_minus;
            j["w_plus"] = bounds.w_plus;
            j["argmin_permutation"] = permutation_json(bounds.argmin);
            j["argmax_permutation"] = permutation_json(bounds.argmax);
            bool verified = true;
            if (b_verify) {
                const HermitianOperator b_op(diagonal_matrix(kernel.spectrum.pi().values()));
                OrbitOptimizerOptions options;
                options.threads = threads;
                const auto est = phi_orbit_extrema(rho.op(), b_op, b_restarts, SeededStream(seed(), 0), options);
                const double scale = rho.matrix().norm() * b_op.matrix().norm();
                const double limit = 1e-6 * scale;
                const bool ok = std::abs(est.min_value - bounds.w_minus) <= 1e-6 &&
                                std::abs(est.max_value - bounds.w_plus) <= 1e-6 && est.min_residual < limit &&
                                est.max_residual < limit;
                j["verify"] = {{"restarts", b_restarts},
                               {"min_estimate", est.min_value},
                               {"max_estimate", est.max_value},
                               {"min_residual", est.min_residual},
                               {"max_residual", est.max_residual},
                               {"residual_limit", limit},
                               {"converged", est.converged},
                               {"agrees", ok}};
                verified = ok;
            }
            const std::string text = j.dump(2) + "\n";
            out << text;
            finish_manifest(manifest, "", text, manifest_path);
            if (!verified) throw VerificationFailure("optimizer estimates disagree with the closed-form bounds beyond 1e-6");
            return kOk;
        }

        if (wev->parsed()) {
            manifest.add_input(w_state);
            const DensityMatrix rho = io::density_from_json(io::read_json_file(w_state));
            const auto kernel = w_kernel.resolve(rho.dim(), manifest);
            CMatrix u;
            if (w_unitary) {
                manifest.add_input(*w_unitary);
                u = io::matrix_from_json(io::read_json_file(*w_unitary));
                if (u.rows() != rho.dim()) throw UsageError("unitary dimension does not match the state dimension");
            } else {
                SeededStream stream(seed(), 0);
                u = haar_unitary(rho.dim(), stream);
            }
            const PhasePoint omega(u);
            const auto bounds = wigner_bounds(eig_hermitian(rho.op()).values, kernel.spectrum);
            nlohmann::json j;
            j["dim"] = rho.dim();
            j["w"] = wigner_trace(rho, kernel.spectrum, omega);
            j["w_minus"] = bounds.w_minus;
            j["w_plus"] = bounds.w_plus;
            j["unitary_source"] = w_unitary ? "file" : "haar";
            if (!w_unitary) j["unitary"] = io::matrix_to_json(u);
            const std::string text = j.dump(2) + "\n";
            out << text;
            finish_manifest(manifest, "", text, manifest_path);
            return kOk;
        }

        if (reg->parsed()) {
            const double zeta = r_kernel.angle().value_or(0.0);
            const std::string text = io::curves_csv(boundary_curves(zeta, r_resolution));
            write_text(r_out, text, out);
            finish_manifest(manifest, r_out, text, manifest_path);
            return kOk;
        }

        if (swp->parsed()) {
            const std::string text = io::sweep_csv(q3_sweep(s_steps, s_tol));
            write_text(s_out, text, out);
            finish_manifest(manifest, s_out, text, manifest_path);
            return kOk;
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const WriteError &e) {
        err << "error: " << e.what() << '\n';
        return kUnwritable;
    } catch (const VerificationFailure &e) {
        err << "error: " << e.what() << '\n';
        return kNumerical;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::Tolerance ? kNumerical : kUsage;
    }
    return kUsage;
}

}  // namespace onc::cli

#endif  // ONC_TOOLS_CLI_HPP
