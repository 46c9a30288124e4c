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

#ifndef ONC_IO_HPP
#define ONC_IO_HPP

// JSON and CSV formats shared by the CLI:
//   matrix:  {"dim": N, "re": [[...], ...], "im": [[...], ...]}   ("im" optional)
//   kernel:  {"dim": N, "pi": [...], "zeta": z}                   ("zeta" optional)
//   result:  {"value", "method", "std_error", "zeta", "dim", "seed", "samples"}

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "json.hpp"
#include "onc/indicator.hpp"
#include "onc/matrix_core.hpp"
#include "onc/orbit_space.hpp"
#include "onc/sw_kernel.hpp"

namespace onc::io {

using nlohmann::json;

/// Shortest decimal that round-trips to the same double (at most 17 digits).
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline CMatrix matrix_from_json(const json &j) {
    try {
        const int n = j.at("dim").get<int>();
        if (n < 1) throw Error(ErrorKind::InvalidDimension, "matrix dim must be positive");
        const auto &re = j.at("re");
        const bool has_im = j.contains("im");
        if (!re.is_array() || static_cast<int>(re.size()) != n) throw Error(ErrorKind::Parse, "\"re\" must have dim rows");
        if (has_im && (!j["im"].is_array() || static_cast<int>(j["im"].size()) != n)) {
            throw Error(ErrorKind::Parse, "\"im\" must have dim rows");
        }
        CMatrix m(n, n);
        for (int i = 0; i < n; ++i) {
            if (!re[i].is_array() || static_cast<int>(re[i].size()) != n) throw Error(ErrorKind::Parse, "\"re\" rows must have dim entries");
            if (has_im && (!j["im"][i].is_array() || static_cast<int>(j["im"][i].size()) != n)) {
                throw Error(ErrorKind::Parse, "\"im\" rows must have dim entries");
            }
            for (int k = 0; k < n; ++k) {
                m(i, k) = Complex(re[i][k].get<double>(), has_im ? j["im"][i][k].get<double>() : 0.0);
            }
        }
        return m;
    } catch (const json::exception &e) {
        throw Error(ErrorKind::Parse, std::string("malformed matrix JSON: ") + e.what());
    }
}

inline json matrix_to_json(const CMatrix &m) {
    json re = json::array(), im = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json rr = json::array(), ir = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            rr.push_back(m(i, k).real());
            ir.push_back(m(i, k).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ir));
    }
    return {{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

/// Parses a Hermitian matrix; non-Hermitian input fails naming the worst (i,j).
inline HermitianOperator hermitian_from_json(const json &j) { return HermitianOperator(matrix_from_json(j)); }

inline DensityMatrix density_from_json(const json &j) { return DensityMatrix(hermitian_from_json(j)); }

struct KernelSpec {
    SWKernelSpectrum spectrum;
    std::optional<double> zeta;
};

/// Kernel file; when both "pi" and "zeta" are given they must agree to 1e-10.
inline KernelSpec kernel_from_json(const json &j) {
    try {
        std::optional<double> zeta;
        if (j.contains("zeta") && !j["zeta"].is_null()) zeta = j["zeta"].get<double>();
        if (!j.contains("pi")) {
            if (!zeta) throw Error(ErrorKind::Parse, "kernel JSON needs \"pi\" or \"zeta\"");
            return {qutrit_kernel_spectrum(*zeta), zeta};
        }
        auto pi = j.at("pi").get<std::vector<double>>();
        if (j.contains("dim") && j["dim"].get<int>() != static_cast<int>(pi.size())) {
            throw Error(ErrorKind::DimensionMismatch, "kernel \"dim\" does not match the length of \"pi\"");
        }
        KernelSpec spec{validate_kernel_spectrum(std::move(pi)), zeta};
        if (zeta) {
            if (spec.spectrum.dim() != 3) throw Error(ErrorKind::Constraint, "\"zeta\" is defined for N = 3 kernels only");
            const auto expected = qutrit_kernel_spectrum(*zeta);
            for (int i = 0; i < 3; ++i) {
                if (std::abs(expected[i] - spec.spectrum[i]) > 1e-10) {
                    throw Error(ErrorKind::Constraint, "\"pi\" does not match the qutrit kernel at \"zeta\"");
                }
            }
        }
        return spec;
    } catch (const json::exception &e) {
        throw Error(ErrorKind::Parse, std::string("malformed kernel JSON: ") + e.what());
    }
}

inline json kernel_to_json(const SWKernelSpectrum &k, std::optional<double> zeta = std::nullopt) {
    json j = {{"dim", k.dim()}, {"pi", k.pi().values()}};
    if (zeta) j["zeta"] = *zeta;
    return j;
}

inline json result_to_json(const IndicatorResult &r) {
    json j;
    j["value"] = r.value;
    j["method"] = to_string(r.method);
    j["std_error"] = r.std_error ? json(*r.std_error) : json(nullptr);
    j["zeta"] = r.meta.zeta ? json(*r.meta.zeta) : json(nullptr);
    j["dim"] = r.meta.dim;
    j["seed"] = r.meta.seed ? json(*r.meta.seed) : json(nullptr);
    j["samples"] = r.meta.samples ? json(*r.meta.samples) : json(nullptr);
    return j;
}

inline json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
}

/// CSV with mandatory header and LF line endings.
inline std::string curves_csv(const std::vector<CurveSample> &samples) {
    std::string out = "curve_id,phi,r,x,y\n";
    for (const auto &s : samples) {
        out += s.curve + ',' + format_double(s.phi) + ',' + format_double(s.r) + ',' + format_double(s.x) + ',' +
               format_double(s.y) + '\n';
    }
    return out;
}

inline std::string sweep_csv(const std::vector<SweepRow> &rows) {
    std::string out = "zeta,q_closed,q_quadrature\n";
    for (const auto &r : rows) {
        out += format_double(r.zeta) + ',' + format_double(r.q_closed) + ',' + format_double(r.q_quadrature) + '\n';
    }
    return out;
}

}  // namespace onc::io

#endif  // ONC_IO_HPP
