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

#ifndef ONC_TOOLS_MANIFEST_HPP
#define ONC_TOOLS_MANIFEST_HPP

#include <Eigen/Core>
#include <openssl/evp.h>

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#ifndef ONC_VERSION
#define ONC_VERSION "0.1.0"
#endif

namespace onc::cli {

inline std::string sha256_hex(const std::string &bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

inline std::optional<std::string> slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Provenance record written beside outputs. The timestamp lives here and
/// never in the numerical output, which stays byte-identical across reruns.
struct RunManifest {
    std::vector<std::string> command_line;
    std::optional<std::uint64_t> seed;
    std::vector<std::pair<std::string, std::string>> inputs;   // path, sha256
    std::vector<std::pair<std::string, std::string>> outputs;  // path, sha256

    void add_input(const std::string &path) {
        const auto bytes = slurp(path);
        inputs.emplace_back(path, bytes ? sha256_hex(*bytes) : std::string("unreadable"));
    }

    nlohmann::json to_json() const {
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm utc{};
        gmtime_r(&now, &utc);
        std::ostringstream ts;
        ts << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
        nlohmann::json j;
        j["command_line"] = command_line;
        j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
        j["versions"] = {{"onc", ONC_VERSION},
                         {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                                       std::to_string(EIGEN_MINOR_VERSION)},
                         {"compiler", __VERSION__}};
        j["timestamp_utc"] = ts.str();
        j["inputs"] = nlohmann::json::array();
        for (const auto &[path, digest] : inputs) j["inputs"].push_back({{"path", path}, {"sha256", digest}});
        j["outputs"] = nlohmann::json::array();
        for (const auto &[path, digest] : outputs) j["outputs"].push_back({{"path", path}, {"sha256", digest}});
        return j;
    }
};

}  // namespace onc::cli

#endif  // ONC_TOOLS_MANIFEST_HPP
