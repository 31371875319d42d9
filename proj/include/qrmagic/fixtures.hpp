// Copyright 2026 The qrmagic Authors
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

#ifndef QRMAGIC_FIXTURES_HPP_
#define QRMAGIC_FIXTURES_HPP_

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qrmagic/weights.hpp"

#ifndef QRMAGIC_FIXTURE_DIR
#define QRMAGIC_FIXTURE_DIR "fixtures"
#endif

namespace qrmagic {

/// Published expurgated enumerator shipped with the library.
struct FixtureEnumerator {
    unsigned q = 0;
    size_t p = 0;
    size_t dimension = 0;
    unsigned min_distance = 0;
    WeightEnumerator w;
};

/// $QRMAGIC_FIXTURES, else the directory configured at build time.
inline std::filesystem::path fixture_dir() {
    if (const char *env = std::getenv("QRMAGIC_FIXTURES"); env && *env) return env;
    return QRMAGIC_FIXTURE_DIR;
}

inline std::filesystem::path fixture_path(unsigned q, size_t p, const std::filesystem::path &dir = fixture_dir()) {
    return dir / ("expurgated_q" + std::to_string(q) + "_p" + std::to_string(p) + ".json");
}

inline std::optional<FixtureEnumerator> load_fixture(unsigned q, size_t p,
                                                     const std::filesystem::path &dir = fixture_dir()) {
    std::ifstream in(fixture_path(q, p, dir));
    if (!in) return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(in);
    FixtureEnumerator f;
    f.q = j.at("field_order").get<unsigned>();
    f.p = j.at("length").get<size_t>();
    f.dimension = j.at("dimension").get<size_t>();
    f.min_distance = j.at("min_distance").get<unsigned>();
    f.w = WeightEnumerator::from_strings(j.at("coefficients").get<std::vector<std::string>>());
    if (f.q != q || f.p != p || f.w.n != p) throw std::runtime_error("fixture header does not match its file name");
    BigInt card = 1;
    for (size_t i = 0; i < f.dimension; i++) card *= q;
    if (f.w.total() != card) throw std::runtime_error("fixture coefficients do not sum to q^k");
    return f;
}

/// Lengths with a fixture for field order q, ascending.
inline std::vector<size_t> fixture_lengths(unsigned q, const std::filesystem::path &dir = fixture_dir()) {
    std::vector<size_t> out;
    std::error_code ec;
    std::string prefix = "expurgated_q" + std::to_string(q) + "_p";
    for (auto &entry : std::filesystem::directory_iterator(dir, ec)) {
        std::string name = entry.path().filename().string();
        if (name.rfind(prefix, 0) != 0 || entry.path().extension() != ".json") continue;
        out.push_back(std::stoul(name.substr(prefix.size())));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qrmagic

#endif  // QRMAGIC_FIXTURES_HPP_
