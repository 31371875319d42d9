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

#ifndef QRMAGIC_SERIALIZE_HPP_
#define QRMAGIC_SERIALIZE_HPP_

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "json.hpp"
#include "qrmagic/distill.hpp"
#include "qrmagic/pipeline.hpp"
#include "qrmagic/quantum.hpp"

namespace qrmagic {

using Json = nlohmann::json;

/// 17 significant digits; round-trips a double.
inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string digits(const Row &r) {
    std::string s;
    for (auto c : r) s.push_back((char)('0' + c));
    return s;
}

inline Json pauli_json(const SymplecticVector &v) {
    return Json{{"z", digits(v.z)}, {"x", digits(v.x)}, {"weight", symplectic_weight(v)}};
}

inline Json enumerator_json(const WeightEnumerator &w) {
    return Json(w.to_strings());
}

inline WeightEnumerator enumerator_from_json(const Json &j) {
    return WeightEnumerator::from_strings(j.get<std::vector<std::string>>());
}

inline Json sourced_enumerator_json(const SourcedEnumerator &e, int64_t p, unsigned d) {
    return Json{{"p", p},
                {"d", d},
                {"field_order", d * d},
                {"code", "expurgated"},
                {"method", method_name(e.method)},
                {"source", e.source},
                {"coefficients", enumerator_json(e.w)}};
}

/// RFC-4180 rows (weight, count); counts as decimal strings.
inline std::string enumerator_csv(const WeightEnumerator &w) {
    std::ostringstream out;
    out << "weight,count\r\n";
    for (size_t i = 0; i <= w.n; i++) out << i << ',' << w[i].str() << "\r\n";
    return out.str();
}

struct CodeMetadata {
    std::optional<unsigned> classical_distance;
    std::string distance_method;
};

inline Json quantum_code_json(const QuantumQRCode &code, const CodeMetadata &meta = {}) {
    Json stab = Json::array();
    for (auto &b : code.basis) stab.push_back(pauli_json(b));
    Json j{{"n", code.n()},
           {"k", 1},
           {"d", code.d},
           {"classical", {{"field_order", code.classical.q()},
                          {"length", code.classical.length()},
                          {"dimension", code.classical.dimension()},
                          {"variant", "expurgated"}}},
           {"stabilizers", stab},
           {"signs", code.signs}};
    if (code.css) j["css"] = *code.css;
    if (meta.classical_distance) {
        j["classical"]["min_distance"] = *meta.classical_distance;
        j["distance"] = *meta.classical_distance - 1;
        j["distance_source"] = "computed";
        j["distance_method"] = meta.distance_method;
    }
    return j;
}

inline Json threshold_json(const ThresholdResult &r, int lambda, const std::string &source) {
    char five[32];
    std::snprintf(five, sizeof five, "%.5f", r.threshold);
    Json j{{"p", r.p},
           {"state", state_name(r.kind)},
           {"threshold", r.threshold},
           {"threshold_5dp", five},
           {"bracket", {r.lo, r.hi}},
           {"distills", r.threshold > 0},
           {"source", "computed"},
           {"enumerator_source", source}};
    if (r.kind == StateKind::T) j["lambda"] = lambda;
    return j;
}

/// epsilon,epsilon_prime,success_prob; singular samples are left out.
inline std::string curve_csv(const DistillationCurve &c) {
    std::ostringstream out;
    out << "epsilon,epsilon_prime,success_prob\r\n";
    for (auto &s : c.samples) {
        if (s.singular) continue;
        out << format_double(s.eps) << ',' << format_double(s.eps_prime) << ',' << format_double(s.success) << "\r\n";
    }
    return out.str();
}

inline Json curve_json(const DistillationCurve &c, const std::string &source) {
    Json samples = Json::array(), singular = Json::array();
    for (auto &s : c.samples) {
        if (s.singular) {
            singular.push_back(s.eps);
            continue;
        }
        samples.push_back(Json{{"epsilon", s.eps}, {"epsilon_prime", s.eps_prime}, {"success_prob", s.success}});
    }
    Json j{{"p", c.p}, {"state", state_name(c.kind)}, {"samples", samples}, {"singular", singular},
           {"enumerator_source", source}};
    if (c.kind == StateKind::T) j["lambda"] = c.lambda;
    return j;
}

}  // namespace qrmagic

#endif  // QRMAGIC_SERIALIZE_HPP_
