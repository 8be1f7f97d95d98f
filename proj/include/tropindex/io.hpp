/*
   Copyright 2026 The tropindex Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TROPINDEX_IO_HPP
#define TROPINDEX_IO_HPP

// JSON and CSV forms shared by the CLI and the verification reports.
// Rationals always travel as strings ("p" or "p/q").

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "indices.hpp"
#include "polynomial.hpp"
#include "preservers.hpp"
#include "rational.hpp"

namespace tropindex::io {

using json = nlohmann::ordered_json;

inline json rationals_to_json(std::span<const Rational> values) {
    json out = json::array();
    for (const auto& q : values) out.push_back(to_string(q));
    return out;
}

inline std::vector<Rational> rationals_from_json(const json& array, std::string_view field) {
    if (!array.is_array()) throw error(errc::parse_error, "'" + std::string(field) + "' must be an array");
    std::vector<Rational> out;
    for (const auto& item : array) {
        if (item.is_string()) {
            out.push_back(parse_rational(item.get<std::string>()));
        } else if (item.is_number_integer()) {
            out.push_back(parse_rational(item.dump()));
        } else {
            throw error(errc::parse_error, "entries of '" + std::string(field) + "' must be rational strings");
        }
    }
    return out;
}

/// "1,-2,1/3" (whitespace tolerated).
inline std::vector<Rational> rationals_from_csv(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        out.push_back(parse_rational(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

inline json to_json(const Polynomial& f) {
    return json{{"coeffs", rationals_to_json(f.coeffs())}};
}

inline Polynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs")) throw error(errc::parse_error, "expected {\"coeffs\": [...]}");
    return Polynomial(rationals_from_json(j.at("coeffs"), "coeffs"));
}

inline json to_json(const GammaSequence& gamma) {
    return json{{"gamma", rationals_to_json(gamma.values())}};
}

inline GammaSequence gamma_from_json(const json& j) {
    if (!j.is_object() || !j.contains("gamma")) throw error(errc::parse_error, "expected {\"gamma\": [...]}");
    return GammaSequence(rationals_from_json(j.at("gamma"), "gamma"));
}

inline json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw error(errc::parse_error, e.what());
    }
}

inline json to_json(const Witness& w) {
    switch (w.kind) {
        case Witness::Kind::point_at_zero:
            return json{{"kind", "point"}, {"z", "0"}};
        case Witness::Kind::exact_point:
            return json{{"kind", "point"}, {"z", to_string(w.point)}};
        case Witness::Kind::isolating_interval:
            return json{{"kind", "interval"},
                        {"lo", to_string(w.interval.lo)},
                        {"hi", to_string(w.interval.hi)},
                        {"certificate", rationals_to_json(w.certificate.coeffs())}};
    }
    return nullptr;
}

inline Witness witness_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "point") {
        Rational z = parse_rational(j.at("z").get<std::string>());
        return sgn(z) == 0 ? Witness::at_zero() : Witness::at(z);
    }
    if (kind == "interval") {
        Interval iv{parse_rational(j.at("lo").get<std::string>()), parse_rational(j.at("hi").get<std::string>())};
        Polynomial cert;
        if (j.contains("certificate")) cert = Polynomial(rationals_from_json(j.at("certificate"), "certificate"));
        return Witness::around(iv, cert);
    }
    throw error(errc::parse_error, "unknown witness kind '" + kind + "'");
}

inline json optional_witness(const std::optional<Witness>& w) { return w ? to_json(*w) : json(nullptr); }

inline json to_json(const IndexReport& report) {
    json indices = json::array();
    for (const auto& v : report.indices) {
        indices.push_back(json{{"m", v.m},
                               {"tropical", v.tropical},
                               {"central", v.central},
                               {"tropical_witness", optional_witness(v.tropical_witness)},
                               {"central_witness", optional_witness(v.central_witness)}});
    }
    json out{{"degree", report.degree}, {"indices", indices}};
    if (report.has_zero_coefficients) {
        out["warning"] = "zero coefficients: an index m with a_m = 0 counts only when all lower coefficients vanish";
    }
    return out;
}

inline json index_list(const std::vector<std::size_t>& indices) {
    json out = json::array();
    for (auto m : indices) out.push_back(m);
    return out;
}

inline json to_json(const PreservationVerdict& verdict) {
    return json{{"holds", verdict.holds},
                {"violating_index", verdict.violating_index ? json(*verdict.violating_index) : json(nullptr)},
                {"before", index_list(verdict.before)},
                {"after", index_list(verdict.after)}};
}

}  // namespace tropindex::io

#endif  // TROPINDEX_IO_HPP
