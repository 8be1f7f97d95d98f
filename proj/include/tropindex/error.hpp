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

#ifndef TROPINDEX_ERROR_HPP
#define TROPINDEX_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropindex {

enum class errc {
    sequence_too_short,
    length_mismatch,
    invalid_index,
    zero_polynomial,
    index_out_of_range,
    not_an_index,
    zero_coefficient,
    degree_too_large,
    not_log_concave,
    non_positive_entry,
    is_log_concave,
    division_by_zero,
    parse_error,
};

constexpr std::string_view to_string(errc code) noexcept {
    switch (code) {
        case errc::sequence_too_short: return "SequenceTooShort";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::invalid_index: return "InvalidIndex";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::not_an_index: return "NotAnIndex";
        case errc::zero_coefficient: return "ZeroCoefficient";
        case errc::degree_too_large: return "DegreeTooLarge";
        case errc::not_log_concave: return "NotLogConcave";
        case errc::non_positive_entry: return "NonPositiveEntry";
        case errc::is_log_concave: return "IsLogConcave";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
   public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

   private:
    errc code_;
};

}  // namespace tropindex

#endif  // TROPINDEX_ERROR_HPP
