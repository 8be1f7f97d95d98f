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

#ifndef TROPINDEX_RATIONAL_HPP
#define TROPINDEX_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <regex>
#include <string>
#include <string_view>

#include "error.hpp"

namespace tropindex {

/// Arbitrary-precision rational. GMP keeps the value canonical (reduced,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs_value(const Rational& q) { return abs(q); }

/// q^k with 0^0 = 1.
inline Rational power(const Rational& q, unsigned long k) {
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), k);
    Rational out;
    out.get_num() = num;
    out.get_den() = den;
    return out;
}

inline Integer power(const Integer& q, unsigned long k) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), q.get_mpz_t(), k);
    return out;
}

/// The exact k-th root of a nonnegative rational, if it is rational.
inline std::optional<Rational> exact_root(const Rational& q, unsigned long k) {
    if (sgn(q) < 0 || k == 0) return std::nullopt;
    if (k == 1) return q;
    Integer num;
    Integer den;
    if (mpz_root(num.get_mpz_t(), q.get_num_mpz_t(), k) == 0) return std::nullopt;
    if (mpz_root(den.get_mpz_t(), q.get_den_mpz_t(), k) == 0) return std::nullopt;
    Rational out;
    out.get_num() = num;
    out.get_den() = den;
    return out;
}

/// Parses "p", "-p", "+p" or "p/q" with decimal integers; q must be nonzero.
inline Rational parse_rational(std::string_view text) {
    static const std::regex pattern(R"(\s*([+-]?[0-9]+)(?:\s*/\s*([0-9]+))?\s*)");
    std::string s(text);
    std::smatch match;
    if (!std::regex_match(s, match, pattern)) {
        throw error(errc::parse_error, "not a rational: '" + s + "'");
    }
    std::string num = match[1].str();
    if (num.front() == '+') num.erase(0, 1);
    Rational out;
    out.get_num() = Integer(num, 10);
    if (match[2].matched) {
        Integer den(match[2].str(), 10);
        if (den == 0) throw error(errc::parse_error, "zero denominator in '" + s + "'");
        out.get_den() = den;
        out.canonicalize();
    }
    return out;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

/// Smallest integer >= q.
inline Integer ceil_of(const Rational& q) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

/// Largest integer <= q.
inline Integer floor_of(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

}  // namespace tropindex

#endif  // TROPINDEX_RATIONAL_HPP
