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

#ifndef TROPINDEX_SQRT_SCALAR_HPP
#define TROPINDEX_SQRT_SCALAR_HPP

#include <compare>
#include <optional>
#include <utility>

#include "error.hpp"
#include "rational.hpp"
#include "realroot.hpp"

namespace tropindex {

/// The nonnegative square root of a nonnegative rational, kept symbolic.
/// Every comparison squares both sides after a sign check; nothing is ever
/// rounded.
class SqrtScalar {
   public:
    explicit SqrtScalar(Rational radicand) : radicand_(std::move(radicand)) {
        if (sgn(radicand_) < 0) throw error(errc::parse_error, "negative radicand " + to_string(radicand_));
    }

    const Rational& radicand() const noexcept { return radicand_; }

    /// The value itself when the radicand is the square of a rational.
    std::optional<Rational> exact() const { return exact_root(radicand_, 2); }

    friend std::strong_ordering operator<=>(const SqrtScalar& lhs, const SqrtScalar& rhs) {
        return cmp(lhs.radicand_, rhs.radicand_) <=> 0;
    }
    friend bool operator==(const SqrtScalar& lhs, const SqrtScalar& rhs) { return lhs.radicand_ == rhs.radicand_; }

    friend std::strong_ordering operator<=>(const SqrtScalar& lhs, const Rational& rhs) {
        if (sgn(rhs) < 0) return std::strong_ordering::greater;
        return cmp(lhs.radicand_, rhs * rhs) <=> 0;
    }
    friend bool operator==(const SqrtScalar& lhs, const Rational& rhs) {
        return (lhs <=> rhs) == std::strong_ordering::equal;
    }

    /// Rational interval of width at most `width` containing the value.
    Interval bracket(const Rational& width) const {
        if (auto q = exact()) return {*q, *q};
        Rational lo = 0;
        Rational hi = radicand_ > 1 ? radicand_ : Rational(1);
        while (hi - lo > width) {
            Rational mid = (lo + hi) / 2;
            if (mid * mid < radicand_) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return {lo, hi};
    }

   private:
    Rational radicand_;
};

/// Sign of x + y * sqrt(r).
inline int sign_of_sum(const Rational& x, const Rational& y, const SqrtScalar& root) {
    const int sx = sgn(x);
    const int sy = sgn(root.radicand()) == 0 ? 0 : sgn(y);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // Opposite signs: the larger magnitude wins.
    const int c = cmp(x * x, y * y * root.radicand());
    if (c == 0) return 0;
    return c > 0 ? sx : sy;
}

}  // namespace tropindex

#endif  // TROPINDEX_SQRT_SCALAR_HPP
