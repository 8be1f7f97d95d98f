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

#ifndef TROPINDEX_RANDOM_HPP
#define TROPINDEX_RANDOM_HPP

// Reproducible instance generators. Streams are std::mt19937_64 (whose output
// sequence is fixed by the standard) seeded from SplitMix64 over
// (seed, stream, trial); bounded draws use rejection sampling rather than the
// implementation-defined std distributions, so a seed means the same
// instances on every platform.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "polynomial.hpp"
#include "preservers.hpp"
#include "rational.hpp"

namespace tropindex {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Sub-seed for one trial of one stream; independent of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
    std::uint64_t state = seed;
    std::uint64_t a = splitmix64(state);
    state = a ^ (stream * 0xD1B54A32D192ED03ULL);
    std::uint64_t b = splitmix64(state);
    state = b ^ (trial * 0xABC98388FB8FAC03ULL);
    return splitmix64(state);
}

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(engine_());
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }

    /// True with probability num / den.
    bool chance(std::int64_t num, std::int64_t den) { return uniform(0, den - 1) < num; }

    /// Positive rational p / q with p in [1, max_num], q in [1, max_den].
    Rational positive_rational(std::int64_t max_num, std::int64_t max_den) {
        Rational q(uniform(1, max_num), uniform(1, max_den));
        q.canonicalize();
        return q;
    }

   private:
    std::mt19937_64 engine_;
};

/// Degree in [0, max_degree], coefficients p/q with small p, q; optional zero
/// coefficients and random signs. The leading coefficient is never zero.
struct PolynomialShape {
    std::size_t min_degree = 0;
    std::size_t max_degree = 12;
    bool zeros = false;
    bool signs = false;
    bool small_integers = false;
};

inline Polynomial random_polynomial(Rng& rng, const PolynomialShape& shape) {
    const auto d = static_cast<std::size_t>(
        rng.uniform(static_cast<std::int64_t>(shape.min_degree), static_cast<std::int64_t>(shape.max_degree)));
    std::vector<Rational> coeffs(d + 1);
    for (std::size_t n = 0; n <= d; ++n) {
        if (shape.zeros && n < d && rng.chance(1, 4)) continue;
        coeffs[n] = shape.small_integers ? Rational(rng.uniform(1, 5)) : rng.positive_rational(60, 12);
        if (shape.signs && rng.chance(1, 2)) coeffs[n] = -coeffs[n];
    }
    return Polynomial(std::move(coeffs));
}

/// Coefficients u_n / base^{n^2} with noise u_n in [1/2, 2]: strongly
/// log-concave, so most (often all) indices are central.
inline Polynomial random_lopsided_polynomial(Rng& rng, std::size_t min_degree, std::size_t max_degree,
                                             std::int64_t base) {
    const auto d = static_cast<std::size_t>(
        rng.uniform(static_cast<std::int64_t>(min_degree), static_cast<std::int64_t>(max_degree)));
    // Random shift of the parabola's vertex keeps the coefficients balanced.
    const auto shift = rng.uniform(0, static_cast<std::int64_t>(d));
    std::vector<Rational> coeffs(d + 1);
    for (std::size_t n = 0; n <= d; ++n) {
        const auto offset = static_cast<std::int64_t>(n) - shift;
        Rational noise(rng.uniform(2, 8), 4);
        noise.canonicalize();
        coeffs[n] = noise / power(Rational(base), static_cast<unsigned long>(offset * offset));
    }
    return Polynomial(std::move(coeffs));
}

/// gamma_{n+1} = gamma_n r_{n+1} with ratios r_1 >= r_2 >= ..., so that
/// gamma_n^2 >= gamma_{n-1} gamma_{n+1} holds by construction. Ratios are
/// drawn from a small pool part of the time to produce equality cases.
inline GammaSequence random_log_concave(Rng& rng, std::size_t length) {
    std::vector<Rational> ratios;
    const bool pooled = rng.chance(1, 3);
    for (std::size_t n = 1; n < length; ++n) {
        ratios.push_back(pooled ? Rational(rng.uniform(1, 3)) : rng.positive_rational(30, 10));
    }
    std::sort(ratios.begin(), ratios.end(), [](const Rational& a, const Rational& b) { return a > b; });
    std::vector<Rational> values{rng.positive_rational(20, 5)};
    for (const auto& r : ratios) values.push_back(values.back() * r);
    return GammaSequence(std::move(values));
}

/// A log-concave sequence with one entry gamma_{m+1} pushed up past the
/// slack gamma_m^2 / (gamma_{m-1} gamma_{m+1}). Requires length >= 3.
inline GammaSequence random_non_log_concave(Rng& rng, std::size_t length) {
    length = std::max<std::size_t>(length, 3);
    while (true) {
        GammaSequence base = random_log_concave(rng, length);
        std::vector<Rational> values(base.values().begin(), base.values().end());
        const std::size_t m = 1 + rng.index(length - 2);
        const Rational slack = values[m] * values[m] / (values[m - 1] * values[m + 1]);
        values[m + 1] *= slack * (1 + rng.positive_rational(5, 10));
        GammaSequence out(std::move(values));
        if (!is_log_concave(out)) return out;
    }
}

}  // namespace tropindex

#endif  // TROPINDEX_RANDOM_HPP
