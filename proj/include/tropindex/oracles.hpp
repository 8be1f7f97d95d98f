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

#ifndef TROPINDEX_ORACLES_HPP
#define TROPINDEX_ORACLES_HPP

// Independent deciders used to cross-check the ones in indices.hpp. They share
// only the polynomial and root-counting plumbing with them, never the decision
// logic.

#include <cstddef>
#include <vector>

#include "indices.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "realroot.hpp"

namespace tropindex::oracle {

/// Indices on the upper convex hull of the points (n, log b_n), b_n != 0,
/// built by a monotone chain. Orientation of (i, j, k), i < j < k, is decided
/// without logarithms: j lies strictly below the chord through i and k iff
/// b_j^{k-i} < b_i^{k-j} b_k^{j-i}. Collinear points stay on the hull.
inline std::vector<std::size_t> upper_hull(const Polynomial& f) {
    const Polynomial b = abs_coefficients(f);
    std::vector<std::size_t> hull;
    auto strictly_below = [&](std::size_t i, std::size_t j, std::size_t k) {
        return power(b[j], k - i) < power(b[i], k - j) * power(b[k], j - i);
    };
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (sgn(b[k]) == 0) continue;
        while (hull.size() >= 2 && strictly_below(hull[hull.size() - 2], hull.back(), k)) hull.pop_back();
        hull.push_back(k);
    }
    return hull;
}

inline bool tropical_by_hull(const Polynomial& f, std::size_t m) {
    require_nonzero(f, "tropical_by_hull on the zero polynomial");
    if (m <= valuation(f)) return true;
    for (std::size_t n : upper_hull(f)) {
        if (n == m) return true;
    }
    return false;
}

namespace detail {

/// b_m t^m >= b_n t^n for all n != m at t = beta^{1/p} (beta > 0), decided by
/// raising both sides to the p-th power.
inline bool dominates_at_radical(const Polynomial& b, std::size_t m, const Rational& beta, unsigned long p) {
    const Rational lhs = power(b[m], p) * power(beta, m);
    for (std::size_t n = 0; n < b.size(); ++n) {
        if (n == m || sgn(b[n]) == 0) continue;
        if (power(b[n], p) * power(beta, n) > lhs) return false;
    }
    return true;
}

}  // namespace detail

/// Checks the defining max-inequality directly at every candidate point:
/// z = 0 (when admissible), z = 1, and every pairwise balance point
/// (b_i / b_k)^{1/(k-i)} where two terms are equal. If a positive witness
/// exists, one of these is a witness.
inline bool tropical_by_sampling(const Polynomial& f, std::size_t m) {
    require_nonzero(f, "tropical_by_sampling on the zero polynomial");
    const Polynomial b = abs_coefficients(f);
    if (m <= valuation(b)) {
        // z = 0 with 0^0 = 1: only the constant term survives on either side.
        const Rational lhs = m == 0 ? b[0] : Rational(0);
        const Rational rhs = m == 0 ? Rational(0) : b[0];
        return lhs >= rhs;
    }
    if (sgn(b[m]) == 0) return false;
    if (detail::dominates_at_radical(b, m, 1, 1)) return true;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (sgn(b[i]) == 0) continue;
        for (std::size_t k = i + 1; k < b.size(); ++k) {
            if (sgn(b[k]) == 0) continue;
            if (detail::dominates_at_radical(b, m, b[i] / b[k], k - i)) return true;
        }
    }
    return false;
}

/// Maximises g = b_m z^m - sum_{n != m} b_n z^n over z > 0 by locating the
/// critical points (roots of g') and deciding the sign of g at each one
/// exactly; m is central iff the maximum is >= 0.
inline bool central_by_maximization(const Polynomial& f, std::size_t m) {
    require_nonzero(f, "central_by_maximization on the zero polynomial");
    const Polynomial b = abs_coefficients(f);
    const Polynomial g = central_gap(f, m);
    if (m <= valuation(b)) return sgn(evaluate(g, Rational(0))) >= 0;

    const Polynomial dg = derivative(g);
    Rational far = cauchy_bound(g);
    if (dg.degree() >= 1) far = std::max(far, cauchy_bound(dg));
    if (sgn(evaluate(g, far)) >= 0) return true;
    if (dg.degree() < 1) return false;

    const Polynomial critical = deflate(dg, valuation(dg));
    if (critical.degree() < 1) return false;
    for (const Interval& iv : isolate_roots_in(critical, 0, far)) {
        if (sign_at_root(critical, iv, g) >= 0) return true;
    }
    return false;
}

}  // namespace tropindex::oracle

#endif  // TROPINDEX_ORACLES_HPP
