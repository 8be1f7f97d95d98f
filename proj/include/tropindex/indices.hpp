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

#ifndef TROPINDEX_INDICES_HPP
#define TROPINDEX_INDICES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "realroot.hpp"

namespace tropindex {

// Index semantics. With b_n = |a_n| and v the lowest n with b_n != 0, an index
// m <= d is tropical (central) iff m <= v, where z = 0 is a witness, or some
// z > 0 satisfies
//     b_m z^m >= max_{n != m} b_n z^n        (tropical)
//     b_m z^m >= sum_{n != m} b_n z^n        (central).
// For polynomials without zero coefficients this is exactly the existence of
// some z >= 0 (with 0^0 = 1).

enum class IndexKind { tropical, central };

inline std::string to_string(IndexKind kind) { return kind == IndexKind::tropical ? "tropical" : "central"; }

struct Witness {
    enum class Kind { exact_point, isolating_interval, point_at_zero };

    Kind kind = Kind::point_at_zero;
    /// exact_point / point_at_zero.
    Rational point;
    /// isolating_interval: `certificate` has exactly one root in here, and the
    /// defining inequality holds at that root.
    Interval interval;
    Polynomial certificate;

    static Witness at_zero() { return {}; }
    static Witness at(Rational z) { return {Kind::exact_point, std::move(z), {}, {}}; }
    static Witness around(Interval iv, Polynomial certificate) {
        return {Kind::isolating_interval, 0, std::move(iv), std::move(certificate)};
    }
};

struct IndexVerdict {
    std::size_t m = 0;
    bool tropical = false;
    bool central = false;
    std::optional<Witness> tropical_witness;
    std::optional<Witness> central_witness;
};

struct IndexReport {
    std::size_t degree = 0;
    std::vector<IndexVerdict> indices;
    /// Set when some coefficient is zero; such inputs follow the convention
    /// documented above rather than the all-positive setting.
    bool has_zero_coefficients = false;
};

struct WitnessOptions {
    /// Replace z = 0 witnesses by positive ones where a positive witness exists.
    bool require_positive_witness = false;
};

namespace detail {

inline void check_index(const Polynomial& f, std::size_t m) {
    require_nonzero(f, "index query on the zero polynomial");
    if (m + 1 > f.size()) {
        throw error(errc::index_out_of_range,
                    "index " + std::to_string(m) + " exceeds degree " + std::to_string(f.degree()));
    }
}

/// b_m z^{m-n} >= b_n for every lower term, i.e. z >= L.
inline bool above_lower_bound(const Polynomial& b, std::size_t m, const Rational& z) {
    for (std::size_t n = 0; n < m; ++n) {
        if (sgn(b[n]) == 0) continue;
        if (b[m] * power(z, m - n) < b[n]) return false;
    }
    return true;
}

/// b_k z^{k-m} <= b_m for every upper term, i.e. z <= U.
inline bool below_upper_bound(const Polynomial& b, std::size_t m, const Rational& z) {
    for (std::size_t k = m + 1; k < b.size(); ++k) {
        if (sgn(b[k]) == 0) continue;
        if (b[k] * power(z, k - m) > b[m]) return false;
    }
    return true;
}

/// (x / y)^{1/p} versus (u / w)^{1/q}, all positive: sign of the difference.
inline int compare_ratio_roots(const Rational& xy, unsigned long p, const Rational& uw, unsigned long q) {
    return cmp(power(xy, q), power(uw, p));
}

}  // namespace detail

/// g(z) = b_m z^m - sum_{n != m} b_n z^n; m is central iff g >= 0 somewhere admissible.
inline Polynomial central_gap(const Polynomial& f, std::size_t m) {
    detail::check_index(f, m);
    std::vector<Rational> out(f.size());
    for (std::size_t n = 0; n < f.size(); ++n) out[n] = n == m ? Rational(abs(f[n])) : Rational(-abs(f[n]));
    return Polynomial(std::move(out));
}

/// Cross-power decider: for all nonzero b_n (n < m) and b_k (k > m),
/// b_n^{k-m} b_k^{m-n} <= b_m^{k-n}.
inline bool is_tropical_index(const Polynomial& f, std::size_t m) {
    detail::check_index(f, m);
    const Polynomial b = abs_coefficients(f);
    if (m <= valuation(b)) return true;
    if (sgn(b[m]) == 0) return false;
    for (std::size_t n = 0; n < m; ++n) {
        if (sgn(b[n]) == 0) continue;
        for (std::size_t k = m + 1; k < b.size(); ++k) {
            if (sgn(b[k]) == 0) continue;
            if (power(b[n], k - m) * power(b[k], m - n) > power(b[m], k - n)) return false;
        }
    }
    return true;
}

/// Root-count decider: interior m is central iff g has a positive root.
inline bool is_central_index(const Polynomial& f, std::size_t m) {
    detail::check_index(f, m);
    const Polynomial b = abs_coefficients(f);
    if (m <= valuation(b)) return true;
    if (sgn(b[m]) == 0) return false;
    if (m + 1 == b.size()) return true;
    return count_positive_roots(central_gap(f, m)) >= 1;
}

inline std::vector<std::size_t> tropical_indices(const Polynomial& f) {
    require_nonzero(f, "tropical_indices of the zero polynomial");
    std::vector<std::size_t> out;
    for (std::size_t m = 0; m < f.size(); ++m) {
        if (is_tropical_index(f, m)) out.push_back(m);
    }
    return out;
}

inline std::vector<std::size_t> central_indices(const Polynomial& f) {
    require_nonzero(f, "central_indices of the zero polynomial");
    std::vector<std::size_t> out;
    for (std::size_t m = 0; m < f.size(); ++m) {
        if (is_central_index(f, m)) out.push_back(m);
    }
    return out;
}

inline bool is_index(const Polynomial& f, std::size_t m, IndexKind kind) {
    return kind == IndexKind::tropical ? is_tropical_index(f, m) : is_central_index(f, m);
}

inline std::vector<std::size_t> indices_of(const Polynomial& f, IndexKind kind) {
    return kind == IndexKind::tropical ? tropical_indices(f) : central_indices(f);
}

/// Exact tropical witness. Uses z = 0 for m <= v; otherwise the feasible set
/// is [L, U] and a rational point is found by bisection on exact power
/// comparisons. When L = U is irrational the witness is an isolating interval
/// of the binomial b_m z^{m-n} - b_n that pins the balance point.
inline Witness tropical_witness(const Polynomial& f, std::size_t m, const WitnessOptions& options = {}) {
    if (!is_tropical_index(f, m)) {
        throw error(errc::not_an_index, std::to_string(m) + " is not a tropical index of " + to_string(f));
    }
    const Polynomial b = abs_coefficients(f);
    if (m <= valuation(b) && (!options.require_positive_witness || sgn(b[m]) == 0)) return Witness::at_zero();

    // Binding lower constraint n* (largest L) and upper constraint k* (smallest U).
    std::optional<std::size_t> lower;
    std::optional<std::size_t> upper;
    for (std::size_t n = 0; n < m; ++n) {
        if (sgn(b[n]) == 0) continue;
        if (!lower || detail::compare_ratio_roots(b[n] / b[m], m - n, b[*lower] / b[m], m - *lower) > 0) lower = n;
    }
    for (std::size_t k = m + 1; k < b.size(); ++k) {
        if (sgn(b[k]) == 0) continue;
        if (!upper || detail::compare_ratio_roots(b[m] / b[k], k - m, b[m] / b[*upper], *upper - m) < 0) upper = k;
    }
    if (lower && upper &&
        detail::compare_ratio_roots(b[*lower] / b[m], m - *lower, b[m] / b[*upper], *upper - m) == 0) {
        const unsigned long p = m - *lower;
        const Rational beta = b[*lower] / b[m];
        if (auto z = exact_root(beta, p)) return Witness::at(*z);
        Polynomial balance = Polynomial::monomial(b[m], p) - Polynomial{b[*lower]};
        auto roots = isolate_roots_in(balance, 0, cauchy_bound(balance));
        return Witness::around(roots.front(), balance);
    }

    Rational hi = 1;
    while (!detail::above_lower_bound(b, m, hi)) hi *= 2;
    if (detail::below_upper_bound(b, m, hi)) return Witness::at(hi);
    Rational lo = 0;
    while (true) {
        Rational mid = (lo + hi) / 2;
        if (!detail::above_lower_bound(b, m, mid)) {
            lo = mid;
        } else if (!detail::below_upper_bound(b, m, mid)) {
            hi = mid;
        } else {
            return Witness::at(mid);
        }
    }
}

/// Exact central witness. Interior indices use the mean of the two positive
/// roots of g: exactly when g is quadratic, otherwise the mean of refined
/// isolating-interval midpoints once g >= 0 is confirmed there. A double root
/// is returned as its isolating interval.
inline Witness central_witness(const Polynomial& f, std::size_t m, const WitnessOptions& options = {}) {
    if (!is_central_index(f, m)) {
        throw error(errc::not_an_index, std::to_string(m) + " is not a central index of " + to_string(f));
    }
    const Polynomial b = abs_coefficients(f);
    const Polynomial g = central_gap(f, m);
    const std::size_t v = valuation(b);
    if (m <= v) {
        if (!options.require_positive_witness || sgn(b[m]) == 0) return Witness::at_zero();
        // m == v: the lowest term dominates for small z > 0.
        Rational z = 1;
        while (sgn(evaluate(g, z)) < 0) z /= 2;
        return Witness::at(z);
    }
    if (m + 1 == b.size()) {
        Rational z = cauchy_bound(g);
        while (sgn(evaluate(g, z)) <= 0) z *= 2;
        return Witness::at(z);
    }
    if (g.degree() == 2) {
        Rational mean = -g[1] / (2 * g[2]);
        if (sgn(evaluate(g, mean)) > 0) return Witness::at(mean);
    }
    const Polynomial h = deflate(g, valuation(g));
    auto roots = isolate_roots_in(h, 0, cauchy_bound(h));
    if (roots.size() == 1) return Witness::around(roots.front(), g);
    if (roots.size() != 2) {
        throw std::logic_error("central gap polynomial has " + std::to_string(roots.size()) + " positive roots");
    }
    Interval left = roots[0];
    Interval right = roots[1];
    while (true) {
        Rational mean = (left.midpoint() + right.midpoint()) / 2;
        if (sgn(evaluate(g, mean)) >= 0) return Witness::at(mean);
        left = refine(h, left, left.width() / 2);
        right = refine(h, right, right.width() / 2);
    }
}

inline Witness index_witness(const Polynomial& f, std::size_t m, IndexKind kind, const WitnessOptions& options = {}) {
    return kind == IndexKind::tropical ? tropical_witness(f, m, options) : central_witness(f, m, options);
}

/// Exact check that `w` witnesses index m of f in the given sense.
inline bool verify_witness(const Polynomial& f, std::size_t m, IndexKind kind, const Witness& w) {
    detail::check_index(f, m);
    const Polynomial b = abs_coefficients(f);
    const std::size_t v = valuation(b);

    // Terms whose value at the witness must be nonnegative.
    std::vector<Polynomial> gaps;
    if (kind == IndexKind::central) {
        gaps.push_back(central_gap(f, m));
    } else {
        for (std::size_t n = 0; n < b.size(); ++n) {
            if (n == m || sgn(b[n]) == 0) continue;
            gaps.push_back(Polynomial::monomial(b[m], m) - Polynomial::monomial(b[n], n));
        }
    }

    switch (w.kind) {
        case Witness::Kind::point_at_zero:
        case Witness::Kind::exact_point: {
            const Rational& z = w.point;
            if (sgn(z) < 0) return false;
            if (sgn(z) == 0 && m > v) return false;
            for (const auto& gap : gaps) {
                if (sgn(evaluate(gap, z)) < 0) return false;
            }
            return true;
        }
        case Witness::Kind::isolating_interval: {
            const auto& h = w.certificate;
            if (h.is_zero() || sgn(w.interval.lo) < 0 || w.interval.lo > w.interval.hi) return false;
            if (count_distinct_roots(h, w.interval, true, true) != 1) return false;
            if (sgn(w.interval.lo) == 0 && sgn(evaluate(h, Rational(0))) == 0 && m > v) return false;
            for (const auto& gap : gaps) {
                if (sign_at_root(h, w.interval, gap) < 0) return false;
            }
            return true;
        }
    }
    return false;
}

inline bool is_tropically_real_rooted(const Polynomial& f) {
    require_nonzero(f, "is_tropically_real_rooted of the zero polynomial");
    return tropical_indices(f).size() == f.size();
}

namespace detail {

inline void require_nonzero_coefficients(const Polynomial& f) {
    require_nonzero(f, "sign-independent real-rootedness of the zero polynomial");
    for (std::size_t n = 0; n < f.size(); ++n) {
        if (sgn(f[n]) == 0) throw error(errc::zero_coefficient, "a_" + std::to_string(n) + " is zero");
    }
}

}  // namespace detail

/// Every index central (fast route). Requires all a_n != 0.
inline bool is_sign_independently_real_rooted(const Polynomial& f) {
    detail::require_nonzero_coefficients(f);
    for (std::size_t m = 0; m < f.size(); ++m) {
        if (!is_central_index(f, m)) return false;
    }
    return true;
}

constexpr std::size_t default_bruteforce_degree = 12;

/// Definitional check: every sign flip is real-rooted. s_0 = +1 is fixed since
/// f and -f have the same roots.
inline bool sirr_bruteforce(const Polynomial& f, std::size_t max_degree = default_bruteforce_degree) {
    detail::require_nonzero_coefficients(f);
    const auto d = static_cast<std::size_t>(f.degree());
    if (d > max_degree || d >= 63) {
        throw error(errc::degree_too_large,
                    "degree " + std::to_string(d) + " exceeds brute-force cap " + std::to_string(max_degree));
    }
    for (unsigned long long bits = 0; bits < (1ULL << d); ++bits) {
        if (!is_real_rooted(apply_signs(f, SignPattern::from_bits(bits << 1, f.size())))) return false;
    }
    return true;
}

inline IndexReport index_report(const Polynomial& f, const WitnessOptions& options = {}) {
    require_nonzero(f, "index_report of the zero polynomial");
    IndexReport report;
    report.degree = f.size() - 1;
    for (std::size_t n = 0; n < f.size(); ++n) {
        if (sgn(f[n]) == 0) report.has_zero_coefficients = true;
    }
    for (std::size_t m = 0; m < f.size(); ++m) {
        IndexVerdict verdict;
        verdict.m = m;
        verdict.tropical = is_tropical_index(f, m);
        verdict.central = is_central_index(f, m);
        if (verdict.tropical) verdict.tropical_witness = tropical_witness(f, m, options);
        if (verdict.central) verdict.central_witness = central_witness(f, m, options);
        report.indices.push_back(std::move(verdict));
    }
    return report;
}

}  // namespace tropindex

#endif  // TROPINDEX_INDICES_HPP
