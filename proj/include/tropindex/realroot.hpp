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

#ifndef TROPINDEX_REALROOT_HPP
#define TROPINDEX_REALROOT_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace tropindex {

/// Closed interval [lo, hi] with exact endpoints. Isolating intervals returned
/// by isolate_roots are either degenerate (lo == hi, an exact rational root)
/// or have endpoints that are not roots, so the root sits strictly inside.
struct Interval {
    Rational lo;
    Rational hi;

    bool is_point() const { return lo == hi; }
    Rational midpoint() const { return (lo + hi) / 2; }
    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

inline void require_nonzero(const Polynomial& f, const char* what) {
    if (f.is_zero()) throw error(errc::zero_polynomial, what);
}

/// Monic gcd by Euclidean remainders; gcd(0, 0) is an error.
inline Polynomial gcd(Polynomial f, Polynomial g) {
    if (f.is_zero() && g.is_zero()) throw error(errc::zero_polynomial, "gcd(0, 0) is undefined");
    while (!g.is_zero()) {
        auto r = divmod(f, g).second;
        f = std::move(g);
        g = monic(r);
    }
    return monic(f);
}

/// f / gcd(f, f'); same distinct roots as f, all of them simple.
inline Polynomial squarefree_part(const Polynomial& f) {
    require_nonzero(f, "squarefree_part of the zero polynomial");
    if (f.degree() <= 0) return f;
    return divmod(f, gcd(f, derivative(f))).first;
}

/// Yun's decomposition: f = c * p_1 * p_2^2 * p_3^3 * ..., each p_i square-free
/// and pairwise coprime. Entry i-1 holds p_i (possibly constant).
inline std::vector<Polynomial> squarefree_decomposition(const Polynomial& f) {
    require_nonzero(f, "squarefree_decomposition of the zero polynomial");
    std::vector<Polynomial> out;
    if (f.degree() <= 0) return out;
    Polynomial a = gcd(f, derivative(f));
    Polynomial b = divmod(f, a).first;
    Polynomial c = divmod(derivative(f), a).first;
    Polynomial d = c - derivative(b);
    while (b.degree() > 0) {
        Polynomial p = gcd(b, d);
        out.push_back(p);
        b = divmod(b, p).first;
        c = divmod(d, p).first;
        d = c - derivative(b);
    }
    return out;
}

/// 1 + max_{n<d} |a_n| / |a_d|; every complex root has modulus strictly below it.
inline Rational cauchy_bound(const Polynomial& f) {
    require_nonzero(f, "cauchy_bound of the zero polynomial");
    Rational best = 0;
    const Rational lead = abs(f.leading());
    for (std::size_t n = 0; n + 1 < f.size(); ++n) {
        Rational r = abs(f[n]) / lead;
        if (r > best) best = r;
    }
    return best + 1;
}

/// Sign changes in the sequence after deleting zeros.
inline std::size_t descartes_sign_changes(std::span<const Rational> coeffs) {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& c : coeffs) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

/// Sturm chain of the square-free part of f: p0, p0', then negated remainders
/// (each rescaled by a positive constant) down to a nonzero constant.
class SturmChain {
   public:
    explicit SturmChain(const Polynomial& f) {
        require_nonzero(f, "sturm_chain of the zero polynomial");
        chain_.push_back(squarefree_part(f));
        if (chain_.front().degree() <= 0) return;
        chain_.push_back(derivative(chain_.front()));
        while (true) {
            auto r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
            if (r.is_zero()) break;
            chain_.push_back(Rational(-1 / abs(r.leading())) * r);
        }
    }

    std::span<const Polynomial> polynomials() const noexcept { return chain_; }
    const Polynomial& squarefree() const { return chain_.front(); }

    std::size_t variations_at(const Rational& x) const {
        std::size_t changes = 0;
        int last = 0;
        for (const auto& p : chain_) {
            int s = sgn(evaluate(p, x));
            if (s == 0) continue;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    }

    /// Variations at +infinity (positive = true) or -infinity.
    std::size_t variations_at_infinity(bool positive) const {
        std::size_t changes = 0;
        int last = 0;
        for (const auto& p : chain_) {
            int s = sgn(p.leading());
            if (!positive && p.degree() % 2 == 1) s = -s;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    }

    /// Distinct roots in (lo, hi] for lo < hi.
    std::size_t count_half_open(const Rational& lo, const Rational& hi) const {
        return variations_at(lo) - variations_at(hi);
    }

    std::size_t count_all() const { return variations_at_infinity(false) - variations_at_infinity(true); }

    /// Distinct roots in the interval with each endpoint included or excluded.
    std::size_t count(const Interval& iv, bool include_lo, bool include_hi) const {
        const auto& p = squarefree();
        const bool lo_root = sgn(evaluate(p, iv.lo)) == 0;
        if (iv.is_point()) return include_lo && include_hi && lo_root ? 1 : 0;
        const bool hi_root = sgn(evaluate(p, iv.hi)) == 0;
        std::size_t n = count_half_open(iv.lo, iv.hi);
        if (include_lo && lo_root) ++n;
        if (!include_hi && hi_root) --n;
        return n;
    }

   private:
    std::vector<Polynomial> chain_;
};

inline SturmChain sturm_chain(const Polynomial& f) { return SturmChain(f); }

/// Distinct real roots of f in the interval; lo > hi is treated as empty.
inline std::size_t count_distinct_roots(const Polynomial& f, const Interval& iv, bool include_lo, bool include_hi) {
    require_nonzero(f, "count_distinct_roots of the zero polynomial");
    if (iv.lo > iv.hi) return 0;
    return SturmChain(f).count(iv, include_lo, include_hi);
}

/// Distinct real roots on the whole line.
inline std::size_t count_real_roots(const Polynomial& f) {
    require_nonzero(f, "count_real_roots of the zero polynomial");
    return SturmChain(f).count_all();
}

/// Distinct roots in [0, infinity), searched on [0, B] with B the Cauchy bound.
inline std::size_t count_nonneg_roots(const Polynomial& f) {
    require_nonzero(f, "count_nonneg_roots of the zero polynomial");
    return count_distinct_roots(f, {0, cauchy_bound(f)}, true, true);
}

/// Distinct roots in (0, infinity).
inline std::size_t count_positive_roots(const Polynomial& f) {
    require_nonzero(f, "count_positive_roots of the zero polynomial");
    return count_distinct_roots(f, {0, cauchy_bound(f)}, false, true);
}

namespace detail {

inline void isolate_into(const SturmChain& chain, Rational lo, Rational hi, std::size_t roots,
                         std::vector<Interval>& out) {
    // Invariant: lo and hi are not roots and (lo, hi) holds `roots` distinct roots.
    if (roots == 0) return;
    if (roots == 1) {
        out.push_back({std::move(lo), std::move(hi)});
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (sgn(evaluate(chain.squarefree(), mid)) != 0) {
        std::size_t left = chain.count({lo, mid}, false, false);
        isolate_into(chain, lo, mid, left, out);
        isolate_into(chain, mid, hi, roots - left, out);
        return;
    }
    // Exact root at mid: cut out a neighbourhood whose ends are not roots.
    Rational delta = (hi - lo) / 4;
    while (chain.count({mid - delta, mid + delta}, false, false) != 1 ||
           sgn(evaluate(chain.squarefree(), mid - delta)) == 0 || sgn(evaluate(chain.squarefree(), mid + delta)) == 0) {
        delta /= 2;
    }
    Rational left_hi = mid - delta;
    Rational right_lo = mid + delta;
    std::size_t left = chain.count({lo, left_hi}, false, false);
    isolate_into(chain, lo, left_hi, left, out);
    out.push_back({mid, mid});
    isolate_into(chain, right_lo, hi, roots - left - 1, out);
}

}  // namespace detail

/// Isolating intervals for every distinct real root, in increasing order.
inline std::vector<Interval> isolate_roots(const Polynomial& f) {
    require_nonzero(f, "isolate_roots of the zero polynomial");
    SturmChain chain(f);
    std::vector<Interval> out;
    if (chain.squarefree().degree() <= 0) return out;
    const Rational bound = cauchy_bound(f);
    detail::isolate_into(chain, -bound, bound, chain.count({-bound, bound}, false, false), out);
    return out;
}

/// Isolating intervals for the distinct roots in (lo, hi); lo and hi must not be roots.
inline std::vector<Interval> isolate_roots_in(const Polynomial& f, const Rational& lo, const Rational& hi) {
    require_nonzero(f, "isolate_roots_in of the zero polynomial");
    SturmChain chain(f);
    std::vector<Interval> out;
    if (chain.squarefree().degree() <= 0 || lo >= hi) return out;
    detail::isolate_into(chain, lo, hi, chain.count({lo, hi}, false, false), out);
    return out;
}

/// Narrows an isolating interval of a root of f until its width is at most
/// `width` (or it collapses onto an exact rational root).
inline Interval refine(const Polynomial& f, Interval iv, const Rational& width) {
    require_nonzero(f, "refine on the zero polynomial");
    if (iv.is_point()) return iv;
    const Polynomial p = squarefree_part(f);
    int lo_sign = sgn(evaluate(p, iv.lo));
    while (iv.width() > width) {
        Rational mid = iv.midpoint();
        int s = sgn(evaluate(p, mid));
        if (s == 0) return {mid, mid};
        if (s != lo_sign) {
            iv.hi = mid;
        } else {
            iv.lo = mid;
            lo_sign = s;
        }
    }
    return iv;
}

/// Sign of q at the unique root of h inside `iv` (an isolating interval of h).
/// Exact: a common root is detected through gcd(h, q); otherwise the interval
/// is narrowed until q has no root in it and q is evaluated at its midpoint.
inline int sign_at_root(const Polynomial& h, Interval iv, const Polynomial& q) {
    require_nonzero(h, "sign_at_root needs a nonzero defining polynomial");
    if (q.is_zero()) return 0;
    if (iv.is_point()) return sgn(evaluate(q, iv.lo));
    const Polynomial common = gcd(squarefree_part(h), q);
    if (common.degree() > 0 && count_distinct_roots(common, iv, true, true) > 0) return 0;
    if (q.degree() <= 0) return sgn(q.leading());
    const SturmChain q_chain(q);
    Rational width = iv.width();
    while (q_chain.count(iv, true, true) > 0) {
        width /= 2;
        iv = refine(h, iv, width);
        if (iv.is_point()) return sgn(evaluate(q, iv.lo));
    }
    return sgn(evaluate(q, iv.midpoint()));
}

/// True iff all deg f roots (with multiplicity) are real. Constants are
/// vacuously real-rooted.
inline bool is_real_rooted(const Polynomial& f) {
    require_nonzero(f, "is_real_rooted of the zero polynomial");
    if (f.degree() <= 1) return true;
    long real_with_multiplicity = 0;
    const auto factors = squarefree_decomposition(f);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() <= 0) continue;
        const auto distinct = static_cast<long>(count_real_roots(factors[i]));
        if (distinct != factors[i].degree()) return false;
        real_with_multiplicity += static_cast<long>(i + 1) * distinct;
    }
    return real_with_multiplicity == f.degree();
}

}  // namespace tropindex

#endif  // TROPINDEX_REALROOT_HPP
