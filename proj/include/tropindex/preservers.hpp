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

#ifndef TROPINDEX_PRESERVERS_HPP
#define TROPINDEX_PRESERVERS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "indices.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "realroot.hpp"
#include "sqrt_scalar.hpp"

namespace tropindex {

/// Least n with gamma_n^2 < gamma_{n-1} gamma_{n+1}, if any.
inline std::optional<std::size_t> log_concavity_violation(const GammaSequence& gamma) {
    for (std::size_t n = 1; n + 1 < gamma.size(); ++n) {
        if (gamma[n] * gamma[n] < gamma[n - 1] * gamma[n + 1]) return n;
    }
    return std::nullopt;
}

inline bool is_log_concave(const GammaSequence& gamma) { return !log_concavity_violation(gamma); }

struct SequenceClass {
    /// Log-concave, i.e. a tropical multiplier sequence.
    bool log_concave = true;
    std::optional<std::size_t> violating_index;
};

inline SequenceClass classify_sequence(const GammaSequence& gamma) {
    auto violation = log_concavity_violation(gamma);
    return {!violation, violation};
}

/// Whether the truncated symbol gamma_0 + ... + gamma_d z^d is tropically real-rooted.
inline bool lemma1_symbol_test(const GammaSequence& gamma, std::size_t d) {
    return is_tropically_real_rooted(gamma_symbol(gamma, d));
}

/// zeta_m = sqrt(gamma_{m-1} / gamma_{m+1}) for an interior index of a
/// log-concave prefix.
inline SqrtScalar lemma1_witness(const GammaSequence& gamma, std::size_t m) {
    if (m < 1 || m + 1 >= gamma.size()) {
        throw error(errc::index_out_of_range, "lemma1_witness needs 1 <= m <= " +
                                                  std::to_string(gamma.size() < 2 ? 0 : gamma.size() - 2) +
                                                  ", got " + std::to_string(m));
    }
    if (auto n = log_concavity_violation(gamma)) {
        throw error(errc::not_log_concave, "gamma fails log-concavity at n = " + std::to_string(*n));
    }
    return SqrtScalar(gamma[m - 1] / gamma[m + 1]);
}

/// Checks gamma_m zeta^m >= gamma_n zeta^n for n = 0..d (squared, since all
/// terms are positive and zeta^2 is rational), and that zeta_1, zeta_2, ... is
/// non-decreasing over the prefix.
inline bool verify_lemma1_witness(const GammaSequence& gamma, std::size_t m, std::size_t d) {
    gamma.require_covers(d);
    const SqrtScalar zeta = lemma1_witness(gamma, m);
    const Rational& rho = zeta.radicand();
    const Rational lhs = gamma[m] * gamma[m] * power(rho, m);
    for (std::size_t n = 0; n <= d; ++n) {
        if (n == m) continue;
        if (gamma[n] * gamma[n] * power(rho, n) > lhs) return false;
    }
    for (std::size_t k = 1; k + 2 < gamma.size(); ++k) {
        if (lemma1_witness(gamma, k + 1) < lemma1_witness(gamma, k)) return false;
    }
    return true;
}

struct PreservationVerdict {
    bool holds = true;
    std::optional<std::size_t> violating_index;
    std::vector<std::size_t> before;
    std::vector<std::size_t> after;
};

/// Whether every index of f (in the given sense) is an index of T_gamma[f].
inline PreservationVerdict preserves_on(const GammaSequence& gamma, const Polynomial& f, IndexKind kind) {
    require_nonzero(f, "preservation check on the zero polynomial");
    PreservationVerdict verdict;
    verdict.before = indices_of(f, kind);
    verdict.after = indices_of(apply_diagonal(gamma, f), kind);
    for (std::size_t m : verdict.before) {
        if (!std::binary_search(verdict.after.begin(), verdict.after.end(), m)) {
            verdict.holds = false;
            verdict.violating_index = m;
            break;
        }
    }
    return verdict;
}

inline PreservationVerdict preserves_tropical_on(const GammaSequence& gamma, const Polynomial& f) {
    return preserves_on(gamma, f, IndexKind::tropical);
}

inline PreservationVerdict preserves_central_on(const GammaSequence& gamma, const Polynomial& f) {
    return preserves_on(gamma, f, IndexKind::central);
}

namespace detail {

/// zeta for index m of the prefix gamma_0..gamma_d. The ends use the prefix
/// extended by equality, gamma_{-1} = gamma_0^2 / gamma_1 and
/// gamma_{d+1} = gamma_d^2 / gamma_{d-1}, which keeps it log-concave.
inline SqrtScalar product_zeta(const GammaSequence& prefix, std::size_t m) {
    const std::size_t d = prefix.size() - 1;
    if (d == 0) return SqrtScalar(1);
    if (m == 0) return SqrtScalar(power(prefix[0] / prefix[1], 2));
    if (m == d) return SqrtScalar(power(prefix[d - 1] / prefix[d], 2));
    return lemma1_witness(prefix, m);
}

/// h(x) h(-x) with x^2 replaced by w^2 / rho: its roots are +-r sqrt(rho) for
/// the roots r of h.
inline Polynomial scaled_by_sqrt(const Polynomial& h, const Rational& rho) {
    const Polynomial even = h * dilate(h, -1);
    std::vector<Rational> out(even.coeffs().begin(), even.coeffs().end());
    Rational scale = 1;
    for (std::size_t k = 0; k < out.size(); k += 2) {
        out[k] *= scale;
        scale /= rho;
    }
    return Polynomial(std::move(out));
}

}  // namespace detail

struct PreservationWitness {
    /// Witness for the index of T_gamma[f].
    Witness witness;
    /// The witness z_m for f that it was built from.
    Witness source;
    SqrtScalar zeta{1};
};

/// The product witness z_m * zeta_m for index m of T_gamma[f], where z_m
/// witnesses m for f and zeta_m is the symbol's own witness. Collapses to an
/// exact point when both factors are rational; otherwise it is an isolating
/// interval of a rational polynomial whose relevant root is the product.
inline PreservationWitness preservation_witness(const GammaSequence& gamma, const Polynomial& f, std::size_t m,
                                                IndexKind kind) {
    require_nonzero(f, "preservation_witness on the zero polynomial");
    const GammaSequence prefix = gamma.prefix(f.size() - 1);
    if (auto n = log_concavity_violation(prefix)) {
        throw error(errc::not_log_concave, "gamma fails log-concavity at n = " + std::to_string(*n));
    }
    if (!is_index(f, m, kind)) {
        throw error(errc::not_an_index, std::to_string(m) + " is not a " + to_string(kind) + " index");
    }
    PreservationWitness out;
    out.source = index_witness(f, m, kind);
    out.zeta = detail::product_zeta(prefix, m);
    const auto zeta_exact = out.zeta.exact();
    const Rational bracket_width(1, 1 << 20);

    switch (out.source.kind) {
        case Witness::Kind::point_at_zero:
            out.witness = Witness::at_zero();
            break;
        case Witness::Kind::exact_point: {
            const Rational& z = out.source.point;
            if (zeta_exact) {
                out.witness = Witness::at(z * *zeta_exact);
                break;
            }
            Interval iv = out.zeta.bracket(bracket_width);
            Polynomial h{-z * z * out.zeta.radicand(), 0, 1};
            out.witness = Witness::around({iv.lo * z, iv.hi * z}, std::move(h));
            break;
        }
        case Witness::Kind::isolating_interval: {
            const Polynomial& h_source = out.source.certificate;
            const Interval& iv = out.source.interval;
            if (zeta_exact) {
                out.witness = Witness::around({iv.lo * *zeta_exact, iv.hi * *zeta_exact},
                                              dilate(h_source, 1 / *zeta_exact));
                break;
            }
            Polynomial h = detail::scaled_by_sqrt(h_source, out.zeta.radicand());
            Rational width = bracket_width;
            while (true) {
                Interval z_iv = refine(h_source, iv, width);
                Interval zeta_iv = out.zeta.bracket(width);
                Interval product{z_iv.lo * zeta_iv.lo, z_iv.hi * zeta_iv.hi};
                if (count_distinct_roots(h, product, true, true) == 1) {
                    out.witness = Witness::around(product, std::move(h));
                    break;
                }
                width /= 2;
            }
            break;
        }
    }
    return out;
}

/// Converse construction for tropical indices: the least violating m gives
/// (1 + z + ... + z^{m+1}, m); m is tropical for it but not for its image P_gamma.
inline std::pair<Polynomial, std::size_t> counterexample_tropical(const GammaSequence& gamma) {
    auto m = log_concavity_violation(gamma);
    if (!m) throw error(errc::is_log_concave, "gamma is log-concave; no counterexample exists");
    return {geometric_poly(*m + 1), *m};
}

/// Converse construction for central indices: (z^{m-1} + 2 z^m + z^{m+1}, m).
/// The image's gap polynomial has discriminant 4 (gamma_m^2 - gamma_{m-1} gamma_{m+1}) < 0.
inline std::pair<Polynomial, std::size_t> counterexample_central(const GammaSequence& gamma) {
    auto m = log_concavity_violation(gamma);
    if (!m) throw error(errc::is_log_concave, "gamma is log-concave; no counterexample exists");
    return {trinomial(static_cast<long>(*m)), *m};
}

inline std::pair<Polynomial, std::size_t> counterexample(const GammaSequence& gamma, IndexKind kind) {
    return kind == IndexKind::tropical ? counterexample_tropical(gamma) : counterexample_central(gamma);
}

/// If f is sign-independently real-rooted, whether T_gamma[f] is too; vacuously
/// true otherwise.
inline bool preserves_sirr_on(const GammaSequence& gamma, const Polynomial& f) {
    detail::require_nonzero_coefficients(f);
    gamma.require_covers(f.size() - 1);
    if (!is_sign_independently_real_rooted(f)) return true;
    return is_sign_independently_real_rooted(apply_diagonal(gamma, f));
}

}  // namespace tropindex

#endif  // TROPINDEX_PRESERVERS_HPP
