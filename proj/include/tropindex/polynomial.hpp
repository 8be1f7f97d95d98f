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

#ifndef TROPINDEX_POLYNOMIAL_HPP
#define TROPINDEX_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace tropindex {

/// Dense univariate polynomial a_0 + a_1 z + ... + a_d z^d over the rationals.
/// Trailing zeros are stripped on construction, so the zero polynomial has no
/// stored coefficients and every other value has a nonzero leading term.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial monomial(const Rational& c, std::size_t n) {
        std::vector<Rational> coeffs(n + 1);
        coeffs[n] = c;
        return Polynomial(std::move(coeffs));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    const Rational& leading() const { return coeffs_.back(); }

    /// Coefficient of z^n; zero beyond the degree.
    Rational operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Rational(0); }

    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

    Polynomial operator-() const {
        std::vector<Rational> out(coeffs_);
        for (auto& c : out) c = -c;
        return Polynomial(std::move(out));
    }

    friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
        std::vector<Rational> out(std::max(lhs.size(), rhs.size()));
        for (std::size_t n = 0; n < out.size(); ++n) out[n] = lhs[n] + rhs[n];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) {
        std::vector<Rational> out(std::max(lhs.size(), rhs.size()));
        for (std::size_t n = 0; n < out.size(); ++n) out[n] = lhs[n] - rhs[n];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) return {};
        std::vector<Rational> out(lhs.size() + rhs.size() - 1);
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            if (sgn(lhs.coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; j < rhs.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& f) {
        if (sgn(c) == 0) return {};
        std::vector<Rational> out(f.coeffs_);
        for (auto& a : out) a *= c;
        return Polynomial(std::move(out));
    }

   private:
    void trim() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Coefficient signs s_0..s_d, each +1 or -1.
class SignPattern {
   public:
    explicit SignPattern(std::vector<int> signs) : signs_(std::move(signs)) {
        for (int s : signs_) {
            if (s != 1 && s != -1) throw error(errc::parse_error, "sign entries must be +1 or -1");
        }
    }

    /// Pattern whose bit n (of `bits`) set means s_n = -1.
    static SignPattern from_bits(unsigned long long bits, std::size_t length) {
        std::vector<int> signs(length, 1);
        for (std::size_t n = 0; n < length; ++n) {
            if ((bits >> n) & 1ULL) signs[n] = -1;
        }
        return SignPattern(std::move(signs));
    }

    std::size_t size() const noexcept { return signs_.size(); }
    int operator[](std::size_t n) const { return signs_[n]; }

   private:
    std::vector<int> signs_;
};

/// A finite prefix gamma_0..gamma_N of a strictly positive multiplier sequence.
class GammaSequence {
   public:
    explicit GammaSequence(std::vector<Rational> values) : values_(std::move(values)) {
        for (std::size_t n = 0; n < values_.size(); ++n) {
            if (sgn(values_[n]) <= 0) {
                throw error(errc::non_positive_entry,
                            "gamma_" + std::to_string(n) + " = " + to_string(values_[n]) + " is not positive");
            }
        }
    }
    GammaSequence(std::initializer_list<Rational> values) : GammaSequence(std::vector<Rational>(values)) {}

    static GammaSequence ones(std::size_t length) { return GammaSequence(std::vector<Rational>(length, Rational(1))); }

    std::size_t size() const noexcept { return values_.size(); }
    const Rational& operator[](std::size_t n) const { return values_[n]; }
    std::span<const Rational> values() const noexcept { return values_; }

    /// gamma_0..gamma_d.
    GammaSequence prefix(std::size_t d) const {
        require_covers(d);
        return GammaSequence(std::vector<Rational>(values_.begin(), values_.begin() + static_cast<long>(d) + 1));
    }

    void require_covers(std::size_t d) const {
        if (values_.size() < d + 1) {
            throw error(errc::sequence_too_short, "need " + std::to_string(d + 1) + " entries, have " +
                                                      std::to_string(values_.size()));
        }
    }

    friend bool operator==(const GammaSequence&, const GammaSequence&) = default;

   private:
    std::vector<Rational> values_;
};

/// Horner evaluation; evaluate(f, 0) = a_0.
inline Rational evaluate(const Polynomial& f, const Rational& z) {
    Rational acc = 0;
    auto c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

inline Polynomial abs_coefficients(const Polynomial& f) {
    std::vector<Rational> out(f.coeffs().begin(), f.coeffs().end());
    for (auto& a : out) a = abs(a);
    return Polynomial(std::move(out));
}

inline Polynomial derivative(const Polynomial& f) {
    if (f.size() <= 1) return {};
    std::vector<Rational> out(f.size() - 1);
    for (std::size_t n = 1; n < f.size(); ++n) out[n - 1] = f[n] * static_cast<unsigned long>(n);
    return Polynomial(std::move(out));
}

/// f(c z).
inline Polynomial dilate(const Polynomial& f, const Rational& c) {
    std::vector<Rational> out(f.coeffs().begin(), f.coeffs().end());
    Rational scale = 1;
    for (auto& a : out) {
        a *= scale;
        scale *= c;
    }
    return Polynomial(std::move(out));
}

/// Index of the lowest nonzero coefficient; requires f nonzero.
inline std::size_t valuation(const Polynomial& f) {
    if (f.is_zero()) throw error(errc::zero_polynomial, "valuation of the zero polynomial");
    std::size_t n = 0;
    while (sgn(f[n]) == 0) ++n;
    return n;
}

/// f / z^k for k <= valuation(f).
inline Polynomial deflate(const Polynomial& f, std::size_t k) {
    if (f.is_zero()) return {};
    return Polynomial(std::vector<Rational>(f.coeffs().begin() + static_cast<long>(k), f.coeffs().end()));
}

/// Leading coefficient scaled to one.
inline Polynomial monic(const Polynomial& f) {
    if (f.is_zero()) return f;
    return Rational(1 / f.leading()) * f;
}

/// Euclidean division f = q g + r with deg r < deg g.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
    if (f.degree() < g.degree()) return {Polynomial{}, f};
    std::vector<Rational> rem(f.coeffs().begin(), f.coeffs().end());
    std::vector<Rational> quot(f.size() - g.size() + 1);
    const std::size_t dg = g.size() - 1;
    const Rational lead_inv = 1 / g.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + dg] * lead_inv;
        quot[k] = q;
        if (sgn(q) == 0) continue;
        for (std::size_t j = 0; j <= dg; ++j) rem[k + j] -= q * g[j];
    }
    rem.resize(dg);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

/// T_gamma[f] = sum gamma_n a_n z^n.
inline Polynomial apply_diagonal(const GammaSequence& gamma, const Polynomial& f) {
    if (f.is_zero()) return f;
    gamma.require_covers(f.size() - 1);
    std::vector<Rational> out(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t n = 0; n < out.size(); ++n) out[n] *= gamma[n];
    return Polynomial(std::move(out));
}

/// Coefficient-wise a_n s_n. The pattern must have one entry per coefficient.
inline Polynomial apply_signs(const Polynomial& f, const SignPattern& s) {
    if (s.size() != f.size()) {
        throw error(errc::length_mismatch, "sign pattern has " + std::to_string(s.size()) + " entries, polynomial has " +
                                               std::to_string(f.size()) + " coefficients");
    }
    std::vector<Rational> out(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t n = 0; n < out.size(); ++n) {
        if (s[n] < 0) out[n] = -out[n];
    }
    return Polynomial(std::move(out));
}

/// 1 + z + ... + z^d.
inline Polynomial geometric_poly(std::size_t d) { return Polynomial(std::vector<Rational>(d + 1, Rational(1))); }

/// z^{m-1} + 2 z^m + z^{m+1}.
inline Polynomial trinomial(long m) {
    if (m < 1) throw error(errc::invalid_index, "trinomial needs m >= 1, got " + std::to_string(m));
    const auto mm = static_cast<std::size_t>(m);
    std::vector<Rational> coeffs(mm + 2);
    coeffs[mm - 1] = 1;
    coeffs[mm] = 2;
    coeffs[mm + 1] = 1;
    return Polynomial(std::move(coeffs));
}

/// P_gamma truncated at degree d.
inline Polynomial gamma_symbol(const GammaSequence& gamma, std::size_t d) {
    gamma.require_covers(d);
    return Polynomial(std::vector<Rational>(gamma.values().begin(), gamma.values().begin() + static_cast<long>(d) + 1));
}

inline std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t n = 0; n < f.size(); ++n) {
        const Rational& a = f[n];
        if (sgn(a) == 0) continue;
        Rational mag = abs(a);
        if (first) {
            if (sgn(a) < 0) os << "-";
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (n == 0 || !unit) os << to_string(mag);
        if (n >= 1) os << (n == 0 || unit ? "" : "*") << "z";
        if (n >= 2) os << "^" << n;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }

}  // namespace tropindex

#endif  // TROPINDEX_POLYNOMIAL_HPP
