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

#ifndef TROPINDEX_VERIFY_HPP
#define TROPINDEX_VERIFY_HPP

// Seeded property harness: each claim draws its instances from
// derive_seed(seed, claim stream, trial) and checks them with exact deciders.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "indices.hpp"
#include "io.hpp"
#include "oracles.hpp"
#include "polynomial.hpp"
#include "preservers.hpp"
#include "random.hpp"

namespace tropindex::verify {

using io::json;

struct Config {
    std::uint64_t seed = 42;
    /// Base trial count; claims scale it (see each claim).
    std::size_t trials = 1000;
    std::size_t max_degree = 12;
};

/// The index deciders under test. Replaceable so the harness itself can be
/// checked against deliberately broken deciders.
struct Deciders {
    std::function<bool(const Polynomial&, std::size_t)> tropical = [](const Polynomial& f, std::size_t m) {
        return is_tropical_index(f, m);
    };
    std::function<bool(const Polynomial&, std::size_t)> central = [](const Polynomial& f, std::size_t m) {
        return is_central_index(f, m);
    };

    const std::function<bool(const Polynomial&, std::size_t)>& of(IndexKind kind) const {
        return kind == IndexKind::tropical ? tropical : central;
    }

    std::vector<std::size_t> indices(const Polynomial& f, IndexKind kind) const {
        std::vector<std::size_t> out;
        for (std::size_t m = 0; m < f.size(); ++m) {
            if (of(kind)(f, m)) out.push_back(m);
        }
        return out;
    }

    bool all_central(const Polynomial& f) const { return indices(f, IndexKind::central).size() == f.size(); }
};

struct ClaimResult {
    std::string id;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::optional<json> first_failure;
    double seconds = 0;
};

struct Report {
    Config config;
    std::vector<ClaimResult> claims;

    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : claims) n += c.failures;
        return n;
    }
};

inline json to_json(const Report& report) {
    json claims = json::array();
    for (const auto& c : report.claims) {
        claims.push_back(json{{"id", c.id},
                              {"trials", c.trials},
                              {"failures", c.failures},
                              {"first_failure", c.first_failure ? *c.first_failure : json(nullptr)}});
    }
    return json{{"seed", report.config.seed},
                {"trials", report.config.trials},
                {"max_degree", report.config.max_degree},
                {"claims", claims},
                {"failures", report.failures()},
                {"passed", report.failures() == 0}};
}

namespace detail {

inline bool subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Runs `body(trial, rng, payload)` per trial; a false return or an exception
/// counts as a failure and the first one keeps its payload.
class Tally {
   public:
    Tally(std::string id, const Config& config, std::uint64_t stream)
        : config_(config), stream_(stream), start_(std::chrono::steady_clock::now()) {
        result_.id = std::move(id);
    }

    template <class Body>
    void run(std::size_t trials, Body&& body) {
        for (std::size_t t = 0; t < trials; ++t) {
            Rng rng(derive_seed(config_.seed, stream_, offset_ + t));
            json payload{{"seed", config_.seed}, {"claim", result_.id}, {"trial", offset_ + t}};
            record(payload, [&] { return body(t, rng, payload); });
        }
        offset_ += trials;
    }

    /// One deterministic (non-random) case.
    template <class Body>
    void check(json payload, Body&& body) {
        payload["claim"] = result_.id;
        record(payload, [&] { return body(payload); });
    }

    ClaimResult finish() {
        result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return std::move(result_);
    }

   private:
    template <class Fn>
    void record(json& payload, Fn&& fn) {
        ++result_.trials;
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            payload["error"] = e.what();
        }
        if (!ok) {
            ++result_.failures;
            if (!result_.first_failure) result_.first_failure = payload;
        }
    }

    const Config& config_;
    std::uint64_t stream_;
    std::size_t offset_ = 0;
    ClaimResult result_;
    std::chrono::steady_clock::time_point start_;
};

inline std::size_t scaled(std::size_t trials, std::size_t num, std::size_t den) {
    return std::max<std::size_t>(1, trials * num / den);
}

/// All polynomials of degree d whose coefficients range over `values`.
template <class Fn>
void for_each_pattern(std::size_t d, const std::vector<int>& values, Fn&& fn) {
    std::vector<std::size_t> digits(d + 1, 0);
    while (true) {
        std::vector<Rational> coeffs;
        for (auto i : digits) coeffs.emplace_back(values[i]);
        fn(coeffs);
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == values.size()) digits[k++] = 0;
        if (k == digits.size()) return;
    }
}

inline Polynomial random_sirr_candidate(Rng& rng, std::size_t max_degree) {
    Polynomial f = random_lopsided_polynomial(rng, 1, max_degree, rng.uniform(3, 12));
    std::vector<int> signs(f.size());
    for (auto& s : signs) s = rng.chance(1, 2) ? 1 : -1;
    return apply_signs(f, SignPattern(signs));
}

}  // namespace detail

/// Sign-independent real-rootedness: all-central route versus brute force over
/// sign patterns. Exhaustive for moduli in {1,2,3} and degree 1..4, plus
/// trials/2 random instances of degree <= 8.
inline ClaimResult claim_prop1(const Config& config, const Deciders& deciders = {}) {
    detail::Tally tally("prop1", config, 1);
    for (std::size_t d = 1; d <= 4; ++d) {
        detail::for_each_pattern(d, {1, 2, 3}, [&](const std::vector<Rational>& coeffs) {
            Polynomial f(coeffs);
            tally.check(json{{"f", io::to_json(f)}},
                        [&](json&) { return deciders.all_central(f) == sirr_bruteforce(f); });
        });
    }
    const std::size_t degree = std::min<std::size_t>(8, config.max_degree);
    tally.run(detail::scaled(config.trials, 1, 2), [&](std::size_t t, Rng& rng, json& payload) {
        Polynomial f = t % 2 == 0 ? detail::random_sirr_candidate(rng, std::max<std::size_t>(degree, 1))
                                  : random_polynomial(rng, {1, std::max<std::size_t>(degree, 1), false, true, t % 4 == 1});
        payload["f"] = io::to_json(f);
        return deciders.all_central(f) == sirr_bruteforce(f);
    });
    return tally.finish();
}

/// Forward direction for log-concave gamma: every index of f survives in
/// T_gamma[f], and the product witness z_m * zeta_m re-verifies exactly.
inline ClaimResult claim_forward(const Config& config, IndexKind kind, const Deciders& deciders = {}) {
    const bool tropical = kind == IndexKind::tropical;
    detail::Tally tally(tropical ? "thm1_fwd" : "thm2_fwd", config, tropical ? 2 : 3);
    tally.run(config.trials, [&](std::size_t t, Rng& rng, json& payload) {
        Polynomial f;
        switch (t % 3) {
            case 0: f = random_lopsided_polynomial(rng, 0, config.max_degree, rng.uniform(2, 6)); break;
            case 1: f = random_polynomial(rng, {0, config.max_degree, false, false, false}); break;
            default: f = random_polynomial(rng, {0, config.max_degree, false, false, true}); break;
        }
        const std::size_t extra = static_cast<std::size_t>(rng.uniform(0, 2));
        GammaSequence gamma = random_log_concave(rng, f.size() + extra);
        payload["f"] = io::to_json(f);
        payload["gamma"] = io::to_json(gamma);
        const Polynomial image = apply_diagonal(gamma, f);
        const auto before = deciders.indices(f, kind);
        const auto after = deciders.indices(image, kind);
        if (!detail::subset(before, after)) {
            payload["before"] = io::index_list(before);
            payload["after"] = io::index_list(after);
            return false;
        }
        for (std::size_t m : before) {
            PreservationWitness pw = preservation_witness(gamma, f, m, kind);
            if (!verify_witness(image, m, kind, pw.witness)) {
                payload["m"] = m;
                payload["witness"] = io::to_json(pw.witness);
                return false;
            }
        }
        return true;
    });
    return tally.finish();
}

/// Converse constructions for non-log-concave gamma, trials/5 sequences: the
/// returned index belongs to f and not to T_gamma[f], as judged by the deciders.
inline ClaimResult claim_converse(const Config& config, IndexKind kind, const Deciders& deciders = {}) {
    const bool tropical = kind == IndexKind::tropical;
    detail::Tally tally(tropical ? "thm1_conv" : "thm2_conv", config, tropical ? 4 : 5);
    tally.run(detail::scaled(config.trials, 1, 5), [&](std::size_t, Rng& rng, json& payload) {
        const auto length = static_cast<std::size_t>(rng.uniform(3, static_cast<std::int64_t>(config.max_degree) + 1));
        GammaSequence gamma = random_non_log_concave(rng, length);
        auto [f, m] = counterexample(gamma, kind);
        payload["gamma"] = io::to_json(gamma);
        payload["f"] = io::to_json(f);
        payload["m"] = m;
        const auto& decide = deciders.of(kind);
        return decide(f, m) && !decide(apply_diagonal(gamma, f), m);
    });
    return tally.finish();
}

/// Log-concavity versus tropical real-rootedness of the truncated symbol, and
/// the explicit witness zeta_m with its monotone chain. trials random
/// prefixes (length <= max_degree + 1) plus all prefixes of length <= 5 over
/// {1, 2, 3}.
inline ClaimResult claim_lemma1(const Config& config, const Deciders& deciders = {}) {
    detail::Tally tally("lemma1", config, 6);
    auto check = [&](const GammaSequence& gamma) {
        const std::size_t d = gamma.size() - 1;
        const Polynomial symbol = gamma_symbol(gamma, d);
        const bool symbol_ok = deciders.indices(symbol, IndexKind::tropical).size() == symbol.size();
        if (is_log_concave(gamma) != symbol_ok) return false;
        if (!symbol_ok) return true;
        for (std::size_t m = 1; m < d; ++m) {
            if (!verify_lemma1_witness(gamma, m, d)) return false;
        }
        return true;
    };
    for (std::size_t length = 1; length <= 5; ++length) {
        detail::for_each_pattern(length - 1, {1, 2, 3}, [&](const std::vector<Rational>& values) {
            GammaSequence gamma(values);
            tally.check(json{{"gamma", io::to_json(gamma)}}, [&](json&) { return check(gamma); });
        });
    }
    tally.run(config.trials, [&](std::size_t t, Rng& rng, json& payload) {
        const auto length = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(config.max_degree) + 1));
        std::vector<Rational> values;
        if (t % 2 == 0) {
            GammaSequence lc = random_log_concave(rng, length);
            values.assign(lc.values().begin(), lc.values().end());
        } else {
            for (std::size_t n = 0; n < length; ++n) values.push_back(rng.positive_rational(20, 5));
        }
        GammaSequence gamma(values);
        payload["gamma"] = io::to_json(gamma);
        return check(gamma);
    });
    return tally.finish();
}

/// Structural facts on random signed polynomials with zeros: central is a
/// subset of tropical, 0 and d are always central, and both index sets are
/// invariant under f -> c f (c != 0) and f(z) -> f(c z) (c > 0).
inline ClaimResult claim_structure(const Config& config, const Deciders& deciders = {}) {
    detail::Tally tally("central_subset_tropical", config, 7);
    tally.run(config.trials, [&](std::size_t t, Rng& rng, json& payload) {
        Polynomial f = random_polynomial(rng, {0, config.max_degree, t % 2 == 0, true, t % 3 == 0});
        payload["f"] = io::to_json(f);
        const auto trop = deciders.indices(f, IndexKind::tropical);
        const auto cent = deciders.indices(f, IndexKind::central);
        const std::size_t d = f.size() - 1;
        if (!detail::subset(cent, trop)) return false;
        if (cent.empty() || cent.front() != 0 || cent.back() != d) return false;
        Rational c = rng.positive_rational(50, 50);
        if (rng.chance(1, 2)) c = -c;
        Rational dilation = rng.positive_rational(50, 50);
        payload["scale"] = to_string(c);
        payload["dilation"] = to_string(dilation);
        const Polynomial scaled = c * f;
        const Polynomial dilated = dilate(f, dilation);
        return deciders.indices(scaled, IndexKind::tropical) == trop &&
               deciders.indices(scaled, IndexKind::central) == cent &&
               deciders.indices(dilated, IndexKind::tropical) == trop &&
               deciders.indices(dilated, IndexKind::central) == cent;
    });
    return tally.finish();
}

/// Tropical: cross-power vs upper hull vs definitional sampling. Central:
/// root count vs critical-point maximisation. Degree <= 10.
inline ClaimResult claim_oracles(const Config& config, const Deciders& deciders = {}) {
    detail::Tally tally("oracle_agreement", config, 8);
    const std::size_t degree = std::min<std::size_t>(10, config.max_degree);
    tally.run(config.trials, [&](std::size_t t, Rng& rng, json& payload) {
        Polynomial f;
        switch (t % 4) {
            case 0: f = random_polynomial(rng, {0, degree, false, true, false}); break;
            case 1: f = random_polynomial(rng, {0, degree, true, true, true}); break;
            case 2: f = random_lopsided_polynomial(rng, 0, degree, rng.uniform(2, 5)); break;
            default: f = random_polynomial(rng, {0, degree, true, false, false}); break;
        }
        payload["f"] = io::to_json(f);
        for (std::size_t m = 0; m < f.size(); ++m) {
            const bool trop = deciders.tropical(f, m);
            const bool cent = deciders.central(f, m);
            if (trop != oracle::tropical_by_hull(f, m) || trop != oracle::tropical_by_sampling(f, m) ||
                cent != oracle::central_by_maximization(f, m)) {
                payload["m"] = m;
                return false;
            }
        }
        return true;
    });
    return tally.finish();
}

/// Sign-independent real-rootedness under T_gamma. trials/10 non-log-concave
/// gamma: the deflated trinomial is SIRR and its image is not. trials/5
/// log-concave gamma with SIRR inputs: the image stays SIRR.
inline ClaimResult claim_corollary(const Config& config, const Deciders& deciders = {}) {
    detail::Tally tally("corollary", config, 9);
    tally.run(detail::scaled(config.trials, 1, 10), [&](std::size_t, Rng& rng, json& payload) {
        const auto length = static_cast<std::size_t>(rng.uniform(3, static_cast<std::int64_t>(config.max_degree) + 1));
        GammaSequence gamma = random_non_log_concave(rng, length);
        auto [f, m] = counterexample_central(gamma);
        payload["gamma"] = io::to_json(gamma);
        payload["m"] = m;
        // z^{m-1} does not affect sign-independent real-rootedness.
        const Polynomial source = deflate(f, m - 1);
        const Polynomial image = deflate(apply_diagonal(gamma, f), m - 1);
        payload["source"] = io::to_json(source);
        payload["image"] = io::to_json(image);
        return deciders.all_central(source) && sirr_bruteforce(source) && !deciders.all_central(image) &&
               !sirr_bruteforce(image);
    });
    const std::size_t degree = std::max<std::size_t>(1, std::min<std::size_t>(8, config.max_degree));
    tally.run(detail::scaled(config.trials, 1, 5), [&](std::size_t, Rng& rng, json& payload) {
        Polynomial f;
        for (int attempt = 0;; ++attempt) {
            f = attempt < 20 ? detail::random_sirr_candidate(rng, degree)
                             : random_lopsided_polynomial(rng, 1, degree, 10);
            if (sirr_bruteforce(f)) break;
        }
        GammaSequence gamma = random_log_concave(rng, f.size());
        payload["f"] = io::to_json(f);
        payload["gamma"] = io::to_json(gamma);
        const Polynomial image = apply_diagonal(gamma, f);
        return deciders.all_central(image) && sirr_bruteforce(image);
    });
    return tally.finish();
}

inline const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids{"prop1",  "thm1_fwd",  "thm1_conv", "thm2_fwd",
                                              "thm2_conv", "lemma1", "corollary", "central_subset_tropical",
                                              "oracle_agreement"};
    return ids;
}

inline ClaimResult run_claim(const std::string& id, const Config& config, const Deciders& deciders = {}) {
    if (id == "prop1") return claim_prop1(config, deciders);
    if (id == "thm1_fwd") return claim_forward(config, IndexKind::tropical, deciders);
    if (id == "thm1_conv") return claim_converse(config, IndexKind::tropical, deciders);
    if (id == "thm2_fwd") return claim_forward(config, IndexKind::central, deciders);
    if (id == "thm2_conv") return claim_converse(config, IndexKind::central, deciders);
    if (id == "lemma1") return claim_lemma1(config, deciders);
    if (id == "corollary") return claim_corollary(config, deciders);
    if (id == "central_subset_tropical") return claim_structure(config, deciders);
    if (id == "oracle_agreement") return claim_oracles(config, deciders);
    throw error(errc::parse_error, "unknown claim '" + id + "'");
}

inline Report run_all(const Config& config, const Deciders& deciders = {}) {
    Report report{config, {}};
    for (const auto& id : claim_ids()) report.claims.push_back(run_claim(id, config, deciders));
    return report;
}

}  // namespace tropindex::verify

#endif  // TROPINDEX_VERIFY_HPP
