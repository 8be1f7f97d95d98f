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

#include <gtest/gtest.h>

#include <tropindex/indices.hpp>
#include <tropindex/oracles.hpp>
#include <tropindex/random.hpp>

namespace tropindex {
namespace {

using Indices = std::vector<std::size_t>;

Rational q(long p, long d = 1) {
    Rational r(p, d);
    r.canonicalize();
    return r;
}

template <class Fn>
errc code_of(Fn&& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return errc::parse_error;
}

TEST(TropicalIndex, Examples) {
    EXPECT_TRUE(is_tropical_index(Polynomial{1, 1, 1}, 1));
    // 1^1 * 3^1 = 3 > b_1^2 = 1.
    EXPECT_FALSE(is_tropical_index(Polynomial{1, 1, 3}, 1));
    for (std::size_t d = 0; d <= 8; ++d) {
        for (std::size_t m = 0; m <= d; ++m) EXPECT_TRUE(is_tropical_index(geometric_poly(d), m));
    }
}

TEST(TropicalIndex, SignsDoNotMatter) {
    EXPECT_TRUE(is_tropical_index(Polynomial{1, -1, 1}, 1));
    EXPECT_FALSE(is_tropical_index(Polynomial{-1, 1, -3}, 1));
}

TEST(TropicalIndex, Errors) {
    EXPECT_EQ(code_of([] { is_tropical_index(Polynomial{1, 1}, 2); }), errc::index_out_of_range);
    EXPECT_EQ(code_of([] { is_tropical_index(Polynomial{}, 0); }), errc::zero_polynomial);
}

TEST(TropicalWitness, Examples) {
    Witness w = tropical_witness(Polynomial{1, 1, 1}, 1);
    EXPECT_EQ(w.kind, Witness::Kind::exact_point);
    EXPECT_EQ(w.point, q(1));

    w = tropical_witness(Polynomial{1, 3, 1}, 1);
    EXPECT_EQ(w.kind, Witness::Kind::exact_point);
    EXPECT_EQ(w.point, q(1));

    w = tropical_witness(Polynomial{q(7, 3), -2, 5}, 0);
    EXPECT_EQ(w.kind, Witness::Kind::point_at_zero);
    EXPECT_EQ(w.point, q(0));
}

TEST(TropicalWitness, IrrationalTieGivesIsolatingInterval) {
    // m = 2 of 2 + z^2 + z^4/2: L = U = sqrt 2.
    const Polynomial f{2, 0, 1, 0, q(1, 2)};
    ASSERT_TRUE(is_tropical_index(f, 2));
    Witness w = tropical_witness(f, 2);
    ASSERT_EQ(w.kind, Witness::Kind::isolating_interval);
    EXPECT_EQ(count_distinct_roots(w.certificate, w.interval, true, true), 1u);
    EXPECT_EQ(sign_at_root(w.certificate, w.interval, Polynomial{-2, 0, 1}), 0);
    EXPECT_TRUE(verify_witness(f, 2, IndexKind::tropical, w));
}

TEST(TropicalWitness, NotAnIndex) {
    EXPECT_EQ(code_of([] { tropical_witness(Polynomial{1, 1, 3}, 1); }), errc::not_an_index);
}

TEST(CentralIndex, Examples) {
    // g = 2z - 1 - z^2 = -(z - 1)^2.
    EXPECT_TRUE(is_central_index(Polynomial{1, 2, 1}, 1));
    // g = z - 1 - z^2, discriminant -3.
    EXPECT_FALSE(is_central_index(Polynomial{1, 1, 1}, 1));
    // g = 3z - 1 - z^2, discriminant 5.
    EXPECT_TRUE(is_central_index(Polynomial{1, 3, 1}, 1));
}

TEST(CentralWitness, Examples) {
    Witness w = central_witness(Polynomial{1, 2, 1}, 1);
    ASSERT_EQ(w.kind, Witness::Kind::isolating_interval);
    EXPECT_TRUE(w.interval.contains(1));
    EXPECT_EQ(w.certificate, (Polynomial{-1, 2, -1}));

    w = central_witness(Polynomial{1, 3, 1}, 1);
    ASSERT_EQ(w.kind, Witness::Kind::exact_point);
    EXPECT_EQ(w.point, q(3, 2));
    EXPECT_EQ(evaluate(central_gap(Polynomial{1, 3, 1}, 1), w.point), q(5, 4));

    w = central_witness(Polynomial{1, 1}, 1);
    ASSERT_EQ(w.kind, Witness::Kind::exact_point);
    EXPECT_EQ(w.point, q(2));
}

TEST(CentralWitness, HigherDegreeUsesRefinedMean) {
    // 1 + 5z + z^2 + z^3 at m = 1: g = 5z - 1 - z^2 - z^3 has two positive roots.
    const Polynomial f{1, 5, 1, 1};
    ASSERT_TRUE(is_central_index(f, 1));
    Witness w = central_witness(f, 1);
    EXPECT_EQ(w.kind, Witness::Kind::exact_point);
    EXPECT_GT(w.point, 0);
    EXPECT_TRUE(verify_witness(f, 1, IndexKind::central, w));
    EXPECT_EQ(code_of([] { central_witness(Polynomial{1, 1, 1}, 1); }), errc::not_an_index);
}

TEST(IndexSets, Examples) {
    EXPECT_EQ(tropical_indices(Polynomial{1, 1, 1}), (Indices{0, 1, 2}));
    EXPECT_EQ(central_indices(Polynomial{1, 1, 1}), (Indices{0, 2}));
    EXPECT_EQ(tropical_indices(geometric_poly(3)), (Indices{0, 1, 2, 3}));
    EXPECT_EQ(central_indices(Polynomial{1, 2, 1}), (Indices{0, 1, 2}));
    EXPECT_EQ(code_of([] { tropical_indices(Polynomial{}); }), errc::zero_polynomial);
}

TEST(ZeroCoefficients, LowerIndicesUseZeroAndGapsAreNotIndices) {
    // z + z^3: v = 1, so 0 and 1 count; 2 has b_2 = 0 above v.
    const Polynomial f{0, 1, 0, 1};
    EXPECT_EQ(tropical_indices(f), (Indices{0, 1, 3}));
    EXPECT_EQ(central_indices(f), (Indices{0, 1, 3}));
    // z^2 + z^3: every index up to the valuation counts.
    EXPECT_EQ(tropical_indices(Polynomial{0, 0, 1, 1}), (Indices{0, 1, 2, 3}));
    // 1 + z^2: the gap at 1 is neither.
    EXPECT_EQ(tropical_indices(Polynomial{1, 0, 1}), (Indices{0, 2}));
    EXPECT_TRUE(index_report(f).has_zero_coefficients);
    EXPECT_FALSE(index_report(Polynomial{1, 2}).has_zero_coefficients);
    // A z = 0 witness is rejected above the valuation even though 0 >= 0 literally.
    EXPECT_FALSE(verify_witness(f, 2, IndexKind::tropical, Witness::at_zero()));
    EXPECT_TRUE(verify_witness(f, 1, IndexKind::tropical, Witness::at_zero()));
}

TEST(TropicallyRealRooted, Examples) {
    EXPECT_TRUE(is_tropically_real_rooted(geometric_poly(6)));
    EXPECT_FALSE(is_tropically_real_rooted(Polynomial{1, 1, 3}));
    EXPECT_TRUE(is_tropically_real_rooted(Polynomial{1, 2, 2}));
}

TEST(SignIndependentlyRealRooted, Examples) {
    EXPECT_TRUE(is_sign_independently_real_rooted(Polynomial{1, 2, 1}));
    EXPECT_FALSE(is_sign_independently_real_rooted(Polynomial{1, 1, 1}));
    EXPECT_TRUE(is_sign_independently_real_rooted(Polynomial{q(-3, 7), 11}));
    EXPECT_EQ(code_of([] { is_sign_independently_real_rooted(Polynomial{1, 0, 1}); }), errc::zero_coefficient);
}

TEST(SirrBruteforce, Examples) {
    EXPECT_TRUE(sirr_bruteforce(Polynomial{1, 2, 1}));
    EXPECT_FALSE(sirr_bruteforce(Polynomial{1, 1, 1}));
    EXPECT_TRUE(sirr_bruteforce(Polynomial{1, 10, 1}));
    EXPECT_EQ(code_of([] { sirr_bruteforce(Polynomial{1, 0, 1}); }), errc::zero_coefficient);
    EXPECT_EQ(code_of([] { sirr_bruteforce(geometric_poly(13)); }), errc::degree_too_large);
    EXPECT_EQ(code_of([] { sirr_bruteforce(geometric_poly(5), 4); }), errc::degree_too_large);
}

TEST(IndexReport, Examples) {
    IndexReport r = index_report(Polynomial{1, 1, 1});
    ASSERT_EQ(r.indices.size(), 3u);
    EXPECT_TRUE(r.indices[0].tropical && r.indices[1].tropical && r.indices[2].tropical);
    EXPECT_TRUE(r.indices[0].central && !r.indices[1].central && r.indices[2].central);
    EXPECT_FALSE(r.indices[1].central_witness);

    r = index_report(Polynomial{1, 2, 1});
    for (const auto& v : r.indices) {
        EXPECT_TRUE(v.tropical && v.central);
        ASSERT_TRUE(v.tropical_witness && v.central_witness);
    }

    r = index_report(Polynomial{5});
    EXPECT_EQ(r.degree, 0u);
    ASSERT_EQ(r.indices.size(), 1u);
    EXPECT_TRUE(r.indices[0].tropical && r.indices[0].central);
    EXPECT_EQ(r.indices[0].central_witness->kind, Witness::Kind::point_at_zero);
}

TEST(IndexReport, PositiveWitnessOption) {
    const WitnessOptions positive{true};
    Witness w = central_witness(Polynomial{1, 1}, 0, positive);
    ASSERT_EQ(w.kind, Witness::Kind::exact_point);
    EXPECT_GT(w.point, 0);
    EXPECT_TRUE(verify_witness(Polynomial{1, 1}, 0, IndexKind::central, w));
    w = tropical_witness(Polynomial{4, 1, 1}, 0, positive);
    ASSERT_EQ(w.kind, Witness::Kind::exact_point);
    EXPECT_TRUE(verify_witness(Polynomial{4, 1, 1}, 0, IndexKind::tropical, w));
    // Below the valuation there is no positive witness; z = 0 stays.
    EXPECT_EQ(tropical_witness(Polynomial{0, 0, 1}, 1, positive).kind, Witness::Kind::point_at_zero);
}

TEST(VerifyWitness, RejectsWrongPoints) {
    const Polynomial f{1, 3, 1};
    EXPECT_FALSE(verify_witness(f, 1, IndexKind::central, Witness::at(q(1, 10))));
    EXPECT_FALSE(verify_witness(f, 1, IndexKind::central, Witness::at_zero()));
    EXPECT_FALSE(verify_witness(f, 1, IndexKind::tropical, Witness::at(5)));
    EXPECT_FALSE(verify_witness(f, 1, IndexKind::central, Witness::at(-1)));
    EXPECT_FALSE(verify_witness(f, 1, IndexKind::central, Witness::around({0, 4}, Polynomial{-10, 0, 1})));
    // sqrt 2 does satisfy it: 3 sqrt 2 - 3 > 0.
    EXPECT_TRUE(verify_witness(f, 1, IndexKind::central, Witness::around({0, 3}, Polynomial{-2, 0, 1})));
}

// Randomised properties.
class IndexProperties : public ::testing::Test {
   protected:
    Rng rng{derive_seed(2026, 102, 0)};

    Polynomial any_poly(int t, std::size_t max_degree) {
        switch (t % 4) {
            case 0: return random_polynomial(rng, {0, max_degree, false, true, false});
            case 1: return random_polynomial(rng, {0, max_degree, true, true, true});
            case 2: return random_lopsided_polynomial(rng, 0, max_degree, rng.uniform(2, 5));
            default: return random_polynomial(rng, {0, max_degree, true, false, false});
        }
    }
};

TEST_F(IndexProperties, CentralImpliesTropicalAndEndpointsAreCentral) {
    for (int t = 0; t < 300; ++t) {
        Polynomial f = any_poly(t, 12);
        auto trop = tropical_indices(f);
        auto cent = central_indices(f);
        EXPECT_TRUE(std::includes(trop.begin(), trop.end(), cent.begin(), cent.end())) << f;
        ASSERT_FALSE(cent.empty());
        EXPECT_EQ(cent.front(), 0u);
        EXPECT_EQ(cent.back(), f.size() - 1);
    }
}

TEST_F(IndexProperties, ScaleAndDilationInvariance) {
    for (int t = 0; t < 200; ++t) {
        Polynomial f = any_poly(t, 10);
        Rational c = rng.positive_rational(30, 30);
        Rational s = rng.chance(1, 2) ? c : Rational(-c);
        EXPECT_EQ(tropical_indices(s * f), tropical_indices(f));
        EXPECT_EQ(central_indices(s * f), central_indices(f));
        EXPECT_EQ(tropical_indices(dilate(f, c)), tropical_indices(f));
        EXPECT_EQ(central_indices(dilate(f, c)), central_indices(f));
    }
}

TEST_F(IndexProperties, DecidersAgreeWithOracles) {
    for (int t = 0; t < 300; ++t) {
        Polynomial f = any_poly(t, 10);
        for (std::size_t m = 0; m < f.size(); ++m) {
            const bool trop = is_tropical_index(f, m);
            EXPECT_EQ(trop, oracle::tropical_by_hull(f, m)) << f << " m=" << m;
            EXPECT_EQ(trop, oracle::tropical_by_sampling(f, m)) << f << " m=" << m;
            EXPECT_EQ(is_central_index(f, m), oracle::central_by_maximization(f, m)) << f << " m=" << m;
        }
    }
}

TEST_F(IndexProperties, EveryWitnessVerifies) {
    for (int t = 0; t < 150; ++t) {
        Polynomial f = any_poly(t, 9);
        const WitnessOptions options{t % 2 == 0};
        IndexReport r = index_report(f, options);
        for (const auto& v : r.indices) {
            if (v.tropical) EXPECT_TRUE(verify_witness(f, v.m, IndexKind::tropical, *v.tropical_witness)) << f;
            if (v.central) EXPECT_TRUE(verify_witness(f, v.m, IndexKind::central, *v.central_witness)) << f;
        }
    }
}

TEST(IndexOracle, GridSearchNeverBeatsTheDecider) {
    // Definitional check of the max-inequality on a rational grid: any grid
    // point that works proves the index tropical.
    std::vector<Rational> grid;
    for (int k = 1; k <= 256; ++k) grid.push_back(Rational(k, 32));
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            for (int c = 1; c <= 4; ++c) {
                for (int e = 1; e <= 4; ++e) {
                    const Polynomial f{a, b, c, e};
                    for (std::size_t m = 0; m < 4; ++m) {
                        bool found = false;
                        for (const auto& z : grid) {
                            bool ok = true;
                            for (std::size_t n = 0; n < 4 && ok; ++n) {
                                if (n != m && f[n] * power(z, n) > f[m] * power(z, m)) ok = false;
                            }
                            if (ok) found = true;
                        }
                        if (found) EXPECT_TRUE(is_tropical_index(f, m)) << f << " m=" << m;
                    }
                }
            }
        }
    }
}

TEST(SirrCharacterization, FastRouteMatchesBruteForceOnSmallPatterns) {
    for (int d = 1; d <= 3; ++d) {
        std::vector<int> digits(static_cast<std::size_t>(d) + 1, 1);
        while (true) {
            std::vector<Rational> coeffs;
            for (int x : digits) coeffs.emplace_back(x);
            const Polynomial f(coeffs);
            EXPECT_EQ(is_sign_independently_real_rooted(f), sirr_bruteforce(f)) << f;
            std::size_t k = 0;
            while (k < digits.size() && ++digits[k] > 4) digits[k++] = 1;
            if (k == digits.size()) break;
        }
    }
}

}  // namespace
}  // namespace tropindex
