/**
 * Copyright 2026 The absg2 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <cmath>

#include "absg2/alternatives.hpp"
#include "absg2/analytic.hpp"
#include "absg2/probability.hpp"
#include "oracles.hpp"

using namespace absg2;

namespace {

const PathProbabilities kSym{0.5, 0.5, 0.5, 0.5};

std::vector<double> grid_x()
{
    std::vector<double> xs;
    for (int i = 0; i < 20; ++i) xs.push_back(std::pow(10.0, -2.0 + 4.0 * i / 19.0));
    return xs;
}

std::vector<double> grid_r()
{
    std::vector<double> rs;
    for (int j = 0; j < 20; ++j) rs.push_back((j + 0.5) / 20.0);
    return rs;
}

}  // namespace

TEST_CASE("closed-form G2, worked values")
{
    const auto lt = g2_closed_form(PairKind::LT, kSym);
    CHECK(lt.constant_term == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(lt.oscillation_amplitude == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(lt.at(1e6, 0.0) == doctest::Approx(0.75).epsilon(1e-15));

    const auto ss = g2_closed_form(PairKind::SS, kSym);
    CHECK(ss.constant_term == 0.5);
    CHECK(ss.oscillation_amplitude == 0.5);
    CHECK(ss.at(1e6, 0.0) == 0.0);

    const auto ll = g2_closed_form(PairKind::LL, kSym);
    CHECK(ll.constant_term == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ll.oscillation_amplitude == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ll.sign == -1);
}

TEST_CASE("closed forms stated per pairing")
{
    oracle::DomainSampler sample(5);
    for (int i = 0; i < 1000; ++i) {
        const auto p = path_probabilities(sample.ratio(), BeamSplitter(sample.reflectivity()));
        const double a = p.p1a * p.p2a;
        const double b = p.p1b * p.p2b;
        const double c = p.p1a * p.p2b + p.p1b * p.p2a;
        const double amp = 2.0 * std::sqrt(p.p1a * p.p1b * p.p2a * p.p2b);
        REQUIRE(g2_closed_form(PairKind::LT, p).constant_term == doctest::Approx(1.0 + a).epsilon(1e-12));
        REQUIRE(g2_closed_form(PairKind::LL, p).constant_term == doctest::Approx(1.0).epsilon(1e-12));
        REQUIRE(g2_closed_form(PairKind::TT, p).constant_term == doctest::Approx(1.0 + a + b).epsilon(1e-12));
        REQUIRE(g2_closed_form(PairKind::SS, p).constant_term == doctest::Approx(c).epsilon(1e-12));
        REQUIRE(g2_closed_form(PairKind::SL, p).constant_term == doctest::Approx(b + c).epsilon(1e-12));
        REQUIRE(g2_closed_form(PairKind::ST, p).constant_term == doctest::Approx(2.0 * b + c).epsilon(1e-12));
        for (PairKind pair : kAllPairs) {
            const auto g = g2_closed_form(pair, p);
            REQUIRE(g.oscillation_amplitude == doctest::Approx(amp).epsilon(1e-12));
            REQUIRE(g.constant_term >= g.oscillation_amplitude - 1e-15);
        }
    }
}

TEST_CASE("closed forms equal the exact phase-ensemble average of the path sum")
{
    const double dnu = 1e6;
    for (double x : {0.05, 0.5, 1.0, 3.0, 40.0}) {
        for (double r : {0.1, 0.25, 0.5, 0.8}) {
            const auto p = path_probabilities(x, BeamSplitter(r));
            for (PairKind pair : kAllPairs) {
                const auto set = enumerate_alternatives(pair, p);
                for (double tau : {0.0, 1.3e-7, 2.5e-7, 5e-7, -7.1e-7}) {
                    const double exact = oracle::exact_ensemble_average(set, dnu, tau);
                    REQUIRE(g2_analytic(pair, p, dnu, tau) == doctest::Approx(exact).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("g2_analytic")
{
    CHECK(g2_analytic(PairKind::LL, kSym, 1e6, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g2_analytic(PairKind::LL, kSym, 1e6, 0.5e-6) == doctest::Approx(1.5).epsilon(1e-15));
    const auto p = path_probabilities(2.0, BeamSplitter(0.3));
    for (PairKind pair : kAllPairs) {
        const auto g = g2_closed_form(pair, p);
        for (double tau : {-1.0, 0.0, 3.7}) {
            CHECK(g2_analytic(pair, p, 0.0, tau) == doctest::Approx(g.constant_term - g.oscillation_amplitude));
        }
    }
}

TEST_CASE("analytic curve")
{
    ExperimentConfig cfg;
    cfg.pair = PairKind::SS;
    cfg.bs = BeamSplitter(0.5);
    cfg.delta_nu = 1e6;
    cfg.tau_grid = {-5e-7, 0.0, 5e-7};
    const auto curve = g2_analytic_curve(cfg);
    CHECK(curve.is_analytic());
    CHECK_FALSE(curve.seed.has_value());
    CHECK_FALSE(curve.standard_error.has_value());
    REQUIRE(curve.g2.size() == 3);
    CHECK(curve.g2[1] == 0.0);
    CHECK(curve.g2[0] == doctest::Approx(1.0));
}

TEST_CASE("visibility, worked values")
{
    CHECK(visibility_analytic(PairKind::LL, 1.0, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(visibility_analytic(PairKind::LT, std::sqrt(2.0) / 2.0, 0.5) ==
          doctest::Approx(1.0 / (std::sqrt(2.0) + 1.0)).epsilon(1e-14));
    CHECK(visibility_analytic(PairKind::TT, 1.0, 0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(visibility_analytic(PairKind::SS, 5.0, 0.2) == doctest::Approx(0.32 / 0.68).epsilon(1e-14));
    CHECK(visibility_analytic(PairKind::SL, 0.5, 0.5) == 0.5);
    CHECK(visibility_analytic(PairKind::LT, 1.0, 0.5) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(visibility_analytic(PairKind::SS, 1.0, 0.5) == 1.0);
    CHECK_THROWS_AS(visibility_analytic(PairKind::LL, 0.0, 0.5), DomainError);
    CHECK_THROWS_AS(visibility_analytic(PairKind::LL, 1.0, 1.0), DomainError);
}

TEST_CASE("visibility formulas agree with the closed-form G2 ratio")
{
    for (double x : grid_x()) {
        for (double r : grid_r()) {
            const auto p = path_probabilities(x, BeamSplitter(r));
            for (PairKind pair : kAllPairs) {
                const double from_g2 = g2_closed_form(pair, p).visibility();
                REQUIRE(std::abs(visibility_analytic(pair, x, r) - from_g2) <= 1e-12);
            }
        }
    }
}

TEST_CASE("visibility symmetries")
{
    for (double x : grid_x()) {
        for (double r : grid_r()) {
            for (PairKind pair : kAllPairs) {
                REQUIRE(std::abs(visibility_analytic(pair, x, r) - visibility_analytic(pair, x, 1.0 - r)) <= 1e-12);
            }
            REQUIRE(std::abs(visibility_analytic(PairKind::LL, x, r) - visibility_analytic(PairKind::LL, 1.0 / x, r)) <=
                    1e-12);
            REQUIRE(std::abs(visibility_analytic(PairKind::TT, x, r) - visibility_analytic(PairKind::TT, 1.0 / x, r)) <=
                    1e-12);
        }
    }
    for (double r : grid_r()) {
        const double v = visibility_analytic(PairKind::SS, 1.0, r);
        CHECK(visibility_analytic(PairKind::SS, 0.01, r) == v);
        CHECK(visibility_analytic(PairKind::SS, 100.0, r) == v);
    }
}

TEST_CASE("visibility ordering and bounds")
{
    oracle::DomainSampler sample(2024);
    const double lt_bound = 1.0 / (std::sqrt(2.0) + 1.0);
    for (int i = 0; i < 20000; ++i) {
        const double x = sample.ratio();
        const double r = sample.reflectivity();
        const double ll = visibility_analytic(PairKind::LL, x, r);
        const double lt = visibility_analytic(PairKind::LT, x, r);
        const double tt = visibility_analytic(PairKind::TT, x, r);
        REQUIRE(tt <= lt);
        REQUIRE(lt <= ll);
        REQUIRE(visibility_analytic(PairKind::ST, x, r) <= visibility_analytic(PairKind::SL, x, r));
        REQUIRE(ll <= 0.5 + 1e-12);
        REQUIRE(lt <= lt_bound + 1e-12);
        REQUIRE(tt <= 1.0 / 3.0 + 1e-12);
        for (PairKind pair : kAllPairs) {
            const double v = visibility_analytic(pair, x, r);
            REQUIRE(v >= 0.0);
            REQUIRE(v <= 1.0);
        }
    }
}

TEST_CASE("visibility from extrema")
{
    CHECK(visibility_from_extrema(1.5, 0.5).v == doctest::Approx(0.5));
    CHECK(visibility_from_extrema(1.0, 1.0).v == 0.0);
    CHECK(visibility_from_extrema(0.5, 0.0).v == 1.0);
    const auto res = visibility_from_extrema(2.0, 0.5);
    CHECK(res.g2_max == 2.0);
    CHECK(res.g2_min == 0.5);
    CHECK(std::abs(res.v - (res.g2_max - res.g2_min) / (res.g2_max + res.g2_min)) <= 1e-12);
    CHECK_THROWS_AS(visibility_from_extrema(0.5, 1.0), DomainError);
    CHECK_THROWS_AS(visibility_from_extrema(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(visibility_from_extrema(1.0, -0.1), DomainError);
}
