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

#include <algorithm>
#include <cmath>

#include "absg2/alternatives.hpp"
#include "absg2/probability.hpp"
#include "oracles.hpp"

using namespace absg2;

TEST_CASE("temporal propagator")
{
    CHECK(temporal_propagator(123.0, 0.0) == std::complex<double>(1.0, 0.0));
    const auto quarter = temporal_propagator(1.0, 0.25);
    CHECK(quarter.real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(quarter.imag() == doctest::Approx(1.0).epsilon(1e-15));
    oracle::DomainSampler sample(7);
    for (int i = 0; i < 100; ++i) {
        const double nu = sample.ratio() * 1e6;
        const double t = sample.reflectivity() * 1e-3;
        CHECK(std::abs(temporal_propagator(nu, t)) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("term counts follow each pairing")
{
    const PathProbabilities sym{0.5, 0.5, 0.5, 0.5};
    CHECK(enumerate_alternatives(PairKind::LT, sym).terms.size() == 5);
    CHECK(enumerate_alternatives(PairKind::LL, sym).terms.size() == 4);
    CHECK(enumerate_alternatives(PairKind::TT, sym).terms.size() == 6);
    CHECK(enumerate_alternatives(PairKind::SS, sym).terms.size() == 2);
    CHECK(enumerate_alternatives(PairKind::SL, sym).terms.size() == 3);
    CHECK(enumerate_alternatives(PairKind::ST, sym).terms.size() == 4);
}

TEST_CASE("single-photon pair keeps only the cross terms")
{
    const auto p = path_probabilities(3.0, BeamSplitter(0.35));
    const auto set = enumerate_alternatives(PairKind::SS, p);
    REQUIRE(set.terms.size() == 2);
    CHECK(set.terms[0].weight == doctest::Approx(std::sqrt(p.p1a * p.p2b)));
    CHECK(set.terms[1].weight == doctest::Approx(std::sqrt(p.p1b * p.p2a)));
    CHECK(set.terms[0].bs_phase_count == 0);
    CHECK(set.terms[1].bs_phase_count == 2);
    CHECK(set.terms[0].detector1_source == SourceId::A);
    CHECK(set.terms[0].detector2_source == SourceId::B);
    CHECK(set.terms[1].detector1_source == SourceId::B);
    CHECK(set.terms[1].detector2_source == SourceId::A);
    CHECK(set.slot_count == 2);
}

TEST_CASE("symmetric laser pair has four equal weights")
{
    const auto set = enumerate_alternatives(PairKind::LL, {0.5, 0.5, 0.5, 0.5});
    for (const auto& t : set.terms) CHECK(t.weight == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(set.slot_count == 2);
}

TEST_CASE("thermal orderings carry 1/sqrt(2) and swap the slots")
{
    const auto p = path_probabilities(0.7, BeamSplitter(0.6));
    const auto set = enumerate_alternatives(PairKind::TT, p);
    REQUIRE(set.terms.size() == 6);
    CHECK(set.terms[0].weight == doctest::Approx(std::sqrt(p.p1a * p.p2a / 2.0)));
    CHECK(set.terms[0].weight == set.terms[1].weight);
    CHECK(set.terms[0].phase_slots[0] == set.terms[1].phase_slots[1]);
    CHECK(set.terms[0].phase_slots[1] == set.terms[1].phase_slots[0]);
    CHECK(set.terms[0].phase_slots[0] != set.terms[0].phase_slots[1]);
    CHECK(set.terms[2].weight == doctest::Approx(std::sqrt(p.p1b * p.p2b / 2.0)));
    CHECK(set.slot_count == 6);
}

TEST_CASE("slot counts per pairing")
{
    CHECK(slot_count(PairKind::LT) == 4);
    CHECK(slot_count(PairKind::LL) == 2);
    CHECK(slot_count(PairKind::TT) == 6);
    CHECK(slot_count(PairKind::SS) == 2);
    CHECK(slot_count(PairKind::SL) == 2);
    CHECK(slot_count(PairKind::ST) == 4);
    CHECK(slot_count(PairKind::LL, PhaseModel::IndependentSlots) == 8);
    const PathProbabilities sym{0.5, 0.5, 0.5, 0.5};
    for (PairKind pair : kAllPairs) {
        for (auto model : {PhaseModel::Physical, PhaseModel::IndependentSlots}) {
            const auto set = enumerate_alternatives(pair, sym, model);
            CHECK(set.slot_count == slot_count(pair, model));
            for (const auto& t : set.terms) {
                CHECK(t.phase_slots[0] < set.slot_count);
                CHECK(t.phase_slots[1] < set.slot_count);
            }
        }
    }
}

TEST_CASE("independent slots never share a phase")
{
    const auto set = enumerate_alternatives(PairKind::LL, {0.5, 0.5, 0.5, 0.5}, PhaseModel::IndependentSlots);
    std::vector<std::size_t> used;
    for (const auto& t : set.terms) {
        used.push_back(t.phase_slots[0]);
        used.push_back(t.phase_slots[1]);
    }
    std::sort(used.begin(), used.end());
    CHECK(std::adjacent_find(used.begin(), used.end()) == used.end());
}

TEST_CASE("squared weights add up to the admitted way probabilities")
{
    oracle::DomainSampler sample(99);
    for (int i = 0; i < 2000; ++i) {
        const auto p = path_probabilities(sample.ratio(), BeamSplitter(sample.reflectivity()));
        const auto w = way_probabilities(p);
        auto total = [&](PairKind pair) { return enumerate_alternatives(pair, p).total_weight(); };
        REQUIRE(std::abs(total(PairKind::LT) - 1.0) <= 1e-12);
        REQUIRE(std::abs(total(PairKind::LL) - 1.0) <= 1e-12);
        REQUIRE(std::abs(total(PairKind::TT) - 1.0) <= 1e-12);
        REQUIRE(std::abs(total(PairKind::SS) - w.cross) <= 1e-12);
        REQUIRE(std::abs(total(PairKind::SL) - (w.both_b + w.cross)) <= 1e-12);
        REQUIRE(std::abs(total(PairKind::ST) - (w.both_b + w.cross)) <= 1e-12);
    }
}

TEST_CASE("cross terms are pi out of phase")
{
    for (PairKind pair : kAllPairs) {
        const auto set = enumerate_alternatives(pair, {0.5, 0.5, 0.5, 0.5});
        const auto& c1 = set.terms[set.terms.size() - 2];
        const auto& c2 = set.terms.back();
        CHECK(c2.bs_phase_count - c1.bs_phase_count == 2);
        // Same photons, so the random phases cancel in their interference.
        CHECK(c1.phase_slots[0] == c2.phase_slots[1]);
        CHECK(c1.phase_slots[1] == c2.phase_slots[0]);
        for (const auto& t : set.terms) {
            CHECK(t.bs_phase_count >= 0);
            CHECK(t.bs_phase_count <= 2);
            CHECK(t.weight >= 0.0);
        }
    }
}

TEST_CASE("slot assignment is deterministic")
{
    const auto p = path_probabilities(1.3, BeamSplitter(0.4));
    for (PairKind pair : kAllPairs) {
        const auto a = enumerate_alternatives(pair, p);
        const auto b = enumerate_alternatives(pair, p);
        REQUIRE(a.terms.size() == b.terms.size());
        for (std::size_t k = 0; k < a.terms.size(); ++k) CHECK(a.terms[k].phase_slots == b.terms[k].phase_slots);
    }
}
