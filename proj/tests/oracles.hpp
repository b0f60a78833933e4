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

#ifndef ABSG2_TESTS_ORACLES_HPP
#define ABSG2_TESTS_ORACLES_HPP

// Test-only reference computations. Nothing here calls the closed-form or
// Monte Carlo code paths.

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "absg2/alternatives.hpp"

namespace absg2::oracle {

/// Exact ensemble average of |sum_k z_k|^2 over independent uniform slot
/// phases. E[exp(i sum_j n_j phi_j)] is 1 when every n_j vanishes and 0
/// otherwise, so only term pairs with identical slot multisets survive.
inline double exact_ensemble_average(const AlternativeSet& set, double delta_nu, double tau)
{
    const double nu_a = 0.5 * delta_nu;
    const double nu_b = -0.5 * delta_nu;
    const double t1 = 0.5 * tau;
    const double t2 = -0.5 * tau;
    auto amplitude = [&](const Alternative& alt) {
        const double nu1 = alt.detector1_source == SourceId::A ? nu_a : nu_b;
        const double nu2 = alt.detector2_source == SourceId::A ? nu_a : nu_b;
        const double angle =
            alt.bs_phase_count * std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * (nu1 * t1 + nu2 * t2);
        return std::polar(alt.weight, angle);
    };
    auto slots = [](const Alternative& alt) {
        std::map<std::size_t, int> m;
        ++m[alt.phase_slots[0]];
        ++m[alt.phase_slots[1]];
        return m;
    };
    double total = 0.0;
    for (const auto& k : set.terms) {
        for (const auto& l : set.terms) {
            if (slots(k) == slots(l)) total += std::real(amplitude(k) * std::conj(amplitude(l)));
        }
    }
    return total;
}

/// Uniform sampler for property tests.
struct DomainSampler {
    std::mt19937_64 rng;
    explicit DomainSampler(std::uint64_t seed) : rng(seed) {}

    double ratio()  // log-uniform over [1e-3, 1e3]
    {
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        return std::pow(10.0, u(rng));
    }
    double reflectivity()
    {
        std::uniform_real_distribution<double> u(1e-6, 1.0 - 1e-6);
        return u(rng);
    }
};

}  // namespace absg2::oracle

#endif  // ABSG2_TESTS_ORACLES_HPP
