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

#ifndef ABSG2_ANALYTIC_HPP
#define ABSG2_ANALYTIC_HPP

#include "absg2/core.hpp"

namespace absg2 {

/// G2(tau) = constant_term + sign * oscillation_amplitude * cos(2 pi dnu tau),
/// in the proportional units of the unnormalized coincidence expressions.
struct ClosedFormG2 {
    double constant_term = 0.0;
    double oscillation_amplitude = 0.0;
    int sign = -1;

    double at(double delta_nu, double tau) const;
    double visibility() const { return oscillation_amplitude / constant_term; }
};

ClosedFormG2 g2_closed_form(PairKind pair, const PathProbabilities& p);

double g2_analytic(PairKind pair, const PathProbabilities& p, double delta_nu, double tau);

/// Sampled closed-form curve over cfg.tau_grid.
G2Curve g2_analytic_curve(const ExperimentConfig& cfg);

/// Visibility written directly in terms of x and R for each pairing.
/// Independent of g2_closed_form, which goes through the path probabilities.
double visibility_analytic(PairKind pair, double x, double r);

/// (max - min) / (max + min). Requires max >= min >= 0 and max > 0.
VisibilityResult visibility_from_extrema(double g2_max, double g2_min);

}  // namespace absg2

#endif  // ABSG2_ANALYTIC_HPP
