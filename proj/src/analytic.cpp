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

#include "absg2/analytic.hpp"

#include <cmath>
#include <numbers>

#include "absg2/probability.hpp"

namespace absg2 {

double ClosedFormG2::at(double delta_nu, double tau) const
{
    return constant_term + sign * oscillation_amplitude * std::cos(2.0 * std::numbers::pi * delta_nu * tau);
}

ClosedFormG2 g2_closed_form(PairKind pair, const PathProbabilities& p)
{
    validate(p);
    const double cross = p.p1a * p.p2b + p.p1b * p.p2a;
    const double both_a = p.p1a * p.p2a;
    const double both_b = p.p1b * p.p2b;

    ClosedFormG2 g;
    g.oscillation_amplitude = 2.0 * std::sqrt(p.p1a * p.p1b * p.p2a * p.p2b);
    // A thermal pair contributes twice its way probability (two coherent
    // orderings); a laser pair contributes it once; a single-photon source
    // contributes nothing.
    switch (pair) {
    case PairKind::LT: g.constant_term = 2.0 * both_a + both_b + cross; break;
    case PairKind::LL: g.constant_term = both_a + both_b + cross; break;
    case PairKind::TT: g.constant_term = 2.0 * both_a + 2.0 * both_b + cross; break;
    case PairKind::SS: g.constant_term = cross; break;
    case PairKind::SL: g.constant_term = both_b + cross; break;
    case PairKind::ST: g.constant_term = 2.0 * both_b + cross; break;
    }
    return g;
}

double g2_analytic(PairKind pair, const PathProbabilities& p, double delta_nu, double tau)
{
    return g2_closed_form(pair, p).at(delta_nu, tau);
}

G2Curve g2_analytic_curve(const ExperimentConfig& cfg)
{
    validate_config(cfg);
    const auto g = g2_closed_form(cfg.pair, path_probabilities(cfg.intensity_ratio, cfg.bs));
    G2Curve curve;
    curve.tau = cfg.tau_grid;
    curve.g2.reserve(cfg.tau_grid.size());
    for (double tau : cfg.tau_grid) curve.g2.push_back(g.at(cfg.delta_nu, tau));
    return curve;
}

double visibility_analytic(PairKind pair, double x, double r)
{
    require_ratio(x);
    require_reflectivity(r);
    const double rt = r * (1.0 - r);
    const double num = 2.0 * x * rt;
    const double d1 = x + r - x * r;
    const double d2 = 1.0 - r + x * r;
    const double balance = 1.0 - 2.0 * r + 2.0 * r * r;

    switch (pair) {
    case PairKind::LT: return num / (d1 * d2 + x * x * rt);
    case PairKind::LL: return num / (d1 * d2);
    case PairKind::TT: return num / (d1 * d2 + x * x * rt + rt);
    case PairKind::SS: return 2.0 * rt / balance;
    case PairKind::SL: return num / (x * balance + rt);
    case PairKind::ST: return num / (x * balance + 2.0 * rt);
    }
    throw DomainError("unknown pair kind");
}

VisibilityResult visibility_from_extrema(double g2_max, double g2_min)
{
    if (!(g2_max > 0.0)) throw DomainError("g2_max must be > 0");
    if (!(g2_min >= 0.0)) throw DomainError("g2_min must be >= 0");
    if (g2_min > g2_max) throw DomainError("g2_min exceeds g2_max");
    return {(g2_max - g2_min) / (g2_max + g2_min), g2_max, g2_min};
}

}  // namespace absg2
