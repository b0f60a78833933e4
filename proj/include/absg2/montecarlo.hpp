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

#ifndef ABSG2_MONTECARLO_HPP
#define ABSG2_MONTECARLO_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "absg2/alternatives.hpp"
#include "absg2/core.hpp"

namespace absg2 {

struct McSettings {
    std::uint64_t n_realizations = 100000;
    std::uint64_t seed = 0;
    // Realizations per work unit. Part of the result's identity: partial
    // sums are formed per chunk and merged in chunk order.
    std::uint64_t parallel_chunk = 4096;
    // Worker threads, 0 for hardware concurrency. Never changes the result.
    unsigned threads = 0;
    PhaseModel phase_model = PhaseModel::Physical;
};

/// Emission frequencies (nu_a, nu_b) = (+dnu/2, -dnu/2) and detection times
/// (t1, t2) = (+tau/2, -tau/2). Only the differences are observable.
struct SourceTiming {
    double nu_a;
    double nu_b;
    double t1;
    double t2;
};

SourceTiming timing_for(double delta_nu, double tau);

/// |sum_k amplitude_k|^2 for one set of photon phases.
double realization_value(const AlternativeSet& alternatives, std::span<const double> phases, double delta_nu,
                         double tau);

/// Uniform phases in [0, 2 pi) for realization `index` of stream `seed`.
void sample_phases(std::uint64_t seed, std::uint64_t index, std::span<double> out);

/// 81 points over [-1/dnu, +1/dnu], two full beat periods.
std::vector<double> default_tau_grid(double delta_nu, std::size_t points = 81);

enum class ExtractionMode : std::uint8_t { SinusoidFit, RawExtrema };

/// Least-squares fit of c - a cos(2 pi dnu tau).
struct SinusoidFit {
    double constant = 0.0;
    double amplitude = 0.0;
};

/// Per-point weights w_c, w_a such that c = sum w_c[i] g[i] and
/// a = sum w_a[i] g[i]. Throws "degenerate curve" when dnu == 0 or the
/// grid spans less than one beat period.
struct FitWeights {
    std::vector<double> constant;
    std::vector<double> amplitude;
};

FitWeights sinusoid_fit_weights(std::span<const double> tau, double delta_nu);

SinusoidFit fit_sinusoid(const G2Curve& curve, double delta_nu);

VisibilityResult visibility_from_curve(const G2Curve& curve, double delta_nu,
                                       ExtractionMode mode = ExtractionMode::SinusoidFit);

/// Visibility of a Monte Carlo run with its standard error. The error is
/// propagated from the per-realization fitted (c, a), which accounts for
/// the correlation between tau points sharing a realization.
struct VisibilityEstimate {
    VisibilityResult result;
    double standard_error = 0.0;
};

/// Lower bound on the agreement tolerance when a pairing's ensemble has no
/// phase noise left (e.g. two single-photon sources), so SE is exactly 0 and
/// only rounding separates the estimate from the closed form.
inline constexpr double kZeroVarianceFloor = 1e-9;

struct McRun {
    G2Curve curve;
    std::optional<VisibilityEstimate> visibility;  // set when the grid admits a fit
};

McRun run_monte_carlo(const ExperimentConfig& cfg, const McSettings& mc);

G2Curve g2_monte_carlo(const ExperimentConfig& cfg, const McSettings& mc);

}  // namespace absg2

#endif  // ABSG2_MONTECARLO_HPP
