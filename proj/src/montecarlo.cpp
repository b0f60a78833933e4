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

#include "absg2/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "absg2/analytic.hpp"
#include "absg2/philox.hpp"
#include "absg2/probability.hpp"

namespace absg2 {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Welford accumulator for a mean and second central moment.
struct Moments {
    double n = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double v)
    {
        n += 1.0;
        const double d = v - mean;
        mean += d / n;
        m2 += d * (v - mean);
    }

    void merge(const Moments& o)
    {
        if (o.n == 0.0) return;
        const double total = n + o.n;
        const double d = o.mean - mean;
        mean += d * o.n / total;
        m2 += o.m2 + d * d * n * o.n / total;
        n = total;
    }

    double variance() const { return n > 1.0 ? m2 / (n - 1.0) : 0.0; }
};

/// Joint moments of the per-realization fitted (c, a).
struct PairMoments {
    double n = 0.0;
    double mean_c = 0.0;
    double mean_a = 0.0;
    double m2_c = 0.0;
    double m2_a = 0.0;
    double c_ca = 0.0;

    void add(double c, double a)
    {
        n += 1.0;
        const double dc = c - mean_c;
        const double da = a - mean_a;
        mean_c += dc / n;
        mean_a += da / n;
        m2_c += dc * (c - mean_c);
        m2_a += da * (a - mean_a);
        c_ca += dc * (a - mean_a);
    }

    void merge(const PairMoments& o)
    {
        if (o.n == 0.0) return;
        const double total = n + o.n;
        const double dc = o.mean_c - mean_c;
        const double da = o.mean_a - mean_a;
        const double f = n * o.n / total;
        mean_c += dc * o.n / total;
        mean_a += da * o.n / total;
        m2_c += o.m2_c + dc * dc * f;
        m2_a += o.m2_a + da * da * f;
        c_ca += o.c_ca + dc * da * f;
        n = total;
    }
};

struct ChunkResult {
    std::vector<Moments> points;
    PairMoments fit;
};

std::complex<double> phase_factor(const Alternative& alt, std::span<const double> phases)
{
    const double angle = phases[alt.phase_slots[0]] + phases[alt.phase_slots[1]] +
                         alt.bs_phase_count * BeamSplitter::reflection_phase();
    return std::polar(alt.weight, angle);
}

std::complex<double> temporal_factor(const Alternative& alt, const SourceTiming& timing)
{
    const double nu1 = alt.detector1_source == SourceId::A ? timing.nu_a : timing.nu_b;
    const double nu2 = alt.detector2_source == SourceId::A ? timing.nu_a : timing.nu_b;
    return temporal_propagator(nu1, timing.t1) * temporal_propagator(nu2, timing.t2);
}

void require_fit_span(std::span<const double> tau, double delta_nu)
{
    if (!(delta_nu > 0.0)) throw DomainError("degenerate curve: delta_nu must be > 0");
    if (tau.size() < 3) throw DomainError("degenerate curve: need at least 3 points");
    const double span = tau.back() - tau.front();
    const double period = 1.0 / delta_nu;
    if (span < period * (1.0 - 1e-9)) throw DomainError("degenerate curve: grid spans less than one beat period");
}

}  // namespace

SourceTiming timing_for(double delta_nu, double tau)
{
    return {0.5 * delta_nu, -0.5 * delta_nu, 0.5 * tau, -0.5 * tau};
}

double realization_value(const AlternativeSet& alternatives, std::span<const double> phases, double delta_nu,
                         double tau)
{
    if (phases.size() != alternatives.slot_count) {
        throw DomainError("phase vector length " + std::to_string(phases.size()) + " does not match slot count " +
                          std::to_string(alternatives.slot_count));
    }
    const SourceTiming timing = timing_for(delta_nu, tau);
    std::complex<double> sum{};
    for (const auto& alt : alternatives.terms) {
        sum += phase_factor(alt, phases) * temporal_factor(alt, timing);
    }
    return std::norm(sum);
}

void sample_phases(std::uint64_t seed, std::uint64_t index, std::span<double> out)
{
    CounterStream stream(seed, index);
    for (double& phi : out) phi = kTwoPi * stream.next_uniform();
}

std::vector<double> default_tau_grid(double delta_nu, std::size_t points)
{
    if (!(delta_nu > 0.0)) throw DomainError("default tau grid needs delta_nu > 0");
    if (points < 2) throw DomainError("default tau grid needs at least 2 points");
    const double half = 1.0 / delta_nu;
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = -half + 2.0 * half * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    return grid;
}

FitWeights sinusoid_fit_weights(std::span<const double> tau, double delta_nu)
{
    require_fit_span(tau, delta_nu);
    const std::size_t n = tau.size();
    std::vector<double> u(n);
    double mean_u = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = std::cos(kTwoPi * delta_nu * tau[i]);
        mean_u += u[i];
    }
    mean_u /= static_cast<double>(n);
    double suu = 0.0;
    for (double v : u) suu += (v - mean_u) * (v - mean_u);
    if (!(suu > 1e-12 * static_cast<double>(n))) throw DomainError("degenerate curve: no cosine variation on grid");

    // Regress g = c + b u, then a = -b.
    FitWeights w;
    w.constant.resize(n);
    w.amplitude.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double wb = (u[i] - mean_u) / suu;
        w.amplitude[i] = -wb;
        w.constant[i] = 1.0 / static_cast<double>(n) - mean_u * wb;
    }
    return w;
}

SinusoidFit fit_sinusoid(const G2Curve& curve, double delta_nu)
{
    if (curve.tau.size() != curve.g2.size()) throw DomainError("curve tau and g2 lengths differ");
    const FitWeights w = sinusoid_fit_weights(curve.tau, delta_nu);
    SinusoidFit fit;
    for (std::size_t i = 0; i < curve.g2.size(); ++i) {
        fit.constant += w.constant[i] * curve.g2[i];
        fit.amplitude += w.amplitude[i] * curve.g2[i];
    }
    return fit;
}

VisibilityResult visibility_from_curve(const G2Curve& curve, double delta_nu, ExtractionMode mode)
{
    if (mode == ExtractionMode::RawExtrema) {
        require_fit_span(curve.tau, delta_nu);
        const auto [lo, hi] = std::minmax_element(curve.g2.begin(), curve.g2.end());
        return visibility_from_extrema(*hi, std::max(*lo, 0.0));
    }

    const FitWeights w = sinusoid_fit_weights(curve.tau, delta_nu);
    if (curve.tau.size() != curve.g2.size()) throw DomainError("curve tau and g2 lengths differ");
    double c = 0.0;
    double a = 0.0;
    for (std::size_t i = 0; i < curve.g2.size(); ++i) {
        c += w.constant[i] * curve.g2[i];
        a += w.amplitude[i] * curve.g2[i];
    }
    if (!(c > 0.0)) throw DomainError("degenerate curve: fitted constant term is not positive");

    double noise = 1e-12 * c;
    if (curve.standard_error) {
        const auto& se = *curve.standard_error;
        double var_a = 0.0;
        for (std::size_t i = 0; i < se.size() && i < w.amplitude.size(); ++i) {
            var_a += w.amplitude[i] * w.amplitude[i] * se[i] * se[i];
        }
        noise += 3.0 * std::sqrt(var_a);
    }
    if (a < -noise) throw DomainError("fitted oscillation amplitude is negative beyond noise");
    if (a < 0.0) a = 0.0;  // within noise of a flat curve
    return {a / c, c + a, c - a};
}

McRun run_monte_carlo(const ExperimentConfig& cfg, const McSettings& mc)
{
    validate_config(cfg);
    if (mc.n_realizations < 1) throw DomainError("n_realizations must be >= 1");
    if (mc.parallel_chunk < 1) throw DomainError("parallel_chunk must be >= 1");

    const PathProbabilities p = path_probabilities(cfg.intensity_ratio, cfg.bs);
    const AlternativeSet alts = enumerate_alternatives(cfg.pair, p, mc.phase_model);
    const std::size_t n_tau = cfg.tau_grid.size();
    const std::size_t n_terms = alts.terms.size();

    // Time dependence of each term at each tau, shared by all realizations.
    std::vector<std::complex<double>> temporal(n_tau * n_terms);
    for (std::size_t i = 0; i < n_tau; ++i) {
        const SourceTiming timing = timing_for(cfg.delta_nu, cfg.tau_grid[i]);
        for (std::size_t k = 0; k < n_terms; ++k) temporal[i * n_terms + k] = temporal_factor(alts.terms[k], timing);
    }

    std::optional<FitWeights> weights;
    try {
        weights = sinusoid_fit_weights(cfg.tau_grid, cfg.delta_nu);
    } catch (const DomainError&) {
        weights.reset();
    }

    const std::uint64_t n_chunks = (mc.n_realizations + mc.parallel_chunk - 1) / mc.parallel_chunk;
    std::vector<ChunkResult> chunks(n_chunks);

    auto run_chunk = [&](std::uint64_t chunk) {
        ChunkResult& out = chunks[chunk];
        out.points.assign(n_tau, Moments{});
        std::vector<double> phases(alts.slot_count);
        std::vector<std::complex<double>> coeff(n_terms);
        std::vector<double> values(n_tau);
        const std::uint64_t begin = chunk * mc.parallel_chunk;
        const std::uint64_t end = std::min(begin + mc.parallel_chunk, mc.n_realizations);
        for (std::uint64_t r = begin; r < end; ++r) {
            sample_phases(mc.seed, r, phases);
            for (std::size_t k = 0; k < n_terms; ++k) coeff[k] = phase_factor(alts.terms[k], phases);
            for (std::size_t i = 0; i < n_tau; ++i) {
                const std::complex<double>* row = &temporal[i * n_terms];
                std::complex<double> sum{};
                for (std::size_t k = 0; k < n_terms; ++k) sum += coeff[k] * row[k];
                values[i] = std::norm(sum);
                out.points[i].add(values[i]);
            }
            if (weights) {
                double c = 0.0;
                double a = 0.0;
                for (std::size_t i = 0; i < n_tau; ++i) {
                    c += weights->constant[i] * values[i];
                    a += weights->amplitude[i] * values[i];
                }
                out.fit.add(c, a);
            }
        }
    };

    unsigned n_threads = mc.threads != 0 ? mc.threads : std::max(1u, std::thread::hardware_concurrency());
    n_threads = static_cast<unsigned>(std::min<std::uint64_t>(n_threads, n_chunks));
    if (n_threads <= 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c) run_chunk(c);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back([&] {
                for (std::uint64_t c = next++; c < n_chunks; c = next++) run_chunk(c);
            });
        }
    }

    // Fixed-order reduction.
    std::vector<Moments> points(n_tau);
    PairMoments fit;
    for (const auto& chunk : chunks) {
        for (std::size_t i = 0; i < n_tau; ++i) points[i].merge(chunk.points[i]);
        fit.merge(chunk.fit);
    }

    McRun run;
    run.curve.tau = cfg.tau_grid;
    run.curve.n_realizations = mc.n_realizations;
    run.curve.seed = mc.seed;
    run.curve.g2.resize(n_tau);
    std::vector<double> se(n_tau);
    const double n = static_cast<double>(mc.n_realizations);
    for (std::size_t i = 0; i < n_tau; ++i) {
        run.curve.g2[i] = points[i].mean;
        se[i] = std::sqrt(points[i].variance() / n);
    }
    run.curve.standard_error = std::move(se);

    if (weights && fit.mean_c > 0.0) {
        const double c = fit.mean_c;
        const double a = fit.mean_a;
        const double v = a / c;
        const double denom = n > 1.0 ? n - 1.0 : 1.0;
        const double var_c = fit.m2_c / denom / n;
        const double var_a = fit.m2_a / denom / n;
        const double cov = fit.c_ca / denom / n;
        const double var_v = std::max(0.0, (var_a - 2.0 * v * cov + v * v * var_c) / (c * c));
        run.visibility = VisibilityEstimate{{v, c + a, c - a}, std::sqrt(var_v)};
    }
    return run;
}

G2Curve g2_monte_carlo(const ExperimentConfig& cfg, const McSettings& mc)
{
    return run_monte_carlo(cfg, mc).curve;
}

}  // namespace absg2
