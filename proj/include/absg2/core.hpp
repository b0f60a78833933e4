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

#ifndef ABSG2_CORE_HPP
#define ABSG2_CORE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace absg2 {

/// Thrown whenever an input violates a domain invariant. The message names
/// the invariant, e.g. "x must be > 0".
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr double kIdentityTolerance = 1e-12;

enum class SourceKind : std::uint8_t { Laser, Thermal, SinglePhoton };

std::string_view to_string(SourceKind kind);

/// Unordered pair of source kinds. The enumerators name the canonical
/// ordering used throughout: the first letter is source a, the second is
/// source b (lt: a thermal, b laser; sl: a single-photon, b laser;
/// st: a single-photon, b thermal).
enum class PairKind : std::uint8_t { LT, LL, TT, SS, SL, ST };

inline constexpr PairKind kAllPairs[] = {PairKind::LT, PairKind::LL, PairKind::TT,
                                         PairKind::SS, PairKind::SL, PairKind::ST};

PairKind make_pair_kind(SourceKind first, SourceKind second);

/// Source kinds of (source a, source b) under the canonical convention.
std::pair<SourceKind, SourceKind> sources_of(PairKind pair);

std::string_view to_string(PairKind pair);  // "lt", "ll", ...
PairKind parse_pair_kind(std::string_view text);

/// Lossless splitter. Reflection adds a fixed pi/2 phase.
class BeamSplitter {
public:
    explicit BeamSplitter(double reflectivity);

    double reflectivity() const noexcept { return r_; }
    double transmissivity() const noexcept { return t_; }
    static constexpr double reflection_phase() noexcept { return 1.57079632679489661923; }

    friend bool operator==(const BeamSplitter&, const BeamSplitter&) = default;

private:
    double r_;
    double t_;
};

struct ExperimentConfig {
    PairKind pair = PairKind::LL;
    double intensity_ratio = 1.0;  // x = I_a / I_b
    BeamSplitter bs{0.5};
    double delta_nu = 0.0;         // Hz, |nu_a - nu_b|
    std::vector<double> tau_grid;  // s, t1 - t2
};

/// Returns cfg unchanged if every invariant holds, throws DomainError otherwise.
const ExperimentConfig& validate_config(const ExperimentConfig& cfg);

void require_ratio(double x);
void require_reflectivity(double r);

struct PathProbabilities {
    double p1a = 0.5;
    double p1b = 0.5;
    double p2a = 0.5;
    double p2b = 0.5;
};

void validate(const PathProbabilities& p);

struct G2Curve {
    std::vector<double> tau;
    std::vector<double> g2;
    std::uint64_t n_realizations = 0;        // 0 for analytic curves
    std::optional<std::uint64_t> seed;       // absent for analytic curves
    std::optional<std::vector<double>> standard_error;  // per point, Monte Carlo only

    bool is_analytic() const noexcept { return n_realizations == 0; }
};

struct VisibilityResult {
    double v = 0.0;
    double g2_max = 0.0;
    double g2_min = 0.0;
};

}  // namespace absg2

#endif  // ABSG2_CORE_HPP
