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

#include "absg2/core.hpp"

#include <algorithm>
#include <cmath>

namespace absg2 {

std::string_view to_string(SourceKind kind)
{
    switch (kind) {
    case SourceKind::Laser: return "laser";
    case SourceKind::Thermal: return "thermal";
    case SourceKind::SinglePhoton: return "single-photon";
    }
    return "?";
}

PairKind make_pair_kind(SourceKind first, SourceKind second)
{
    using S = SourceKind;
    auto [lo, hi] = std::minmax(first, second);
    if (lo == S::Laser && hi == S::Laser) return PairKind::LL;
    if (lo == S::Thermal && hi == S::Thermal) return PairKind::TT;
    if (lo == S::SinglePhoton && hi == S::SinglePhoton) return PairKind::SS;
    if (lo == S::Laser && hi == S::Thermal) return PairKind::LT;
    if (lo == S::Laser && hi == S::SinglePhoton) return PairKind::SL;
    return PairKind::ST;
}

std::pair<SourceKind, SourceKind> sources_of(PairKind pair)
{
    using S = SourceKind;
    switch (pair) {
    case PairKind::LT: return {S::Thermal, S::Laser};
    case PairKind::LL: return {S::Laser, S::Laser};
    case PairKind::TT: return {S::Thermal, S::Thermal};
    case PairKind::SS: return {S::SinglePhoton, S::SinglePhoton};
    case PairKind::SL: return {S::SinglePhoton, S::Laser};
    case PairKind::ST: return {S::SinglePhoton, S::Thermal};
    }
    throw DomainError("unknown pair kind");
}

std::string_view to_string(PairKind pair)
{
    switch (pair) {
    case PairKind::LT: return "lt";
    case PairKind::LL: return "ll";
    case PairKind::TT: return "tt";
    case PairKind::SS: return "ss";
    case PairKind::SL: return "sl";
    case PairKind::ST: return "st";
    }
    return "?";
}

PairKind parse_pair_kind(std::string_view text)
{
    for (PairKind p : kAllPairs) {
        if (to_string(p) == text) return p;
    }
    // Accept either ordering of the two letters.
    if (text.size() == 2) {
        std::string swapped{text[1], text[0]};
        for (PairKind p : kAllPairs) {
            if (to_string(p) == swapped) return p;
        }
    }
    throw DomainError("unknown pair kind '" + std::string(text) + "' (expected lt, ll, tt, ss, sl or st)");
}

void require_ratio(double x)
{
    if (!std::isfinite(x)) throw DomainError("x must be finite");
    if (!(x > 0.0)) throw DomainError("x must be > 0");
}

void require_reflectivity(double r)
{
    if (!(r > 0.0 && r < 1.0)) throw DomainError("R out of (0,1)");
}

BeamSplitter::BeamSplitter(double reflectivity) : r_(reflectivity), t_(1.0 - reflectivity)
{
    require_reflectivity(reflectivity);
}

const ExperimentConfig& validate_config(const ExperimentConfig& cfg)
{
    require_ratio(cfg.intensity_ratio);
    require_reflectivity(cfg.bs.reflectivity());
    if (!std::isfinite(cfg.delta_nu) || cfg.delta_nu < 0.0) {
        throw DomainError("delta_nu must be finite and >= 0");
    }
    if (cfg.tau_grid.empty()) throw DomainError("tau grid must be non-empty");
    for (double t : cfg.tau_grid) {
        if (!std::isfinite(t)) throw DomainError("tau grid must be finite");
    }
    for (std::size_t i = 1; i < cfg.tau_grid.size(); ++i) {
        if (!(cfg.tau_grid[i] > cfg.tau_grid[i - 1])) {
            throw DomainError("tau grid must be strictly increasing");
        }
    }
    return cfg;
}

void validate(const PathProbabilities& p)
{
    for (double v : {p.p1a, p.p1b, p.p2a, p.p2b}) {
        if (!(v >= 0.0 && v <= 1.0)) throw DomainError("path probability out of [0,1]");
    }
    if (std::abs(p.p1a + p.p1b - 1.0) > kIdentityTolerance) throw DomainError("p1a + p1b must equal 1");
    if (std::abs(p.p2a + p.p2b - 1.0) > kIdentityTolerance) throw DomainError("p2a + p2b must equal 1");
}

}  // namespace absg2
