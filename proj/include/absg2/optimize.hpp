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

#ifndef ABSG2_OPTIMIZE_HPP
#define ABSG2_OPTIMIZE_HPP

#include <functional>
#include <optional>
#include <utility>

#include "absg2/core.hpp"

namespace absg2 {

struct Range {
    double lo;
    double hi;
};

inline constexpr Range kDefaultRatioRange{1e-3, 1e3};
inline constexpr Range kDefaultReflectivityRange{0.0, 1.0};

struct SearchOptions {
    std::size_t grid_x = 200;  // log-spaced
    std::size_t grid_r = 200;  // linear, cell centres
    double tolerance = 1e-9;   // per coordinate (R, and log10 x)
    int max_passes = 100;
};

struct VisibilityMaximum {
    double v_max = 0.0;
    double r_star = 0.5;
    double x_star = 1.0;
    bool x_flat = false;    // V does not depend on x (single-photon pair)
    bool x_at_cap = false;  // maximizer sits on the upper end of the x range
    Range x_range = kDefaultRatioRange;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi].
/// Returns the abscissa.
double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, double tolerance);

/// Coarse (log x, R) grid scan followed by alternating golden-section
/// refinement in R and in log x.
VisibilityMaximum maximize_visibility(PairKind pair, Range x_range = kDefaultRatioRange,
                                      Range r_range = kDefaultReflectivityRange, const SearchOptions& opts = {});

/// Open interval of R on which 6R - 6R^2 - 1 > 0: ((3 - sqrt 3)/6, (3 + sqrt 3)/6).
std::pair<double, double> feasible_reflectivity_interval();

/// Smallest ratio x above which a single-photon + laser (sl) or
/// single-photon + thermal (st) pair beats V = 0.5 at reflectivity R.
/// Empty when no ratio can.
std::optional<double> threshold_min_ratio(PairKind pair, double r);

}  // namespace absg2

#endif  // ABSG2_OPTIMIZE_HPP
