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

#include "absg2/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "absg2/analytic.hpp"

namespace absg2 {

namespace {

constexpr double kInvPhi = 0.61803398874989484820;  // 1/golden ratio
constexpr double kRidge = 0.5;

}  // namespace

double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, double tolerance)
{
    double a = lo;
    double b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tolerance) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    // Prefer an endpoint if the maximum sits on the boundary.
    double best = 0.5 * (a + b);
    double f_best = f(best);
    for (double edge : {lo, hi}) {
        if (std::abs(edge - best) <= tolerance) {
            const double fe = f(edge);
            if (fe > f_best) {
                best = edge;
                f_best = fe;
            }
        }
    }
    return best;
}

VisibilityMaximum maximize_visibility(PairKind pair, Range x_range, Range r_range, const SearchOptions& opts)
{
    require_ratio(x_range.lo);
    require_ratio(x_range.hi);
    if (!(x_range.hi > x_range.lo)) throw DomainError("empty x range");
    if (!(r_range.lo >= 0.0 && r_range.hi <= 1.0 && r_range.hi > r_range.lo)) throw DomainError("R range must lie in [0,1]");
    if (opts.grid_x < 2 || opts.grid_r < 1) throw DomainError("search grid too small");

    const double lx_lo = std::log10(x_range.lo);
    const double lx_hi = std::log10(x_range.hi);
    const double lx_step = (lx_hi - lx_lo) / static_cast<double>(opts.grid_x - 1);
    const double r_step = (r_range.hi - r_range.lo) / static_cast<double>(opts.grid_r);

    // Open-interval bounds for R so the refinement never touches R = 0 or 1.
    const double r_min = std::max(r_range.lo, 1e-12);
    const double r_max = std::min(r_range.hi, 1.0 - 1e-12);

    auto vis = [pair](double lx, double r) { return visibility_analytic(pair, std::pow(10.0, lx), r); };

    double best_lx = lx_lo;
    double best_r = r_range.lo + 0.5 * r_step;
    double best_v = -1.0;
    for (std::size_t i = 0; i < opts.grid_x; ++i) {
        const double lx = lx_lo + lx_step * static_cast<double>(i);
        for (std::size_t j = 0; j < opts.grid_r; ++j) {
            const double r = r_range.lo + r_step * (static_cast<double>(j) + 0.5);
            const double v = vis(lx, r);
            if (v > best_v) {
                best_v = v;
                best_lx = lx;
                best_r = r;
            }
        }
    }

    const double lx_a = std::max(lx_lo, best_lx - lx_step);
    const double lx_b = std::min(lx_hi, best_lx + lx_step);
    const double r_a = std::max(r_min, best_r - r_step);
    const double r_b = std::min(r_max, best_r + r_step);

    for (int pass = 0; pass < opts.max_passes; ++pass) {
        const double r_new =
            golden_section_maximize([&](double r) { return vis(best_lx, r); }, r_a, r_b, opts.tolerance);
        const double lx_new =
            golden_section_maximize([&](double lx) { return vis(lx, r_new); }, lx_a, lx_b, opts.tolerance);
        const bool done = std::abs(r_new - best_r) < opts.tolerance && std::abs(lx_new - best_lx) < opts.tolerance;
        best_r = r_new;
        best_lx = lx_new;
        if (done) break;
    }
    best_v = vis(best_lx, best_r);

    // Every pairing is mirror symmetric in R; report the symmetry point
    // exactly when it is at least as good.
    if (r_min <= kRidge && kRidge <= r_max && vis(best_lx, kRidge) >= best_v - 1e-12) {
        best_r = kRidge;
        best_lx = golden_section_maximize([&](double lx) { return vis(lx, kRidge); }, lx_a, lx_b, opts.tolerance);
        best_v = vis(best_lx, kRidge);
    }

    VisibilityMaximum out;
    out.v_max = best_v;
    out.r_star = best_r;
    out.x_star = std::pow(10.0, best_lx);
    out.x_range = x_range;
    const double v_lo = vis(lx_lo, best_r);
    const double v_hi = vis(lx_hi, best_r);
    out.x_flat = std::abs(v_lo - best_v) <= 1e-12 && std::abs(v_hi - best_v) <= 1e-12;
    out.x_at_cap = !out.x_flat && lx_hi - best_lx <= 10.0 * opts.tolerance;
    return out;
}

std::pair<double, double> feasible_reflectivity_interval()
{
    const double s3 = std::sqrt(3.0);
    return {(3.0 - s3) / 6.0, (3.0 + s3) / 6.0};
}

std::optional<double> threshold_min_ratio(PairKind pair, double r)
{
    require_reflectivity(r);
    if (pair != PairKind::SL && pair != PairKind::ST) {
        throw DomainError("threshold ratio is defined only for sl and st pairs");
    }
    const double rt = r - r * r;
    const double denom = 6.0 * rt - 1.0;
    if (!(denom > 0.0)) return std::nullopt;
    return (pair == PairKind::SL ? rt : 2.0 * rt) / denom;
}

}  // namespace absg2
