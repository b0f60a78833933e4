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

#ifndef ABSG2_PROBABILITY_HPP
#define ABSG2_PROBABILITY_HPP

#include "absg2/core.hpp"

namespace absg2 {

/// Conditional source-of-photon probabilities for the photon registered at
/// each detector. Only the ratio x = I_a / I_b enters.
PathProbabilities path_probabilities(double x, const BeamSplitter& bs);

/// Probabilities of the three ways to get a coincidence: both photons from
/// a, both from b, or one from each.
struct WayProbabilities {
    double both_a = 0.0;
    double both_b = 0.0;
    double cross = 0.0;
};

WayProbabilities way_probabilities(const PathProbabilities& p);

}  // namespace absg2

#endif  // ABSG2_PROBABILITY_HPP
