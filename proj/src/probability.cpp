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

#include "absg2/probability.hpp"

namespace absg2 {

PathProbabilities path_probabilities(double x, const BeamSplitter& bs)
{
    require_ratio(x);
    const double r = bs.reflectivity();
    const double t = bs.transmissivity();

    PathProbabilities p;
    p.p1a = x * t / (x * t + r);
    p.p1b = r / (x * t + r);
    p.p2a = x * r / (x * r + t);
    p.p2b = t / (x * r + t);
    return p;
}

WayProbabilities way_probabilities(const PathProbabilities& p)
{
    return {p.p1a * p.p2a, p.p1b * p.p2b, p.p1a * p.p2b + p.p1b * p.p2a};
}

}  // namespace absg2
