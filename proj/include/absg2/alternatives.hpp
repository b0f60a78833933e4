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

#ifndef ABSG2_ALTERNATIVES_HPP
#define ABSG2_ALTERNATIVES_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "absg2/core.hpp"

namespace absg2 {

enum class SourceId : std::uint8_t { A, B };

/// One indistinguishable two-photon path. The amplitude of the path in a
/// given realization is
///   weight * exp(i (phi[slot_1] + phi[slot_2] + bs_phase_count * pi/2))
///          * K(source_1 -> D1, t1) * K(source_2 -> D2, t2).
struct Alternative {
    double weight = 0.0;
    SourceId detector1_source = SourceId::A;
    SourceId detector2_source = SourceId::B;
    int bs_phase_count = 0;
    std::array<std::size_t, 2> phase_slots{};  // {photon at D1, photon at D2}
};

/// How photon phases are assigned to slots of a realization's phase vector.
///
/// Physical: a thermal source gets three independent slots (the two photons
/// of a same-source pair, and the photon taking part in a cross term); a
/// laser source gets one slot shared by every photon it emits; a
/// single-photon source gets one slot.
///
/// IndependentSlots: every photon factor of every term draws its own slot.
/// This destroys all phase locking and exists as a negative control.
enum class PhaseModel : std::uint8_t { Physical, IndependentSlots };

struct AlternativeSet {
    PairKind pair = PairKind::LL;
    PhaseModel model = PhaseModel::Physical;
    std::vector<Alternative> terms;
    std::size_t slot_count = 0;

    /// Sum of squared weights.
    double total_weight() const;
};

/// exp(i 2 pi nu t). The spatial part of the point-source propagator is the
/// same for every path under equal optical distances and is dropped.
std::complex<double> temporal_propagator(double nu, double t);

/// Number of phase slots a realization needs for this pair.
std::size_t slot_count(PairKind pair, PhaseModel model = PhaseModel::Physical);

/// Term list in the order: both-from-a terms, both-from-b terms, then the
/// two cross terms (a->D1 b->D2, b->D1 a->D2). Same-source terms are
/// omitted for single-photon sources; thermal sources contribute two
/// orderings weighted 1/sqrt(2) each.
AlternativeSet enumerate_alternatives(PairKind pair, const PathProbabilities& p,
                                      PhaseModel model = PhaseModel::Physical);

}  // namespace absg2

#endif  // ABSG2_ALTERNATIVES_HPP
