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

#include "absg2/alternatives.hpp"

#include <cmath>
#include <numbers>

namespace absg2 {

namespace {

struct SourceSlots {
    std::size_t first;   // phi
    std::size_t second;  // phi'
    std::size_t cross;   // phi''
};

std::size_t physical_slots(SourceKind kind)
{
    return kind == SourceKind::Thermal ? 3 : 1;
}

SourceSlots slots_for(SourceKind kind, std::size_t base)
{
    if (kind == SourceKind::Thermal) return {base, base + 1, base + 2};
    return {base, base, base};
}

}  // namespace

double AlternativeSet::total_weight() const
{
    double sum = 0.0;
    for (const auto& t : terms) sum += t.weight * t.weight;
    return sum;
}

std::complex<double> temporal_propagator(double nu, double t)
{
    return std::polar(1.0, 2.0 * std::numbers::pi * nu * t);
}

std::size_t slot_count(PairKind pair, PhaseModel model)
{
    auto [a, b] = sources_of(pair);
    if (model == PhaseModel::IndependentSlots) {
        std::size_t n_terms = 2;  // cross terms
        if (a != SourceKind::SinglePhoton) n_terms += a == SourceKind::Thermal ? 2 : 1;
        if (b != SourceKind::SinglePhoton) n_terms += b == SourceKind::Thermal ? 2 : 1;
        return 2 * n_terms;
    }
    return physical_slots(a) + physical_slots(b);
}

AlternativeSet enumerate_alternatives(PairKind pair, const PathProbabilities& p, PhaseModel model)
{
    validate(p);
    auto [kind_a, kind_b] = sources_of(pair);
    const SourceSlots sa = slots_for(kind_a, 0);
    const SourceSlots sb = slots_for(kind_b, physical_slots(kind_a));
    const double half = 1.0 / std::numbers::sqrt2;

    AlternativeSet set;
    set.pair = pair;
    set.model = model;
    auto& terms = set.terms;

    // Both photons from a. Thermal light has two orderings; the second sends
    // the phi photon to D2 and the phi' photon to D1.
    if (kind_a == SourceKind::Thermal) {
        const double w = std::sqrt(p.p1a * p.p2a) * half;
        terms.push_back({w, SourceId::A, SourceId::A, 1, {sa.first, sa.second}});
        terms.push_back({w, SourceId::A, SourceId::A, 1, {sa.second, sa.first}});
    } else if (kind_a == SourceKind::Laser) {
        terms.push_back({std::sqrt(p.p1a * p.p2a), SourceId::A, SourceId::A, 1, {sa.first, sa.second}});
    }

    // Both photons from b.
    if (kind_b == SourceKind::Thermal) {
        const double w = std::sqrt(p.p1b * p.p2b) * half;
        terms.push_back({w, SourceId::B, SourceId::B, 1, {sb.first, sb.second}});
        terms.push_back({w, SourceId::B, SourceId::B, 1, {sb.second, sb.first}});
    } else if (kind_b == SourceKind::Laser) {
        terms.push_back({std::sqrt(p.p1b * p.p2b), SourceId::B, SourceId::B, 1, {sb.first, sb.second}});
    }

    // One photon from each source. Both reflections happen on the second
    // path, which puts the two cross amplitudes pi out of phase.
    terms.push_back({std::sqrt(p.p1a * p.p2b), SourceId::A, SourceId::B, 0, {sa.cross, sb.cross}});
    terms.push_back({std::sqrt(p.p1b * p.p2a), SourceId::B, SourceId::A, 2, {sb.cross, sa.cross}});

    if (model == PhaseModel::IndependentSlots) {
        std::size_t next = 0;
        for (auto& t : terms) t.phase_slots = {next++, next++};
        set.slot_count = next;
    } else {
        set.slot_count = physical_slots(kind_a) + physical_slots(kind_b);
    }
    return set;
}

}  // namespace absg2
