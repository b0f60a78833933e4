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

#ifndef ABSG2_PHILOX_HPP
#define ABSG2_PHILOX_HPP

#include <array>
#include <cstddef>
#include <cstdint>

namespace absg2 {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11). The output
/// is a pure function of (counter, key), so any realization's random stream
/// can be produced independently of every other one.
class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr Counter generate(Counter ctr, Key key) noexcept
    {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
            const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const auto lo0 = static_cast<std::uint32_t>(p0);
            const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const auto lo1 = static_cast<std::uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        }
        return ctr;
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
};

/// Uniform doubles in [0, 1) for one (seed, stream) pair. Each block of the
/// counter yields two 53-bit values.
class CounterStream {
public:
    CounterStream(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_lo_(static_cast<std::uint32_t>(stream)),
          stream_hi_(static_cast<std::uint32_t>(stream >> 32))
    {
    }

    double next_uniform() noexcept
    {
        if (cached_ == 0) {
            block_ = Philox4x32::generate({block_index_++, 0u, stream_lo_, stream_hi_}, key_);
            cached_ = 2;
        }
        const std::size_t base = cached_ == 2 ? 0 : 2;
        --cached_;
        const std::uint64_t bits = (std::uint64_t{block_[base]} << 32) | block_[base + 1];
        return static_cast<double>(bits >> 11) * 0x1.0p-53;
    }

private:
    Philox4x32::Key key_;
    std::uint32_t stream_lo_;
    std::uint32_t stream_hi_;
    std::uint32_t block_index_ = 0;
    Philox4x32::Counter block_{};
    int cached_ = 0;
};

}  // namespace absg2

#endif  // ABSG2_PHILOX_HPP
