// SPDX-License-Identifier: Apache-2.0
//
// aoa-toolkit — gridless angle-of-arrival estimation for MIMO radar
// Copyright (C) 2026 aoa-toolkit contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Self-contained RNG (xoshiro256++ seeded via splitmix64). The standard
// library distributions are implementation-defined, so every sampled value
// in this project goes through this header to keep shards, scenes and
// initial weights reproducible byte-for-byte across builds.

#ifndef AOA_RNG_HPP
#define AOA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <utility>

#include "aoa/common.hpp"

namespace aoa
{
    inline std::uint64_t splitmix64(std::uint64_t &state)
    {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Order-sensitive mix of seed components (base seed, domain tag, index, ...).
    inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts)
    {
        std::uint64_t h = 0x243F6A8885A308D3ULL; // pi fraction, arbitrary non-zero
        for (std::uint64_t p : parts)
        {
            h ^= p + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
            std::uint64_t s = h;
            h = splitmix64(s);
        }
        return h;
    }

    // Seed-domain tags. Training and evaluation derive their scene streams
    // through different tags, so the two namespaces cannot collide even when
    // the user passes the same numeric seed to both.
    namespace seed_domain
    {
        inline constexpr std::uint64_t kTrain = 0x747261696E000001ULL;
        inline constexpr std::uint64_t kEval = 0x6576616C00000002ULL;
        inline constexpr std::uint64_t kTargets = 0x7461726774000003ULL;
        inline constexpr std::uint64_t kNoise = 0x6E6F697365000004ULL;
        inline constexpr std::uint64_t kInit = 0x696E697400000005ULL;
        inline constexpr std::uint64_t kScene = 0x7363656E65000006ULL;
    }

    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed)
        {
            std::uint64_t sm = seed;
            for (auto &word : state_)
                word = splitmix64(sm);
        }

        std::uint64_t next_u64()
        {
            const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
            const std::uint64_t t = state_[1] << 17;
            state_[2] ^= state_[0];
            state_[3] ^= state_[1];
            state_[1] ^= state_[2];
            state_[0] ^= state_[3];
            state_[2] ^= t;
            state_[3] = rotl(state_[3], 45);
            return result;
        }

        // Uniform in [0, 1) with 53 random bits.
        double uniform01()
        {
            return double(next_u64() >> 11) * 0x1.0p-53;
        }

        double uniform(double lo, double hi)
        {
            return lo + (hi - lo) * uniform01();
        }

        // Uniform integer in [0, n), n >= 1.
        std::uint64_t uniform_int(std::uint64_t n)
        {
            // Lemire's unbiased multiply-shift rejection.
            std::uint64_t x = next_u64();
            __uint128_t m = __uint128_t(x) * __uint128_t(n);
            std::uint64_t l = std::uint64_t(m);
            if (l < n)
            {
                std::uint64_t t = (0 - n) % n;
                while (l < t)
                {
                    x = next_u64();
                    m = __uint128_t(x) * __uint128_t(n);
                    l = std::uint64_t(m);
                }
            }
            return std::uint64_t(m >> 64);
        }

        // Two independent standard normals (Box-Muller).
        std::pair<double, double> normal_pair()
        {
            double u1 = uniform01();
            double u2 = uniform01();
            // Avoid log(0); replaces u1 = 0 by the smallest representable step.
            if (u1 <= 0.0)
                u1 = 0x1.0p-53;
            const double r = std::sqrt(-2.0 * std::log(u1));
            const double a = 2.0 * kPi * u2;
            return {r * std::cos(a), r * std::sin(a)};
        }

        double normal() { return normal_pair().first; }

    private:
        static std::uint64_t rotl(std::uint64_t x, int k)
        {
            return (x << k) | (x >> (64 - k));
        }

        std::uint64_t state_[4];
    };
}

#endif
