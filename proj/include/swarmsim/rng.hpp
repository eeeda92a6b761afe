// SPDX-License-Identifier: Apache-2.0
//
// swarmsim - distributed-aperture simulator for satellite swarms
// Copyright (C) 2026 The swarmsim authors
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

#ifndef SWARMSIM_RNG_HPP
#define SWARMSIM_RNG_HPP

#include <cstdint>
#include <random>
#include <utility>

namespace swarmsim
{
    // Deterministic random streams.
    //
    // Each stream is a std::mt19937_64 engine, whose output sequence is fixed by the C++ standard,
    // seeded with splitmix64(seed + stream * 0x9E3779B97F4A7C15). Distinct stream ids give
    // statistically independent engines for the same user seed.
    //
    // Uniform variates use the top 53 bits of one engine draw. Normal pairs use the Box-Muller
    // transform with exactly two uniform draws per pair, in the order (u1, u2).

    std::uint64_t splitmix64(std::uint64_t x);

    enum class Stream : std::uint64_t
    {
        placement = 0,
        weights = 1,
        steering = 2
    };

    class SeededStream
    {
    public:
        SeededStream(std::uint64_t seed, Stream stream);

        // [0, 1)
        double uniform();

        // (0, 1], safe for log()
        double uniform_open_zero() { return 1.0 - uniform(); }

        // Two independent standard normals from one Box-Muller step
        std::pair<double, double> normal_pair();

        std::uint64_t next() { return engine_(); }

    private:
        std::mt19937_64 engine_;
    };
}

#endif
