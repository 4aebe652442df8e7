// Copyright 2026 The qbp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QBP_RNG_H
#define QBP_RNG_H

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qbp {

using Rng = std::mt19937_64;

constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based stream key: a seed that depends only on the master seed and
/// the given coordinates, never on execution order.
inline uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> coords) {
    uint64_t h = splitmix64(master);
    for (uint64_t c : coords) {
        h = splitmix64(h ^ splitmix64(c + 0x632be59bd9b4e019ULL));
    }
    return h;
}

// The two helpers below are written out instead of using the <random>
// distributions so that streams are identical across standard libraries.

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform integer in [0, bound), bound > 0, by rejection.
inline uint64_t uniform_index(Rng& rng, uint64_t bound) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

}  // namespace qbp

#endif  // QBP_RNG_H
