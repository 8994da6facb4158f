// SPDX-License-Identifier: Apache-2.0
//
// rismp - RIS-aided multi-pair link analysis and phase-shift optimization
// Copyright (C) 2026 The rismp authors
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

#ifndef RISMP_RANDOM_HPP
#define RISMP_RANDOM_HPP

#include <cstdint>
#include <random>

namespace rismp
{

// SplitMix64 finalizer applied to (seed, tag). Used to derive independent
// substream seeds (per pair, per trial, per sweep point) from one master seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

// FNV-1a of a string, for deriving substreams from names ("ga", "mc", ...)
std::uint64_t hash_tag(const char *name);

// Seedable, splittable random stream. Children created by split() depend only
// on the parent's seed and the stream id, never on how much of the parent has
// been consumed.
class Rng
{
public:
    explicit Rng(std::uint64_t seed = 0);

    std::uint64_t seed() const { return seed_; }
    Rng split(std::uint64_t stream) const { return Rng(derive_seed(seed_, stream)); }

    double uniform();                       // [0, 1)
    double uniform_angle();                 // [0, 2pi)
    double normal(double stddev);           // N(0, stddev^2)
    std::uint64_t below(std::uint64_t n);   // uniform over {0, ..., n-1}, n >= 1

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> gauss_;
};

} // namespace rismp

#endif
