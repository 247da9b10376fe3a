// Copyright 2026 The transmon-grover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TGROVER_RNG_H
#define TGROVER_RNG_H

#include <cstdint>
#include <initializer_list>

namespace tgrover {

// Counter-based randomness. Every draw is a pure function of (seed, counter), so
// any partitioning of a shot range across threads reproduces the sequential result.
//
// The mixer is SplitMix64's finalizer. Changing it invalidates every golden output.

std::uint64_t mix64(std::uint64_t x);

/// Seed for an independent sub-stream of `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);
/// Folds a path of stream ids into `seed`, e.g. {oracle, stage, setting}.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

/// Uniform double in [0, 1) for draw `counter` of `seed`, 53 bits of resolution.
double uniform_at(std::uint64_t seed, std::uint64_t counter);

}  // namespace tgrover

#endif
