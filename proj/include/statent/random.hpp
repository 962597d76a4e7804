// Copyright 2026 The statent Authors
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

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace statent {

/**
 * Seeded generator with platform-independent output.
 *
 * The engine is std::mt19937_64, whose sequence is fixed by the C++ standard.
 * Standard distributions are not portable, so uniforms are formed here from
 * the top 53 bits of each draw.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1].
    double uniform_open_zero() { return 1.0 - uniform(); }

    /// Unit-rate exponential.
    double exponential() { return -std::log(uniform_open_zero()); }

  private:
    std::mt19937_64 engine_;
};

} // namespace statent
