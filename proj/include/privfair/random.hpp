// Copyright 2026 The privfair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVFAIR_RANDOM_HPP_
#define PRIVFAIR_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace privfair {

// Seeded random stream. All sampling transforms are written out explicitly
// (instead of going through std::*_distribution, whose algorithms are
// implementation-defined) so that a given seed reproduces the same draws
// bit for bit on any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Uniform on [0, 1): 53 random bits scaled by 2^-53.
  double uniform();

  // Uniform on the open interval (0, 1); safe as input to log().
  double uniform_open();

  // Standard normal via Box-Muller; consumes exactly two uniforms per call.
  double gaussian();

  bool bernoulli(double p);

  std::uint64_t next_u64();

  // Independent child stream derived from this stream's seed and a stream
  // index. Children with distinct indices are decorrelated regardless of how
  // much the parent has been consumed.
  Rng derive(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace privfair

#endif  // PRIVFAIR_RANDOM_HPP_
