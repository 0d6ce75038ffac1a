// Copyright 2026 The Octopus Authors
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

#include <cstdint>
#include <span>
#include <string_view>

#include "octopus/bigint.hpp"
#include "octopus/bytes.hpp"

namespace octopus {

// Deterministic randomness source: SHA-256 over (key || counter) blocks.
// Every randomized operation in the library takes one of these explicitly so
// that a fixed seed replays a whole session bit for bit. Not thread-safe;
// give each executor its own instance via fork().
class Rng {
 public:
  explicit Rng(uint64_t seed);
  explicit Rng(ByteSpan seed);

  void fill(std::span<uint8_t> out);
  Bytes bytes(size_t n);
  uint64_t next_u64();
  // Uniform in [0, bound); bound must be positive.
  uint64_t below(uint64_t bound);
  // Uniform double in [0, 1) with 53 bits of precision.
  double uniform01();

  BigInt bits(size_t nbits);
  // Uniform in [0, bound) by rejection sampling.
  BigInt below(const BigInt& bound);
  // Uniform unit of Z_n^*.
  BigInt unit_mod(const BigInt& n);

  // Independent child stream, keyed by this stream's key and `label`.
  Rng fork(std::string_view label) const;

 private:
  void refill();

  Bytes key_;
  uint64_t counter_ = 0;
  std::array<uint8_t, 32> block_{};
  size_t pos_ = 32;
};

}  // namespace octopus
