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

#include <string_view>

#include "octopus/bigint.hpp"
#include "octopus/rng.hpp"

namespace octopus::zk {

inline constexpr size_t kChallengeBits = 128;

// Fiat-Shamir transcript. The challenge is SHA-256 over the domain tag and
// every absorbed element (each u32-length-prefixed), truncated to 128 bits.
class Transcript {
 public:
  explicit Transcript(std::string_view domain);

  Transcript& absorb(ByteSpan data);
  Transcript& absorb(std::string_view s);
  Transcript& absorb(const BigInt& x);
  Transcript& absorb_u64(uint64_t v);

  BigInt challenge() const;

 private:
  ByteWriter state_;
};

// Context for a sub-proof: the parent context plus a tag and two indices.
Bytes sub_context(ByteSpan context, std::string_view tag, uint64_t a = 0, uint64_t b = 0);

BigInt random_challenge(Rng& rng);

}  // namespace octopus::zk
