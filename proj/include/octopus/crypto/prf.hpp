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

#include <array>
#include <initializer_list>
#include <string_view>

#include "octopus/bigint.hpp"
#include "octopus/bytes.hpp"
#include "octopus/rng.hpp"

namespace octopus::crypto {

// 32-byte PRF key shared between two parties. Protocol messages never carry
// one; the only serialized form is the registry's persistence log.
class PrfSeed {
 public:
  PrfSeed() = default;
  explicit PrfSeed(const std::array<uint8_t, 32>& secret) : secret_(secret) {}

  static PrfSeed random(Rng& rng);
  static PrfSeed from_bytes(ByteSpan raw);

  ByteSpan secret() const { return secret_; }

  friend bool operator==(const PrfSeed&, const PrfSeed&) = default;

 private:
  std::array<uint8_t, 32> secret_{};
};

// Injective label encoding: each part is u32-length-prefixed, so
// ("ab", "c") and ("a", "bc") never collide.
Bytes prf_label(std::initializer_list<std::string_view> parts);

// HMAC-SHA256 in counter mode, rejection-sampled into [0, range).
// Throws std::invalid_argument on an empty label or non-positive range.
BigInt prf_eval(const PrfSeed& seed, ByteSpan label, const BigInt& range);
// Raw keystream bytes for the same construction.
Bytes prf_bytes(const PrfSeed& seed, ByteSpan label, size_t n);

}  // namespace octopus::crypto
