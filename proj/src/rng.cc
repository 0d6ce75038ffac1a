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

#include "octopus/rng.hpp"

#include <stdexcept>

#include "octopus/crypto/hash.hpp"

namespace octopus {

Rng::Rng(uint64_t seed) {
  ByteWriter w;
  w.put_string("octopus-rng");
  w.put_u64(seed);
  auto d = crypto::sha256(w.view());
  key_.assign(d.begin(), d.end());
}

Rng::Rng(ByteSpan seed) {
  Bytes material = concat({to_bytes("octopus-rng"), seed});
  auto d = crypto::sha256(material);
  key_.assign(d.begin(), d.end());
}

void Rng::refill() {
  ByteWriter w;
  w.put_bytes(key_);
  w.put_u64(counter_++);
  block_ = crypto::sha256(w.view());
  pos_ = 0;
}

void Rng::fill(std::span<uint8_t> out) {
  for (uint8_t& b : out) {
    if (pos_ == block_.size()) refill();
    b = block_[pos_++];
  }
}

Bytes Rng::bytes(size_t n) {
  Bytes out(n);
  fill(out);
  return out;
}

uint64_t Rng::next_u64() {
  std::array<uint8_t, 8> buf;
  fill(buf);
  uint64_t v = 0;
  for (uint8_t b : buf) v = (v << 8) | b;
  return v;
}

uint64_t Rng::below(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
  uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  for (;;) {
    uint64_t v = next_u64();
    if (v < limit) return v % bound;
  }
}

double Rng::uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

BigInt Rng::bits(size_t nbits) {
  Bytes buf = bytes((nbits + 7) / 8);
  if (nbits % 8 != 0 && !buf.empty()) buf[0] &= static_cast<uint8_t>((1u << (nbits % 8)) - 1);
  return from_bytes_be(buf);
}

BigInt Rng::below(const BigInt& bound) {
  if (bound <= 0) throw std::invalid_argument("Rng::below: non-positive bound");
  size_t nbits = bit_length(bound);
  for (;;) {
    BigInt v = bits(nbits);
    if (v < bound) return v;
  }
}

BigInt Rng::unit_mod(const BigInt& n) {
  for (;;) {
    BigInt v = below(n);
    if (v != 0 && gcd(v, n) == 1) return v;
  }
}

Rng Rng::fork(std::string_view label) const {
  Bytes material = concat({key_, to_bytes(label)});
  return Rng(ByteSpan(material));
}

}  // namespace octopus
