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

#include "octopus/crypto/prf.hpp"

#include <stdexcept>

#include "octopus/crypto/hash.hpp"

namespace octopus::crypto {
namespace {

class PrfStream {
 public:
  PrfStream(const PrfSeed& seed, ByteSpan label) : seed_(seed), label_(label.begin(), label.end()) {}

  void fill(std::span<uint8_t> out) {
    for (uint8_t& b : out) {
      if (pos_ == block_.size()) {
        ByteWriter w;
        w.put_bytes(label_);
        w.put_u32(counter_++);
        block_ = hmac_sha256(seed_.secret(), w.view());
        pos_ = 0;
      }
      b = block_[pos_++];
    }
  }

 private:
  const PrfSeed& seed_;
  Bytes label_;
  uint32_t counter_ = 0;
  Digest block_{};
  size_t pos_ = 32;
};

}  // namespace

PrfSeed PrfSeed::random(Rng& rng) {
  std::array<uint8_t, 32> s;
  rng.fill(s);
  return PrfSeed(s);
}

PrfSeed PrfSeed::from_bytes(ByteSpan raw) {
  if (raw.size() != 32) throw DecodeError("PRF seed must be 32 bytes");
  std::array<uint8_t, 32> s;
  std::copy(raw.begin(), raw.end(), s.begin());
  return PrfSeed(s);
}

Bytes prf_label(std::initializer_list<std::string_view> parts) {
  ByteWriter w;
  for (std::string_view p : parts) w.put_string(p);
  return w.take();
}

BigInt prf_eval(const PrfSeed& seed, ByteSpan label, const BigInt& range) {
  if (label.empty()) throw std::invalid_argument("prf_eval: empty label");
  if (range <= 0) throw std::invalid_argument("prf_eval: non-positive range");
  size_t nbits = bit_length(range);
  PrfStream stream(seed, label);
  Bytes buf((nbits + 7) / 8);
  for (;;) {
    stream.fill(buf);
    if (nbits % 8 != 0) buf[0] &= static_cast<uint8_t>((1u << (nbits % 8)) - 1);
    BigInt v = from_bytes_be(buf);
    if (v < range) return v;
  }
}

Bytes prf_bytes(const PrfSeed& seed, ByteSpan label, size_t n) {
  if (label.empty()) throw std::invalid_argument("prf_bytes: empty label");
  PrfStream stream(seed, label);
  Bytes out(n);
  stream.fill(out);
  return out;
}

}  // namespace octopus::crypto
