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

#include "octopus/zk/transcript.hpp"

#include "octopus/crypto/hash.hpp"

namespace octopus::zk {

Transcript::Transcript(std::string_view domain) { state_.put_string(domain); }

Transcript& Transcript::absorb(ByteSpan data) {
  state_.put_blob(data);
  return *this;
}

Transcript& Transcript::absorb(std::string_view s) {
  state_.put_string(s);
  return *this;
}

Transcript& Transcript::absorb(const BigInt& x) {
  if (x < 0) throw std::invalid_argument("transcript elements are non-negative");
  write_int(state_, x);
  return *this;
}

Transcript& Transcript::absorb_u64(uint64_t v) {
  state_.put_u32(8);
  state_.put_u64(v);
  return *this;
}

BigInt Transcript::challenge() const {
  crypto::Digest digest = crypto::sha256(state_.view());
  return from_bytes_be(ByteSpan(digest).first(kChallengeBits / 8));
}

Bytes sub_context(ByteSpan context, std::string_view tag, uint64_t a, uint64_t b) {
  ByteWriter w;
  w.put_blob(context);
  w.put_string(tag);
  w.put_u64(a);
  w.put_u64(b);
  return w.take();
}

BigInt random_challenge(Rng& rng) { return rng.bits(kChallengeBits); }

}  // namespace octopus::zk
