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

#include "octopus/pir/classify.hpp"

#include <algorithm>

namespace octopus::pir {
namespace {

bool all_zero(const crypto::Digits& digits) {
  return std::all_of(digits.begin(), digits.end(), [](const BigInt& v) { return v == 0; });
}

}  // namespace

ResponseType ResponseType::type_i(unsigned layer) {
  if (layer == 0) throw std::invalid_argument("zero-string layer must be >= 1");
  return ResponseType(Kind::kZeroString, layer);
}

unsigned ResponseType::index(unsigned d) const {
  switch (kind_) {
    case Kind::kCommitment:
      return 0;
    case Kind::kZeroString:
      return layer_;
    case Kind::kFullZero:
      return d;
  }
  return 0;
}

std::string ResponseType::name() const {
  switch (kind_) {
    case Kind::kCommitment:
      return "Type0";
    case Kind::kZeroString:
      return "TypeI(" + std::to_string(layer_) + ")";
    case Kind::kFullZero:
      return "TypeD";
  }
  return "?";
}

void ResponseType::serialize(ByteWriter& w) const {
  w.put_u8(static_cast<uint8_t>(kind_));
  w.put_u8(static_cast<uint8_t>(layer_));
}

ResponseType ResponseType::deserialize(ByteReader& r) {
  uint8_t kind = r.u8();
  uint8_t layer = r.u8();
  switch (kind) {
    case 0:
      return type0();
    case 1:
      if (layer == 0) throw DecodeError("zero-string type with layer 0");
      return type_i(layer);
    case 2:
      return type_d();
    default:
      throw DecodeError("unknown response type tag");
  }
}

PeeledResponse peel_response(const crypto::PaillierSecretKey& sk, const PirResponse& resp, unsigned d,
                             size_t payload_len) {
  const auto& pk = sk.public_key();
  const auto& body = resp.body;
  if (body.layer != d) throw MalformedResponse("response layer does not match query dimension");
  if (body.chunks.size() != crypto::chunk_count(pk, payload_len, d)) {
    throw MalformedResponse("response chunk count does not match layer");
  }
  crypto::LayeredCiphertext cur = body;
  try {
    for (;;) {
      crypto::Digits digits = crypto::peel_layer(sk, cur);
      const unsigned inner = cur.layer - 1u;
      if (all_zero(digits)) {
        return PeeledResponse{inner == 0 ? ResponseType::type_d() : ResponseType::type_i(inner), std::nullopt};
      }
      if (inner == 0) {
        return PeeledResponse{ResponseType::type0(), crypto::digits_to_payload(pk, digits, payload_len)};
      }
      cur.chunks = crypto::digits_to_chunks(pk, digits);
      cur.layer = static_cast<uint8_t>(inner);
    }
  } catch (const DecodeError& e) {
    throw MalformedResponse(e.what());
  } catch (const std::invalid_argument& e) {
    // An inner chunk that is zero or otherwise not a ciphertext.
    throw MalformedResponse(e.what());
  }
}

Classification classify_response(const crypto::PaillierSecretKey& sk, const PirResponse& resp,
                                 unsigned d, size_t payload_len,
                                 const crypto::PedersenParams& params) {
  PeeledResponse peeled = peel_response(sk, resp, d, payload_len);
  Classification out{peeled.type, {}};
  if (!peeled.payload) return out;
  const size_t width = params.element_bytes();
  if (payload_len % width != 0) throw MalformedResponse("payload is not a whole number of commitments");
  ByteSpan payload = *peeled.payload;
  for (size_t off = 0; off < payload_len; off += width) {
    BigInt v = from_bytes_be(payload.subspan(off, width));
    if (!crypto::is_group_element(params, v)) throw MalformedResponse("payload is not a commitment");
    out.commitments.push_back(crypto::Commitment{std::move(v)});
  }
  return out;
}

std::set<ResponseType> reachable_types(unsigned d, unsigned s) {
  if (d < 1 || s > d) throw std::invalid_argument("replace iteration must be in [0, d]");
  std::set<ResponseType> out{ResponseType::type0(), ResponseType::type_d()};
  const unsigned top = s == kNoReplacement ? d - 1 : s - 1;
  for (unsigned i = 1; i <= top; ++i) out.insert(ResponseType::type_i(i));
  return out;
}

}  // namespace octopus::pir
