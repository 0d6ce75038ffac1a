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

#include "octopus/crypto/layered.hpp"

#include <stdexcept>

namespace octopus::crypto {

size_t digit_bytes(const PaillierPublicKey& pk) {
  size_t d = (pk.bits - 1) / 8;
  if (d == 0) throw std::invalid_argument("key too small for layered encryption");
  return d;
}

size_t payload_digit_count(const PaillierPublicKey& pk, size_t payload_len) {
  size_t w = digit_bytes(pk);
  return payload_len == 0 ? 1 : (payload_len + w - 1) / w;
}

size_t chunk_count(const PaillierPublicKey& pk, size_t payload_len, unsigned layer) {
  if (layer == 0) throw std::invalid_argument("chunk_count: layer must be >= 1");
  return payload_digit_count(pk, payload_len) << (layer - 1);
}

size_t item_digit_count(const PaillierPublicKey& pk, size_t payload_len, unsigned layer) {
  return payload_digit_count(pk, payload_len) << layer;
}

Digits payload_to_digits(const PaillierPublicKey& pk, ByteSpan payload) {
  size_t w = digit_bytes(pk);
  size_t count = payload_digit_count(pk, payload.size());
  Digits out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    size_t begin = i * w;
    size_t end = std::min(payload.size(), begin + w);
    Bytes digit(w, 0);
    if (begin < end) std::copy(payload.begin() + begin, payload.begin() + end, digit.begin());
    out.push_back(from_bytes_be(digit));
  }
  return out;
}

Bytes digits_to_payload(const PaillierPublicKey& pk, const Digits& digits, size_t payload_len) {
  size_t w = digit_bytes(pk);
  if (digits.size() != payload_digit_count(pk, payload_len)) throw DecodeError("payload digit count mismatch");
  Bytes joined;
  joined.reserve(digits.size() * w);
  for (const BigInt& d : digits) {
    if (d < 0 || byte_length(d) > w) throw DecodeError("payload digit out of range");
    Bytes part = to_bytes_be(d, w);
    joined.insert(joined.end(), part.begin(), part.end());
  }
  joined.resize(payload_len);
  return joined;
}

Digits chunks_to_digits(const PaillierPublicKey& pk, const std::vector<Ciphertext>& chunks) {
  Digits out;
  out.reserve(chunks.size() * 2);
  for (const Ciphertext& c : chunks) {
    BigInt hi, lo;
    mpz_fdiv_qr(hi.get_mpz_t(), lo.get_mpz_t(), c.value.get_mpz_t(), pk.n.get_mpz_t());
    out.push_back(std::move(hi));
    out.push_back(std::move(lo));
  }
  return out;
}

std::vector<Ciphertext> digits_to_chunks(const PaillierPublicKey& pk, const Digits& digits) {
  if (digits.size() % 2 != 0) throw DecodeError("odd digit count for ciphertext layer");
  std::vector<Ciphertext> out;
  out.reserve(digits.size() / 2);
  for (size_t i = 0; i < digits.size(); i += 2) {
    if (digits[i] >= pk.n || digits[i + 1] >= pk.n) throw DecodeError("digit exceeds modulus");
    out.push_back(Ciphertext{digits[i] * pk.n + digits[i + 1]});
  }
  return out;
}

LayeredCiphertext encrypt_item(const PaillierPublicKey& pk, Digits digits, unsigned from_layer,
                               unsigned to_layer, Rng& rng) {
  if (to_layer <= from_layer) throw std::invalid_argument("encrypt_item: target layer must exceed source");
  LayeredCiphertext lc;
  for (unsigned layer = from_layer + 1; layer <= to_layer; ++layer) {
    lc.chunks.clear();
    lc.chunks.reserve(digits.size());
    for (const BigInt& d : digits) {
      // Digits are < n by construction of the chunking.
      if (d >= pk.n) throw std::logic_error("digit exceeds modulus");
      lc.chunks.push_back(paillier_encrypt(pk, d, rng));
    }
    lc.layer = static_cast<uint8_t>(layer);
    if (layer < to_layer) digits = chunks_to_digits(pk, lc.chunks);
  }
  return lc;
}

LayeredCiphertext layered_encrypt(const PaillierPublicKey& pk, ByteSpan payload, unsigned layers,
                                  Rng& rng) {
  if (layers < 1) throw std::invalid_argument("layered_encrypt: layers must be >= 1");
  return encrypt_item(pk, payload_to_digits(pk, payload), 0, layers, rng);
}

LayeredCiphertext layered_encrypt_zero(const PaillierPublicKey& pk, size_t payload_len,
                                       unsigned zero_layer, unsigned layers, Rng& rng) {
  Digits zeros(item_digit_count(pk, payload_len, zero_layer), BigInt(0));
  return encrypt_item(pk, std::move(zeros), zero_layer, layers, rng);
}

Digits peel_layer(const PaillierSecretKey& sk, const LayeredCiphertext& lc) {
  if (lc.layer == 0) throw std::invalid_argument("peel_layer: nothing to peel");
  Digits out;
  out.reserve(lc.chunks.size());
  for (const Ciphertext& c : lc.chunks) out.push_back(sk.decrypt(c));
  return out;
}

Bytes layered_decrypt(const PaillierSecretKey& sk, const LayeredCiphertext& lc, size_t payload_len) {
  const PaillierPublicKey& pk = sk.public_key();
  if (lc.layer < 1 || lc.chunks.size() != chunk_count(pk, payload_len, lc.layer)) {
    throw DecodeError("malformed chunk count for declared layer");
  }
  LayeredCiphertext cur = lc;
  for (;;) {
    Digits digits = peel_layer(sk, cur);
    if (cur.layer == 1) return digits_to_payload(pk, digits, payload_len);
    cur.chunks = digits_to_chunks(pk, digits);
    cur.layer = static_cast<uint8_t>(cur.layer - 1);
  }
}

void write_layered(ByteWriter& w, const PaillierPublicKey& pk, const LayeredCiphertext& lc) {
  if (lc.chunks.size() > 0xffff) throw std::length_error("too many chunks");
  w.put_u8(lc.layer);
  w.put_u16(static_cast<uint16_t>(lc.chunks.size()));
  for (const Ciphertext& c : lc.chunks) write_ciphertext(w, pk, c);
}

LayeredCiphertext read_layered(ByteReader& r, const PaillierPublicKey& pk) {
  LayeredCiphertext lc;
  lc.layer = r.u8();
  uint16_t count = r.u16();
  lc.chunks.reserve(count);
  for (uint16_t i = 0; i < count; ++i) lc.chunks.push_back(read_ciphertext(r, pk));
  return lc;
}

size_t layered_encoded_size(const PaillierPublicKey& pk, size_t chunks) {
  return 3 + chunks * encoded_int_size(pk.ciphertext_bytes());
}

}  // namespace octopus::crypto
