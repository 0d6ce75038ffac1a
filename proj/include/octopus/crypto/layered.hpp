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
#include <vector>

#include "octopus/crypto/paillier.hpp"

namespace octopus::crypto {

// Recursive Paillier encryption E^layer(.) as a flat list of base ciphertexts.
//
// Layer 1 encrypts the payload split into big-endian digits of digit_bytes(pk)
// bytes each (so every digit is below 2^(bits-1) <= n). Each further layer
// re-chunks every ciphertext c < n^2 into the two base-n digits
// (c div n, c mod n) and encrypts those, so the expansion factor per layer is
// exactly 2 and chunk_count(layer) = payload_digits * 2^(layer-1).
struct LayeredCiphertext {
  uint8_t layer = 0;
  std::vector<Ciphertext> chunks;

  friend bool operator==(const LayeredCiphertext&, const LayeredCiphertext&) = default;
};

using Digits = std::vector<BigInt>;

inline constexpr size_t kExpansionFactor = 2;

size_t digit_bytes(const PaillierPublicKey& pk);
size_t payload_digit_count(const PaillierPublicKey& pk, size_t payload_len);
// Number of base ciphertexts in a layer-`layer` encryption of a payload.
size_t chunk_count(const PaillierPublicKey& pk, size_t payload_len, unsigned layer);
// Number of plaintext digits that make up a layer-`layer` item: the payload
// digits for layer 0, or the re-chunked ciphertexts for layer >= 1.
size_t item_digit_count(const PaillierPublicKey& pk, size_t payload_len, unsigned layer);

Digits payload_to_digits(const PaillierPublicKey& pk, ByteSpan payload);
// Throws DecodeError if a digit does not fit the digit width.
Bytes digits_to_payload(const PaillierPublicKey& pk, const Digits& digits, size_t payload_len);
Digits chunks_to_digits(const PaillierPublicKey& pk, const std::vector<Ciphertext>& chunks);
// Inverse of chunks_to_digits. Zero chunks are allowed (zero strings); throws
// DecodeError on an odd digit count or a recombined value >= n^2.
std::vector<Ciphertext> digits_to_chunks(const PaillierPublicKey& pk, const Digits& digits);

// Encrypts the digits of a layer-`from_layer` item up to layer `to_layer`.
LayeredCiphertext encrypt_item(const PaillierPublicKey& pk, Digits digits, unsigned from_layer,
                               unsigned to_layer, Rng& rng);

LayeredCiphertext layered_encrypt(const PaillierPublicKey& pk, ByteSpan payload, unsigned layers,
                                  Rng& rng);
// E^(layers - zero_layer)(0_zero_layer): the zero string of layer `zero_layer`
// (layer 0 is the plain integer 0) wrapped up to `layers`.
LayeredCiphertext layered_encrypt_zero(const PaillierPublicKey& pk, size_t payload_len,
                                       unsigned zero_layer, unsigned layers, Rng& rng);

// Removes one layer and returns the decrypted digits of the inner item.
Digits peel_layer(const PaillierSecretKey& sk, const LayeredCiphertext& lc);
Bytes layered_decrypt(const PaillierSecretKey& sk, const LayeredCiphertext& lc, size_t payload_len);

// 1-byte layer tag, 2-byte chunk count, then fixed-width chunks.
void write_layered(ByteWriter& w, const PaillierPublicKey& pk, const LayeredCiphertext& lc);
LayeredCiphertext read_layered(ByteReader& r, const PaillierPublicKey& pk);
size_t layered_encoded_size(const PaillierPublicKey& pk, size_t chunks);

}  // namespace octopus::crypto
