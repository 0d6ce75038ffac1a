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

#include <cstddef>

#include "octopus/bigint.hpp"
#include "octopus/bytes.hpp"
#include "octopus/rng.hpp"

namespace octopus::crypto {

// Paillier public key with the generator fixed to n + 1, so g^n = 1 mod n^2
// and encryption reduces to (1 + m*n) * r^n mod n^2.
struct PaillierPublicKey {
  BigInt n;
  BigInt n_squared;
  size_t bits = 0;

  static PaillierPublicKey from_modulus(const BigInt& n);

  BigInt generator() const { return n + 1; }
  size_t plaintext_bytes() const { return (bits + 7) / 8; }
  // Fixed serialized width of a base ciphertext.
  size_t ciphertext_bytes() const { return (2 * bits + 7) / 8; }
  // First 16 bytes of SHA-256 over the serialized modulus.
  Bytes fingerprint() const;

  void serialize(ByteWriter& w) const;
  static PaillierPublicKey deserialize(ByteReader& r);

  friend bool operator==(const PaillierPublicKey& a, const PaillierPublicKey& b) { return a.n == b.n; }
};

struct Ciphertext {
  BigInt value;

  friend bool operator==(const Ciphertext& a, const Ciphertext& b) { return a.value == b.value; }
};

class PaillierSecretKey {
 public:
  // p and q must be distinct odd primes with gcd(pq, (p-1)(q-1)) = 1.
  static PaillierSecretKey from_primes(const BigInt& p, const BigInt& q);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& lambda() const { return lambda_; }
  const BigInt& mu() const { return mu_; }
  const PaillierPublicKey& public_key() const { return pk_; }

  // CRT decryption; agrees with L(c^lambda mod n^2) * mu mod n.
  BigInt decrypt(const Ciphertext& c) const;
  BigInt decrypt_textbook(const Ciphertext& c) const;

 private:
  PaillierPublicKey pk_;
  BigInt p_, q_, lambda_, mu_;
  BigInt p_squared_, q_squared_, hp_, hq_, q_inv_p_;
};

struct PaillierKeyPair {
  PaillierPublicKey pk;
  PaillierSecretKey sk;
};

// bits in {512, 1024, 2048} for production; any even value >= 16 is accepted.
PaillierKeyPair paillier_keygen(size_t bits, Rng& rng);

// Requires 0 <= m < n and gcd(r, n) = 1; throws std::out_of_range otherwise.
Ciphertext paillier_encrypt(const PaillierPublicKey& pk, const BigInt& m, const BigInt& r);
Ciphertext paillier_encrypt(const PaillierPublicKey& pk, const BigInt& m, Rng& rng);
BigInt paillier_decrypt(const PaillierSecretKey& sk, const Ciphertext& c);

// Decrypts to (m1 + m2) mod n.
Ciphertext hom_add(const PaillierPublicKey& pk, const Ciphertext& a, const Ciphertext& b);
// Decrypts to (m * k) mod n. k may be any non-negative integer.
Ciphertext hom_scale(const PaillierPublicKey& pk, const Ciphertext& c, const BigInt& k);
// Multiplies in a fresh encryption of zero.
Ciphertext rerandomize(const PaillierPublicKey& pk, const Ciphertext& c, Rng& rng);

void write_ciphertext(ByteWriter& w, const PaillierPublicKey& pk, const Ciphertext& c);
Ciphertext read_ciphertext(ByteReader& r, const PaillierPublicKey& pk);

}  // namespace octopus::crypto
