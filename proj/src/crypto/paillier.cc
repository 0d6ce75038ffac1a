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

#include "octopus/crypto/paillier.hpp"

#include <stdexcept>

#include "octopus/crypto/hash.hpp"

namespace octopus::crypto {
namespace {

void check_operand(const PaillierPublicKey& pk, const Ciphertext& c) {
  if (c.value <= 0 || c.value >= pk.n_squared) {
    throw std::invalid_argument("ciphertext is not under this public key");
  }
}

BigInt random_prime(size_t bits, Rng& rng) {
  for (;;) {
    BigInt candidate = rng.bits(bits);
    // Top two bits set so the product of two such primes has exactly 2*bits bits.
    mpz_setbit(candidate.get_mpz_t(), bits - 1);
    mpz_setbit(candidate.get_mpz_t(), bits - 2);
    BigInt prime;
    mpz_nextprime(prime.get_mpz_t(), candidate.get_mpz_t());
    if (bit_length(prime) == bits) return prime;
  }
}

}  // namespace

PaillierPublicKey PaillierPublicKey::from_modulus(const BigInt& n) {
  if (n <= 3 || mpz_even_p(n.get_mpz_t())) throw std::invalid_argument("Paillier modulus must be odd and > 3");
  PaillierPublicKey pk;
  pk.n = n;
  pk.n_squared = n * n;
  pk.bits = bit_length(n);
  return pk;
}

Bytes PaillierPublicKey::fingerprint() const {
  Digest d = sha256(to_bytes_be(n));
  return Bytes(d.begin(), d.begin() + 16);
}

void PaillierPublicKey::serialize(ByteWriter& w) const { write_int(w, n); }

PaillierPublicKey PaillierPublicKey::deserialize(ByteReader& r) {
  try {
    return from_modulus(read_int(r));
  } catch (const std::invalid_argument& e) {
    throw DecodeError(e.what());
  }
}

PaillierSecretKey PaillierSecretKey::from_primes(const BigInt& p, const BigInt& q) {
  if (p == q) throw std::invalid_argument("Paillier primes must differ");
  PaillierSecretKey sk;
  sk.p_ = p;
  sk.q_ = q;
  sk.pk_ = PaillierPublicKey::from_modulus(p * q);
  const BigInt& n = sk.pk_.n;
  if (gcd(n, (p - 1) * (q - 1)) != 1) throw std::invalid_argument("gcd(n, phi(n)) != 1");
  sk.lambda_ = lcm(p - 1, q - 1);
  BigInt u = powm(sk.pk_.generator(), sk.lambda_, sk.pk_.n_squared);
  sk.mu_ = invert((u - 1) / n, n);

  sk.p_squared_ = p * p;
  sk.q_squared_ = q * q;
  BigInt gp = powm(sk.pk_.generator(), p - 1, sk.p_squared_);
  BigInt gq = powm(sk.pk_.generator(), q - 1, sk.q_squared_);
  sk.hp_ = invert((gp - 1) / p, p);
  sk.hq_ = invert((gq - 1) / q, q);
  sk.q_inv_p_ = invert(q, p);
  return sk;
}

BigInt PaillierSecretKey::decrypt(const Ciphertext& c) const {
  check_operand(pk_, c);
  BigInt cp = powm(mod(c.value, p_squared_), p_ - 1, p_squared_);
  BigInt mp = mod(((cp - 1) / p_) * hp_, p_);
  BigInt cq = powm(mod(c.value, q_squared_), q_ - 1, q_squared_);
  BigInt mq = mod(((cq - 1) / q_) * hq_, q_);
  // Garner recombination.
  BigInt h = mod((mp - mq) * q_inv_p_, p_);
  return mq + h * q_;
}

BigInt PaillierSecretKey::decrypt_textbook(const Ciphertext& c) const {
  check_operand(pk_, c);
  BigInt u = powm(c.value, lambda_, pk_.n_squared);
  return mod(((u - 1) / pk_.n) * mu_, pk_.n);
}

PaillierKeyPair paillier_keygen(size_t bits, Rng& rng) {
  if (bits < 16 || bits % 2 != 0) throw std::invalid_argument("Paillier key size must be even and >= 16");
  for (;;) {
    BigInt p = random_prime(bits / 2, rng);
    BigInt q = random_prime(bits / 2, rng);
    if (p == q) continue;
    BigInt n = p * q;
    if (bit_length(n) != bits) continue;
    if (gcd(n, (p - 1) * (q - 1)) != 1) continue;
    PaillierSecretKey sk = PaillierSecretKey::from_primes(p, q);
    return PaillierKeyPair{sk.public_key(), std::move(sk)};
  }
}

Ciphertext paillier_encrypt(const PaillierPublicKey& pk, const BigInt& m, const BigInt& r) {
  if (m < 0 || m >= pk.n) throw std::out_of_range("plaintext out of range");
  if (r <= 0 || r >= pk.n || gcd(r, pk.n) != 1) throw std::out_of_range("randomness is not a unit mod n");
  BigInt gm = mod(1 + m * pk.n, pk.n_squared);
  return Ciphertext{mod(gm * powm(r, pk.n, pk.n_squared), pk.n_squared)};
}

Ciphertext paillier_encrypt(const PaillierPublicKey& pk, const BigInt& m, Rng& rng) {
  return paillier_encrypt(pk, m, rng.unit_mod(pk.n));
}

BigInt paillier_decrypt(const PaillierSecretKey& sk, const Ciphertext& c) { return sk.decrypt(c); }

Ciphertext hom_add(const PaillierPublicKey& pk, const Ciphertext& a, const Ciphertext& b) {
  check_operand(pk, a);
  check_operand(pk, b);
  return Ciphertext{mod(a.value * b.value, pk.n_squared)};
}

Ciphertext hom_scale(const PaillierPublicKey& pk, const Ciphertext& c, const BigInt& k) {
  check_operand(pk, c);
  if (k < 0) throw std::invalid_argument("hom_scale: negative scalar");
  return Ciphertext{powm(c.value, k, pk.n_squared)};
}

Ciphertext rerandomize(const PaillierPublicKey& pk, const Ciphertext& c, Rng& rng) {
  BigInt r = rng.unit_mod(pk.n);
  return hom_add(pk, c, Ciphertext{powm(r, pk.n, pk.n_squared)});
}

void write_ciphertext(ByteWriter& w, const PaillierPublicKey& pk, const Ciphertext& c) {
  write_int(w, c.value, pk.ciphertext_bytes());
}

Ciphertext read_ciphertext(ByteReader& r, const PaillierPublicKey& pk) {
  BigInt v = read_int(r);
  if (v >= pk.n_squared) throw DecodeError("ciphertext exceeds n^2");
  return Ciphertext{std::move(v)};
}

}  // namespace octopus::crypto
