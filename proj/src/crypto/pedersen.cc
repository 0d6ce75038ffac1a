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

#include "octopus/crypto/pedersen.hpp"

#include <stdexcept>

#include "octopus/crypto/hash.hpp"

namespace octopus::crypto {

PedersenParams PedersenParams::toy() { return PedersenParams{23, 11, 4, 9}; }

PedersenParams PedersenParams::generate(size_t p_bits, size_t q_bits, Rng& rng) {
  if (q_bits < 8 || p_bits <= q_bits + 1) throw std::invalid_argument("invalid Pedersen sizes");
  BigInt q;
  for (;;) {
    BigInt candidate = rng.bits(q_bits);
    mpz_setbit(candidate.get_mpz_t(), q_bits - 1);
    mpz_nextprime(q.get_mpz_t(), candidate.get_mpz_t());
    if (bit_length(q) == q_bits) break;
  }
  BigInt p;
  for (;;) {
    // p = k*q + 1 with k even and p of exactly p_bits bits.
    BigInt k = rng.bits(p_bits - q_bits);
    mpz_setbit(k.get_mpz_t(), p_bits - q_bits - 1);
    mpz_clrbit(k.get_mpz_t(), 0);
    p = k * q + 1;
    if (bit_length(p) == p_bits && is_probable_prime(p)) break;
  }
  BigInt cofactor = (p - 1) / q;
  BigInt g;
  for (BigInt a = 2;; ++a) {
    g = powm(a, cofactor, p);
    if (g != 1) break;
  }
  return PedersenParams{p, q, g, derive_h(p, q, g)};
}

BigInt PedersenParams::derive_h(const BigInt& p, const BigInt& q, const BigInt& g) {
  BigInt cofactor = (p - 1) / q;
  Bytes seed = to_bytes_be(g);
  for (uint32_t counter = 0;; ++counter) {
    ByteWriter w;
    w.put_string("octopus-pedersen-h");
    w.put_blob(seed);
    w.put_u32(counter);
    // Expand to |p| + 8 bytes so the reduction mod p is close to uniform.
    Bytes material;
    for (uint32_t block = 0; material.size() < byte_length(p) + 8; ++block) {
      ByteWriter b;
      b.put_bytes(w.view());
      b.put_u32(block);
      Digest d = sha256(b.view());
      material.insert(material.end(), d.begin(), d.end());
    }
    BigInt u = mod(from_bytes_be(material), p);
    if (u < 2) continue;
    BigInt h = powm(u, cofactor, p);
    if (h != 1 && h != g) return h;
  }
}

bool PedersenParams::valid() const {
  if (p < 5 || q < 2 || !is_probable_prime(p) || !is_probable_prime(q)) return false;
  if (mod(p - 1, q) != 0) return false;
  return is_group_element(*this, g) && is_group_element(*this, h) && g != 1 && h != 1;
}

void PedersenParams::serialize(ByteWriter& w) const {
  write_int(w, p);
  write_int(w, q);
  write_int(w, g);
  write_int(w, h);
}

PedersenParams PedersenParams::deserialize(ByteReader& r) {
  PedersenParams out;
  out.p = read_int(r);
  out.q = read_int(r);
  out.g = read_int(r);
  out.h = read_int(r);
  return out;
}

Commitment pedersen_commit(const PedersenParams& params, const BigInt& x, const BigInt& r) {
  BigInt gx = powm(params.g, mod(x, params.q), params.p);
  BigInt hr = powm(params.h, mod(r, params.q), params.p);
  return Commitment{mod(gx * hr, params.p)};
}

bool pedersen_verify_open(const PedersenParams& params, const Commitment& c, const BigInt& x,
                          const BigInt& r) {
  return pedersen_commit(params, x, r) == c;
}

Commitment commit_mul(const PedersenParams& params, const Commitment& a, const Commitment& b) {
  return Commitment{mod(a.value * b.value, params.p)};
}

Commitment commit_pow(const PedersenParams& params, const Commitment& c, const BigInt& k) {
  return Commitment{powm(c.value, mod(k, params.q), params.p)};
}

Commitment commit_inv(const PedersenParams& params, const Commitment& c) {
  return Commitment{invert(c.value, params.p)};
}

Commitment commit_identity() { return Commitment{1}; }

bool is_group_element(const PedersenParams& params, const BigInt& v) {
  if (v < 1 || v >= params.p) return false;
  return powm(v, params.q, params.p) == 1;
}

void write_commitment(ByteWriter& w, const PedersenParams& params, const Commitment& c) {
  write_int(w, c.value, params.element_bytes());
}

Commitment read_commitment(ByteReader& r, const PedersenParams& params) {
  BigInt v = read_int(r);
  if (!is_group_element(params, v)) throw DecodeError("commitment is not a group element");
  return Commitment{std::move(v)};
}

}  // namespace octopus::crypto
