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

#include "octopus/bigint.hpp"
#include "octopus/bytes.hpp"
#include "octopus/rng.hpp"

namespace octopus::crypto {

// Order-q subgroup of Z_p^* with two generators whose relative discrete log
// is unknown: h is hashed into the subgroup from g.
struct PedersenParams {
  BigInt p, q, g, h;

  // p = 23, q = 11, g = 4, h = 9. Hand-checkable; tests only.
  static PedersenParams toy();
  // Deterministic in rng. p_bits > q_bits; q is prime and q | p - 1.
  static PedersenParams generate(size_t p_bits, size_t q_bits, Rng& rng);
  // Hash-to-group derivation of h from (p, q, g).
  static BigInt derive_h(const BigInt& p, const BigInt& q, const BigInt& g);

  // g^q = h^q = 1, g, h != 1, q | p - 1, p and q prime.
  bool valid() const;
  size_t element_bytes() const { return byte_length(p); }

  void serialize(ByteWriter& w) const;
  static PedersenParams deserialize(ByteReader& r);

  friend bool operator==(const PedersenParams&, const PedersenParams&) = default;
};

struct Commitment {
  BigInt value;

  friend bool operator==(const Commitment&, const Commitment&) = default;
};

// g^x h^r mod p. x and r are reduced mod q, so negative inputs are allowed.
Commitment pedersen_commit(const PedersenParams& params, const BigInt& x, const BigInt& r);
bool pedersen_verify_open(const PedersenParams& params, const Commitment& c, const BigInt& x,
                          const BigInt& r);

Commitment commit_mul(const PedersenParams& params, const Commitment& a, const Commitment& b);
Commitment commit_pow(const PedersenParams& params, const Commitment& c, const BigInt& k);
Commitment commit_inv(const PedersenParams& params, const Commitment& c);
Commitment commit_identity();

// 1 <= v < p and v^q = 1 mod p.
bool is_group_element(const PedersenParams& params, const BigInt& v);

void write_commitment(ByteWriter& w, const PedersenParams& params, const Commitment& c);
Commitment read_commitment(ByteReader& r, const PedersenParams& params);

}  // namespace octopus::crypto
