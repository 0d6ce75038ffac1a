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

#include <optional>
#include <vector>

#include "octopus/crypto/pedersen.hpp"
#include "octopus/zk/transcript.hpp"

namespace octopus::zk {

// Knowledge of (x, r) with c = g^x h^r.
struct OpeningProof {
  BigInt T, z_x, z_r;

  void serialize(ByteWriter& w) const;
  static OpeningProof deserialize(ByteReader& r);
};

OpeningProof prove_opening(const crypto::PedersenParams& params, const crypto::Commitment& c,
                           const BigInt& x, const BigInt& r, ByteSpan context, Rng& rng);
bool verify_opening(const crypto::PedersenParams& params, const crypto::Commitment& c,
                    const OpeningProof& proof, ByteSpan context);

// c commits to 0 or 1: an OR of discrete logs base h of c and c * g^-1.
struct BitProof {
  BigInt T0, T1, e0, e1, z0, z1;

  void serialize(ByteWriter& w) const;
  static BitProof deserialize(ByteReader& r);
};

BitProof prove_bit(const crypto::PedersenParams& params, const crypto::Commitment& c, const BigInt& bit,
                   const BigInt& r, ByteSpan context, Rng& rng);
bool verify_bit(const crypto::PedersenParams& params, const crypto::Commitment& c, const BitProof& proof,
                ByteSpan context);

// c_z commits to the product of the values in c_x and c_y. Proves knowledge
// of x, r_x, r' with c_x = g^x h^r_x and c_z = c_y^x h^r', r' = r_z - x r_y.
struct MultiplicationProof {
  BigInt T1, T2, z_x, z_rx, z_r;

  void serialize(ByteWriter& w) const;
  static MultiplicationProof deserialize(ByteReader& r);
};

MultiplicationProof prove_multiplication(const crypto::PedersenParams& params, const crypto::Commitment& c_x,
                                         const crypto::Commitment& c_y, const crypto::Commitment& c_z,
                                         const BigInt& x, const BigInt& r_x, const BigInt& r_y,
                                         const BigInt& r_z, ByteSpan context, Rng& rng);
bool verify_multiplication(const crypto::PedersenParams& params, const crypto::Commitment& c_x,
                           const crypto::Commitment& c_y, const crypto::Commitment& c_z,
                           const MultiplicationProof& proof, ByteSpan context);

// x in [0, 2^L): L bit commitments with prod c_j^(2^j) = c and a bit proof each.
struct RangeProof {
  std::vector<crypto::Commitment> bits;
  std::vector<BitProof> proofs;

  void serialize(ByteWriter& w, const crypto::PedersenParams& params) const;
  static RangeProof deserialize(ByteReader& r, const crypto::PedersenParams& params);
};

// Requires 2^(L+1) < q for soundness; provers do not check x.
RangeProof prove_range(const crypto::PedersenParams& params, const crypto::Commitment& c, const BigInt& x,
                       const BigInt& r, unsigned L, ByteSpan context, Rng& rng);
bool verify_range(const crypto::PedersenParams& params, const crypto::Commitment& c, unsigned L,
                  const RangeProof& proof, ByteSpan context);

// Comparison of the committed x with a public threshold t. claim_less:
// x < t, shown by ranges on c and on g^(t-1) c^-1. Otherwise x >= t, shown by
// a range on c g^-t.
struct ComparisonProof {
  bool claim_less = false;
  std::vector<RangeProof> ranges;

  void serialize(ByteWriter& w, const crypto::PedersenParams& params) const;
  static ComparisonProof deserialize(ByteReader& r, const crypto::PedersenParams& params);
};

ComparisonProof prove_comparison(const crypto::PedersenParams& params, const crypto::Commitment& c,
                                 const BigInt& x, const BigInt& r, const BigInt& t, unsigned L,
                                 ByteSpan context, Rng& rng);
// The proven claim (x < t) when the proof verifies, nullopt otherwise.
std::optional<bool> verify_comparison(const crypto::PedersenParams& params, const crypto::Commitment& c,
                                      const BigInt& t, unsigned L, const ComparisonProof& proof,
                                      ByteSpan context);

// Largest L the group supports for range proofs (2^(L+1) < q), capped at 64.
unsigned max_range_bits(const crypto::PedersenParams& params);

}  // namespace octopus::zk
