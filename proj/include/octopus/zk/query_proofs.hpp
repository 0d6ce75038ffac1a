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

#include <vector>

#include "octopus/pir/query.hpp"
#include "octopus/zk/paillier_proofs.hpp"

namespace octopus::zk {

// Per dimension: a binary proof for every slot and an n-th root proof that
// (prod_j q_ij) * g^-1 is an encryption of 0, i.e. the slots sum to 1.
struct ValidQueryProof {
  std::vector<std::vector<BinaryProof>> slots;
  std::vector<NthRootProof> sums;

  void serialize(ByteWriter& w) const;
  static ValidQueryProof deserialize(ByteReader& r);
};

ValidQueryProof prove_valid_query(const pir::PirQuery& query, const pir::QueryWitness& witness,
                                  ByteSpan context, Rng& rng);
bool verify_valid_query(const pir::PirQuery& query, const ValidQueryProof& proof, ByteSpan context);

// Per dimension i: an OR over the m/m_i "lines" through dimension i that one
// line's selected item, c*_ij = prod_k q_ik^A[line j, k], encrypts the same
// value as c.
struct CorrespondenceProof {
  std::vector<OrNthRootProof> dims;

  void serialize(ByteWriter& w) const;
  static CorrespondenceProof deserialize(ByteReader& r);
};

// Slot of line j, position k along dimension i.
uint64_t line_slot(const pir::QueryShape& shape, unsigned dim, uint64_t line, uint32_t k);
// Line through dimension i that contains pid.
uint64_t line_of(const pir::QueryShape& shape, unsigned dim, uint64_t pid);

// Statements c*_ij * c^-1 for every line j of dimension i.
std::vector<BigInt> correspondence_statements(const pir::PirQuery& query, const crypto::Ciphertext& c,
                                              const std::vector<BigInt>& dataset, unsigned dim);

// dataset holds one value per slot of the group; c encrypts dataset[pid]
// with randomness r_c.
CorrespondenceProof prove_correspondence(const pir::PirQuery& query, const pir::QueryWitness& witness,
                                         const crypto::Ciphertext& c, const BigInt& r_c,
                                         const std::vector<BigInt>& dataset, ByteSpan context, Rng& rng);
// Rejects datasets of the wrong size, with duplicates, or with values
// outside [0, n).
bool verify_correspondence(const pir::PirQuery& query, const crypto::Ciphertext& c,
                           const std::vector<BigInt>& dataset, const CorrespondenceProof& proof,
                           ByteSpan context);

}  // namespace octopus::zk
