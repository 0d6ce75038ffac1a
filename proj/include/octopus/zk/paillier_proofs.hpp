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

#include "octopus/crypto/paillier.hpp"
#include "octopus/zk/transcript.hpp"

namespace octopus::zk {

// Every prover takes its witness on trust: a false statement yields a proof
// that fails verification rather than an exception.

struct PlaintextKnowledgeProof {
  BigInt T;  // g^a s^n mod n^2
  BigInt z;  // a + e x mod n
  BigInt w;  // s r^e mod n

  void serialize(ByteWriter& w) const;
  static PlaintextKnowledgeProof deserialize(ByteReader& r);
  friend bool operator==(const PlaintextKnowledgeProof&, const PlaintextKnowledgeProof&) = default;
};

PlaintextKnowledgeProof prove_plaintext_knowledge(const crypto::PaillierPublicKey& pk,
                                                  const crypto::Ciphertext& c, const BigInt& x,
                                                  const BigInt& r, ByteSpan context, Rng& rng);
bool verify_plaintext_knowledge(const crypto::PaillierPublicKey& pk, const crypto::Ciphertext& c,
                                const PlaintextKnowledgeProof& proof, ByteSpan context);

// Knowledge of v with stmt = v^n mod n^2.
struct NthRootProof {
  BigInt T;
  BigInt z;

  void serialize(ByteWriter& w) const;
  static NthRootProof deserialize(ByteReader& r);
  friend bool operator==(const NthRootProof&, const NthRootProof&) = default;
};

NthRootProof prove_nth_root(const crypto::PaillierPublicKey& pk, const BigInt& stmt, const BigInt& v,
                            ByteSpan context, Rng& rng);
bool verify_nth_root(const crypto::PaillierPublicKey& pk, const BigInt& stmt, const NthRootProof& proof,
                     ByteSpan context);

// OR over several n-th root statements. Sub-challenges XOR to the
// Fiat-Shamir challenge; every branch but the real one is simulated.
struct OrNthRootProof {
  std::vector<BigInt> T;
  std::vector<BigInt> e;
  std::vector<BigInt> z;

  void serialize(ByteWriter& w) const;
  static OrNthRootProof deserialize(ByteReader& r);
  friend bool operator==(const OrNthRootProof&, const OrNthRootProof&) = default;
};

OrNthRootProof prove_or_nth_root(const crypto::PaillierPublicKey& pk, const std::vector<BigInt>& stmts,
                                 size_t real, const BigInt& v, ByteSpan context, Rng& rng);
bool verify_or_nth_root(const crypto::PaillierPublicKey& pk, const std::vector<BigInt>& stmts,
                        const OrNthRootProof& proof, ByteSpan context);

// c encrypts 0 or 1: an OR of the n-th root statements c and c * g^-1.
using BinaryProof = OrNthRootProof;

BinaryProof prove_binary(const crypto::PaillierPublicKey& pk, const crypto::Ciphertext& c,
                         const BigInt& bit, const BigInt& r, ByteSpan context, Rng& rng);
bool verify_binary(const crypto::PaillierPublicKey& pk, const crypto::Ciphertext& c,
                   const BinaryProof& proof, ByteSpan context);

// A value in Z_{n^2} that is a unit; proofs reject anything else.
bool is_unit_mod_n2(const crypto::PaillierPublicKey& pk, const BigInt& x);

}  // namespace octopus::zk
