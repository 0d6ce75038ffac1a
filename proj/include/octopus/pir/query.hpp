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

#include <utility>
#include <vector>

#include "octopus/crypto/paillier.hpp"
#include "octopus/pir/shape.hpp"

namespace octopus::pir {

struct PirQuery {
  QueryShape shape;
  // subqueries[i][j] encrypts 1 iff coordinate i of the target equals j.
  std::vector<std::vector<crypto::Ciphertext>> subqueries;
  crypto::PaillierPublicKey pk;
};

// Prover-side knowledge behind a query: plaintext and randomness per slot.
struct QueryWitness {
  uint64_t pid = 0;
  std::vector<std::vector<BigInt>> plaintexts;
  std::vector<std::vector<BigInt>> randomness;
};

std::pair<PirQuery, QueryWitness> gen_query(const crypto::PaillierPublicKey& pk,
                                            const QueryShape& shape, uint64_t pid, Rng& rng);
// Encrypts arbitrary per-slot plaintexts. Used to build malformed queries.
std::pair<PirQuery, QueryWitness> gen_query_from_plaintexts(
    const crypto::PaillierPublicKey& pk, const QueryShape& shape,
    std::vector<std::vector<BigInt>> plaintexts, Rng& rng);

// Wire form: shape, then every sub-query ciphertext in order.
void write_query(ByteWriter& w, const PirQuery& q);
PirQuery read_query(ByteReader& r, const crypto::PaillierPublicKey& pk);
size_t query_encoded_size(const crypto::PaillierPublicKey& pk, const QueryShape& shape);

}  // namespace octopus::pir
