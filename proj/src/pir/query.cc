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

#include "octopus/pir/query.hpp"

#include <stdexcept>

namespace octopus::pir {

std::pair<PirQuery, QueryWitness> gen_query(const crypto::PaillierPublicKey& pk,
                                            const QueryShape& shape, uint64_t pid, Rng& rng) {
  std::vector<uint32_t> coords = pid_to_coords(shape, pid);
  std::vector<std::vector<BigInt>> plaintexts(shape.d());
  for (unsigned i = 0; i < shape.d(); ++i) {
    plaintexts[i].assign(shape.dim(i), BigInt(0));
    plaintexts[i][coords[i]] = 1;
  }
  auto out = gen_query_from_plaintexts(pk, shape, std::move(plaintexts), rng);
  out.second.pid = pid;
  return out;
}

std::pair<PirQuery, QueryWitness> gen_query_from_plaintexts(
    const crypto::PaillierPublicKey& pk, const QueryShape& shape,
    std::vector<std::vector<BigInt>> plaintexts, Rng& rng) {
  if (plaintexts.size() != shape.d()) throw std::invalid_argument("plaintext rows != d");
  PirQuery q{shape, {}, pk};
  QueryWitness w;
  w.randomness.resize(shape.d());
  q.subqueries.resize(shape.d());
  for (unsigned i = 0; i < shape.d(); ++i) {
    if (plaintexts[i].size() != shape.dim(i)) throw std::invalid_argument("plaintext row size != m_i");
    for (const BigInt& m : plaintexts[i]) {
      BigInt r = rng.unit_mod(pk.n);
      q.subqueries[i].push_back(crypto::paillier_encrypt(pk, mod(m, pk.n), r));
      w.randomness[i].push_back(std::move(r));
    }
  }
  w.plaintexts = std::move(plaintexts);
  return {std::move(q), std::move(w)};
}

void write_query(ByteWriter& w, const PirQuery& q) {
  q.shape.serialize(w);
  for (const auto& row : q.subqueries) {
    for (const auto& c : row) crypto::write_ciphertext(w, q.pk, c);
  }
}

PirQuery read_query(ByteReader& r, const crypto::PaillierPublicKey& pk) {
  PirQuery q;
  q.pk = pk;
  q.shape = QueryShape::deserialize(r);
  q.subqueries.resize(q.shape.d());
  for (unsigned i = 0; i < q.shape.d(); ++i) {
    for (uint32_t j = 0; j < q.shape.dim(i); ++j) q.subqueries[i].push_back(crypto::read_ciphertext(r, pk));
  }
  return q;
}

size_t query_encoded_size(const crypto::PaillierPublicKey& pk, const QueryShape& shape) {
  return shape.encoded_size() + shape.total_slots() * encoded_int_size(pk.ciphertext_bytes());
}

}  // namespace octopus::pir
