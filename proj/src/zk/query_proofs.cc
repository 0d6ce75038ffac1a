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

#include "octopus/zk/query_proofs.hpp"

#include <set>

namespace octopus::zk {
namespace {

uint64_t suffix_product(const pir::QueryShape& shape, unsigned dim) {
  uint64_t s = 1;
  for (unsigned l = dim + 1; l < shape.d(); ++l) s *= shape.dim(l);
  return s;
}

bool query_well_formed(const pir::PirQuery& query) {
  if (query.subqueries.size() != query.shape.d()) return false;
  for (unsigned i = 0; i < query.shape.d(); ++i) {
    if (query.subqueries[i].size() != query.shape.dim(i)) return false;
  }
  return true;
}

BigInt sum_statement(const pir::PirQuery& query, unsigned i) {
  const auto& pk = query.pk;
  BigInt prod = 1;
  for (const auto& q : query.subqueries[i]) prod = mod(prod * q.value, pk.n_squared);
  return mod(prod * invert(pk.generator(), pk.n_squared), pk.n_squared);
}

}  // namespace

uint64_t line_slot(const pir::QueryShape& shape, unsigned dim, uint64_t line, uint32_t k) {
  const uint64_t suffix = suffix_product(shape, dim);
  const uint64_t high = line / suffix;
  const uint64_t low = line % suffix;
  return (high * shape.dim(dim) + k) * suffix + low;
}

uint64_t line_of(const pir::QueryShape& shape, unsigned dim, uint64_t pid) {
  const uint64_t suffix = suffix_product(shape, dim);
  return pid / (suffix * shape.dim(dim)) * suffix + pid % suffix;
}

ValidQueryProof prove_valid_query(const pir::PirQuery& query, const pir::QueryWitness& witness,
                                  ByteSpan context, Rng& rng) {
  const auto& pk = query.pk;
  ValidQueryProof proof;
  for (unsigned i = 0; i < query.shape.d(); ++i) {
    std::vector<BinaryProof> row;
    BigInt root = 1;
    for (uint32_t j = 0; j < query.shape.dim(i); ++j) {
      Bytes ctx = sub_context(context, "vq-bit", i, j);
      row.push_back(prove_binary(pk, query.subqueries[i][j], witness.plaintexts[i][j],
                                 witness.randomness[i][j], ctx, rng));
      root = mod(root * witness.randomness[i][j], pk.n);
    }
    proof.slots.push_back(std::move(row));
    Bytes ctx = sub_context(context, "vq-sum", i);
    proof.sums.push_back(prove_nth_root(pk, sum_statement(query, i), root, ctx, rng));
  }
  return proof;
}

bool verify_valid_query(const pir::PirQuery& query, const ValidQueryProof& proof, ByteSpan context) {
  const auto& pk = query.pk;
  if (!query_well_formed(query)) return false;
  if (proof.slots.size() != query.shape.d() || proof.sums.size() != query.shape.d()) return false;
  for (unsigned i = 0; i < query.shape.d(); ++i) {
    if (proof.slots[i].size() != query.shape.dim(i)) return false;
    for (uint32_t j = 0; j < query.shape.dim(i); ++j) {
      if (!is_unit_mod_n2(pk, query.subqueries[i][j].value)) return false;
      Bytes ctx = sub_context(context, "vq-bit", i, j);
      if (!verify_binary(pk, query.subqueries[i][j], proof.slots[i][j], ctx)) return false;
    }
    Bytes ctx = sub_context(context, "vq-sum", i);
    if (!verify_nth_root(pk, sum_statement(query, i), proof.sums[i], ctx)) return false;
  }
  return true;
}

std::vector<BigInt> correspondence_statements(const pir::PirQuery& query, const crypto::Ciphertext& c,
                                              const std::vector<BigInt>& dataset, unsigned dim) {
  const auto& pk = query.pk;
  const uint64_t lines = query.shape.capacity() / query.shape.dim(dim);
  const BigInt c_inv = invert(c.value, pk.n_squared);
  std::vector<BigInt> out;
  out.reserve(lines);
  for (uint64_t j = 0; j < lines; ++j) {
    BigInt acc = 1;
    for (uint32_t k = 0; k < query.shape.dim(dim); ++k) {
      const BigInt& a = dataset[line_slot(query.shape, dim, j, k)];
      acc = mod(acc * powm(query.subqueries[dim][k].value, a, pk.n_squared), pk.n_squared);
    }
    out.push_back(mod(acc * c_inv, pk.n_squared));
  }
  return out;
}

CorrespondenceProof prove_correspondence(const pir::PirQuery& query, const pir::QueryWitness& witness,
                                         const crypto::Ciphertext& c, const BigInt& r_c,
                                         const std::vector<BigInt>& dataset, ByteSpan context, Rng& rng) {
  const auto& pk = query.pk;
  if (dataset.size() != query.shape.capacity()) throw std::invalid_argument("dataset size != capacity");
  const BigInt r_c_inv = invert(r_c, pk.n);
  CorrespondenceProof proof;
  for (unsigned i = 0; i < query.shape.d(); ++i) {
    const uint64_t real = line_of(query.shape, i, witness.pid);
    BigInt r_star = 1;
    for (uint32_t k = 0; k < query.shape.dim(i); ++k) {
      const BigInt& a = dataset[line_slot(query.shape, i, real, k)];
      r_star = mod(r_star * powm(witness.randomness[i][k], a, pk.n), pk.n);
    }
    Bytes ctx = sub_context(context, "corr", i);
    proof.dims.push_back(prove_or_nth_root(pk, correspondence_statements(query, c, dataset, i), real,
                                           mod(r_star * r_c_inv, pk.n), ctx, rng));
  }
  return proof;
}

bool verify_correspondence(const pir::PirQuery& query, const crypto::Ciphertext& c,
                           const std::vector<BigInt>& dataset, const CorrespondenceProof& proof,
                           ByteSpan context) {
  const auto& pk = query.pk;
  if (!query_well_formed(query) || !is_unit_mod_n2(pk, c.value)) return false;
  if (dataset.size() != query.shape.capacity() || proof.dims.size() != query.shape.d()) return false;
  std::set<BigInt> distinct;
  for (const auto& a : dataset) {
    if (a < 0 || a >= pk.n || !distinct.insert(a).second) return false;
  }
  for (unsigned i = 0; i < query.shape.d(); ++i) {
    for (const auto& q : query.subqueries[i]) {
      if (!is_unit_mod_n2(pk, q.value)) return false;
    }
    Bytes ctx = sub_context(context, "corr", i);
    if (!verify_or_nth_root(pk, correspondence_statements(query, c, dataset, i), proof.dims[i], ctx)) {
      return false;
    }
  }
  return true;
}

void ValidQueryProof::serialize(ByteWriter& w) const {
  w.put_u8(0x04);
  w.put_u8(static_cast<uint8_t>(slots.size()));
  for (const auto& row : slots) {
    w.put_u32(static_cast<uint32_t>(row.size()));
    for (const auto& p : row) p.serialize(w);
  }
  for (const auto& p : sums) p.serialize(w);
}

ValidQueryProof ValidQueryProof::deserialize(ByteReader& r) {
  if (r.u8() != 0x04) throw DecodeError("not a valid-query proof");
  ValidQueryProof out;
  const unsigned d = r.u8();
  for (unsigned i = 0; i < d; ++i) {
    const uint32_t m = r.u32();
    if (m > r.remaining()) throw DecodeError("valid-query proof truncated");
    std::vector<BinaryProof> row;
    for (uint32_t j = 0; j < m; ++j) row.push_back(BinaryProof::deserialize(r));
    out.slots.push_back(std::move(row));
  }
  for (unsigned i = 0; i < d; ++i) out.sums.push_back(NthRootProof::deserialize(r));
  return out;
}

void CorrespondenceProof::serialize(ByteWriter& w) const {
  w.put_u8(0x05);
  w.put_u8(static_cast<uint8_t>(dims.size()));
  for (const auto& p : dims) p.serialize(w);
}

CorrespondenceProof CorrespondenceProof::deserialize(ByteReader& r) {
  if (r.u8() != 0x05) throw DecodeError("not a correspondence proof");
  CorrespondenceProof out;
  const unsigned d = r.u8();
  for (unsigned i = 0; i < d; ++i) out.dims.push_back(OrNthRootProof::deserialize(r));
  return out;
}

}  // namespace octopus::zk
