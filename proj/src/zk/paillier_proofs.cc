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

#include "octopus/zk/paillier_proofs.hpp"

namespace octopus::zk {
namespace {

constexpr size_t kMaxBranches = 1u << 20;

Transcript statement_transcript(std::string_view domain, const crypto::PaillierPublicKey& pk,
                                ByteSpan context) {
  Transcript t(domain);
  t.absorb(context);
  t.absorb(pk.n);
  return t;
}

bool in_range(const BigInt& x, const BigInt& bound) { return x >= 0 && x < bound; }

void write_vec(ByteWriter& w, const std::vector<BigInt>& v) {
  w.put_u32(static_cast<uint32_t>(v.size()));
  for (const auto& x : v) write_int(w, x);
}

std::vector<BigInt> read_vec(ByteReader& r) {
  uint32_t n = r.u32();
  if (n > kMaxBranches) throw DecodeError("proof vector too long");
  std::vector<BigInt> out;
  out.reserve(n);
  for (uint32_t i = 0; i < n; ++i) out.push_back(read_int(r));
  return out;
}

}  // namespace

bool is_unit_mod_n2(const crypto::PaillierPublicKey& pk, const BigInt& x) {
  return x > 0 && x < pk.n_squared && gcd(x, pk.n) == 1;
}

PlaintextKnowledgeProof prove_plaintext_knowledge(const crypto::PaillierPublicKey& pk,
                                                  const crypto::Ciphertext& c, const BigInt& x,
                                                  const BigInt& r, ByteSpan context, Rng& rng) {
  BigInt a = rng.below(pk.n);
  BigInt s = rng.unit_mod(pk.n);
  BigInt T = mod(powm(pk.generator(), a, pk.n_squared) * powm(s, pk.n, pk.n_squared), pk.n_squared);
  BigInt e = statement_transcript("octopus/pk-knowledge", pk, context).absorb(c.value).absorb(T).challenge();
  BigInt z = mod(a + e * x, pk.n);
  BigInt w = mod(s * powm(r, e, pk.n), pk.n);
  return PlaintextKnowledgeProof{T, z, w};
}

bool verify_plaintext_knowledge(const crypto::PaillierPublicKey& pk, const crypto::Ciphertext& c,
                                const PlaintextKnowledgeProof& proof, ByteSpan context) {
  if (!is_unit_mod_n2(pk, c.value) || !is_unit_mod_n2(pk, proof.T)) return false;
  if (!in_range(proof.z, pk.n) || !in_range(proof.w, pk.n) || gcd(proof.w, pk.n) != 1) return false;
  BigInt e = statement_transcript("octopus/pk-knowledge", pk, context).absorb(c.value).absorb(proof.T).challenge();
  BigInt lhs = mod(powm(pk.generator(), proof.z, pk.n_squared) * powm(proof.w, pk.n, pk.n_squared), pk.n_squared);
  BigInt rhs = mod(proof.T * powm(c.value, e, pk.n_squared), pk.n_squared);
  return lhs == rhs;
}

NthRootProof prove_nth_root(const crypto::PaillierPublicKey& pk, const BigInt& stmt, const BigInt& v,
                            ByteSpan context, Rng& rng) {
  BigInt u = rng.unit_mod(pk.n);
  BigInt T = powm(u, pk.n, pk.n_squared);
  BigInt e = statement_transcript("octopus/nth-root", pk, context).absorb(stmt).absorb(T).challenge();
  return NthRootProof{T, mod(u * powm(v, e, pk.n), pk.n)};
}

bool verify_nth_root(const crypto::PaillierPublicKey& pk, const BigInt& stmt, const NthRootProof& proof,
                     ByteSpan context) {
  if (!is_unit_mod_n2(pk, stmt) || !is_unit_mod_n2(pk, proof.T)) return false;
  if (!in_range(proof.z, pk.n) || gcd(proof.z, pk.n) != 1) return false;
  BigInt e = statement_transcript("octopus/nth-root", pk, context).absorb(stmt).absorb(proof.T).challenge();
  return powm(proof.z, pk.n, pk.n_squared) == mod(proof.T * powm(stmt, e, pk.n_squared), pk.n_squared);
}

OrNthRootProof prove_or_nth_root(const crypto::PaillierPublicKey& pk, const std::vector<BigInt>& stmts,
                                 size_t real, const BigInt& v, ByteSpan context, Rng& rng) {
  const size_t k = stmts.size();
  if (k == 0 || real >= k) throw std::invalid_argument("OR proof needs a real branch");
  OrNthRootProof proof{std::vector<BigInt>(k), std::vector<BigInt>(k), std::vector<BigInt>(k)};
  BigInt u = rng.unit_mod(pk.n);
  for (size_t i = 0; i < k; ++i) {
    if (i == real) {
      proof.T[i] = powm(u, pk.n, pk.n_squared);
      continue;
    }
    proof.e[i] = random_challenge(rng);
    proof.z[i] = rng.unit_mod(pk.n);
    // T = z^n * stmt^-e; a statement that is not a unit cannot be simulated.
    BigInt stmt_inv = gcd(stmts[i], pk.n) == 1 ? invert(mod(stmts[i], pk.n_squared), pk.n_squared) : BigInt(1);
    proof.T[i] = mod(powm(proof.z[i], pk.n, pk.n_squared) * powm(stmt_inv, proof.e[i], pk.n_squared), pk.n_squared);
  }
  Transcript t = statement_transcript("octopus/or-nth-root", pk, context);
  t.absorb_u64(k);
  for (const auto& s : stmts) t.absorb(mod(s, pk.n_squared));
  for (const auto& T : proof.T) t.absorb(T);
  BigInt e_real = t.challenge();
  for (size_t i = 0; i < k; ++i) {
    if (i != real) e_real ^= proof.e[i];
  }
  proof.e[real] = e_real;
  proof.z[real] = mod(u * powm(v, e_real, pk.n), pk.n);
  return proof;
}

bool verify_or_nth_root(const crypto::PaillierPublicKey& pk, const std::vector<BigInt>& stmts,
                        const OrNthRootProof& proof, ByteSpan context) {
  const size_t k = stmts.size();
  if (k == 0 || proof.T.size() != k || proof.e.size() != k || proof.z.size() != k) return false;
  const BigInt bound = BigInt(1) << kChallengeBits;
  Transcript t = statement_transcript("octopus/or-nth-root", pk, context);
  t.absorb_u64(k);
  for (const auto& s : stmts) {
    if (!is_unit_mod_n2(pk, s)) return false;
    t.absorb(s);
  }
  BigInt xor_sum = 0;
  for (size_t i = 0; i < k; ++i) {
    if (!is_unit_mod_n2(pk, proof.T[i]) || !in_range(proof.e[i], bound)) return false;
    if (!in_range(proof.z[i], pk.n) || gcd(proof.z[i], pk.n) != 1) return false;
    t.absorb(proof.T[i]);
    xor_sum ^= proof.e[i];
  }
  if (xor_sum != t.challenge()) return false;
  for (size_t i = 0; i < k; ++i) {
    BigInt lhs = powm(proof.z[i], pk.n, pk.n_squared);
    BigInt rhs = mod(proof.T[i] * powm(stmts[i], proof.e[i], pk.n_squared), pk.n_squared);
    if (lhs != rhs) return false;
  }
  return true;
}

namespace {

std::vector<BigInt> binary_statements(const crypto::PaillierPublicKey& pk, const crypto::Ciphertext& c) {
  if (!is_unit_mod_n2(pk, c.value)) return {c.value, c.value};
  BigInt g_inv = invert(pk.generator(), pk.n_squared);
  return {c.value, mod(c.value * g_inv, pk.n_squared)};
}

}  // namespace

BinaryProof prove_binary(const crypto::PaillierPublicKey& pk, const crypto::Ciphertext& c,
                         const BigInt& bit, const BigInt& r, ByteSpan context, Rng& rng) {
  return prove_or_nth_root(pk, binary_statements(pk, c), bit == 1 ? 1 : 0, r, context, rng);
}

bool verify_binary(const crypto::PaillierPublicKey& pk, const crypto::Ciphertext& c,
                   const BinaryProof& proof, ByteSpan context) {
  if (proof.T.size() != 2) return false;
  return verify_or_nth_root(pk, binary_statements(pk, c), proof, context);
}

void PlaintextKnowledgeProof::serialize(ByteWriter& w) const {
  w.put_u8(0x01);
  write_int(w, T);
  write_int(w, z);
  write_int(w, this->w);
}

PlaintextKnowledgeProof PlaintextKnowledgeProof::deserialize(ByteReader& r) {
  if (r.u8() != 0x01) throw DecodeError("not a plaintext-knowledge proof");
  PlaintextKnowledgeProof p;
  p.T = read_int(r);
  p.z = read_int(r);
  p.w = read_int(r);
  return p;
}

void NthRootProof::serialize(ByteWriter& w) const {
  w.put_u8(0x02);
  write_int(w, T);
  write_int(w, z);
}

NthRootProof NthRootProof::deserialize(ByteReader& r) {
  if (r.u8() != 0x02) throw DecodeError("not an n-th root proof");
  NthRootProof p;
  p.T = read_int(r);
  p.z = read_int(r);
  return p;
}

void OrNthRootProof::serialize(ByteWriter& w) const {
  w.put_u8(0x03);
  write_vec(w, T);
  write_vec(w, e);
  write_vec(w, z);
}

OrNthRootProof OrNthRootProof::deserialize(ByteReader& r) {
  if (r.u8() != 0x03) throw DecodeError("not an OR proof");
  OrNthRootProof p;
  p.T = read_vec(r);
  p.e = read_vec(r);
  p.z = read_vec(r);
  return p;
}

}  // namespace octopus::zk
