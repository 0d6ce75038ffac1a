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

#include "octopus/zk/pedersen_proofs.hpp"

namespace octopus::zk {
namespace {

using crypto::Commitment;
using crypto::PedersenParams;

Transcript group_transcript(std::string_view domain, const PedersenParams& params, ByteSpan context) {
  Transcript t(domain);
  t.absorb(context);
  t.absorb(params.p).absorb(params.q).absorb(params.g).absorb(params.h);
  return t;
}

BigInt mulp(const PedersenParams& params, const BigInt& a, const BigInt& b) { return mod(a * b, params.p); }

bool scalar(const PedersenParams& params, const BigInt& x) { return x >= 0 && x < params.q; }

bool element(const PedersenParams& params, const BigInt& x) { return crypto::is_group_element(params, x); }

// c and c * g^-1.
std::pair<BigInt, BigInt> bit_statements(const PedersenParams& params, const Commitment& c) {
  return {c.value, mulp(params, c.value, invert(params.g, params.p))};
}

BigInt shifted(const PedersenParams& params, const Commitment& c, const BigInt& k) {
  // c * g^k, k possibly negative.
  return mulp(params, c.value, powm(params.g, mod(k, params.q), params.p));
}

// Bit proofs are bound to the commitment being decomposed.
Bytes bit_context(ByteSpan context, const Commitment& c, unsigned j) {
  Bytes ctx = sub_context(context, "range-bit", j);
  Bytes cb = to_bytes_be(c.value);
  ctx.insert(ctx.end(), cb.begin(), cb.end());
  return ctx;
}

}  // namespace

unsigned max_range_bits(const PedersenParams& params) {
  size_t bits = bit_length(params.q);
  if (bits < 3) return 0;
  return static_cast<unsigned>(std::min<size_t>(64, bits - 2));
}

OpeningProof prove_opening(const PedersenParams& params, const Commitment& c, const BigInt& x, const BigInt& r,
                           ByteSpan context, Rng& rng) {
  BigInt a = rng.below(params.q), b = rng.below(params.q);
  BigInt T = crypto::pedersen_commit(params, a, b).value;
  BigInt e = group_transcript("octopus/ped-open", params, context).absorb(c.value).absorb(T).challenge();
  return OpeningProof{T, mod(a + e * x, params.q), mod(b + e * r, params.q)};
}

bool verify_opening(const PedersenParams& params, const Commitment& c, const OpeningProof& proof,
                    ByteSpan context) {
  if (!element(params, c.value) || !element(params, proof.T)) return false;
  if (!scalar(params, proof.z_x) || !scalar(params, proof.z_r)) return false;
  BigInt e = group_transcript("octopus/ped-open", params, context).absorb(c.value).absorb(proof.T).challenge();
  BigInt lhs = crypto::pedersen_commit(params, proof.z_x, proof.z_r).value;
  return lhs == mulp(params, proof.T, powm(c.value, e, params.p));
}

BitProof prove_bit(const PedersenParams& params, const Commitment& c, const BigInt& bit, const BigInt& r,
                   ByteSpan context, Rng& rng) {
  auto [y0, y1] = bit_statements(params, c);
  const bool one = bit == 1;
  BitProof proof;
  BigInt a = rng.below(params.q);
  BigInt e_sim = random_challenge(rng);
  BigInt z_sim = rng.below(params.q);
  const BigInt& y_sim = one ? y0 : y1;
  // Simulated branch: T = h^z * Y^-e.
  BigInt T_sim = mulp(params, powm(params.h, z_sim, params.p), powm(y_sim, mod(-e_sim, params.q), params.p));
  BigInt T_real = powm(params.h, a, params.p);
  proof.T0 = one ? T_sim : T_real;
  proof.T1 = one ? T_real : T_sim;
  BigInt e = group_transcript("octopus/ped-bit", params, context)
                 .absorb(c.value).absorb(proof.T0).absorb(proof.T1).challenge();
  BigInt e_real = e ^ e_sim;
  BigInt z_real = mod(a + mod(e_real, params.q) * r, params.q);
  if (one) {
    proof.e0 = e_sim, proof.z0 = z_sim, proof.e1 = e_real, proof.z1 = z_real;
  } else {
    proof.e0 = e_real, proof.z0 = z_real, proof.e1 = e_sim, proof.z1 = z_sim;
  }
  return proof;
}

bool verify_bit(const PedersenParams& params, const Commitment& c, const BitProof& proof, ByteSpan context) {
  if (!element(params, c.value) || !element(params, proof.T0) || !element(params, proof.T1)) return false;
  if (!scalar(params, proof.z0) || !scalar(params, proof.z1)) return false;
  const BigInt bound = BigInt(1) << kChallengeBits;
  if (proof.e0 < 0 || proof.e0 >= bound || proof.e1 < 0 || proof.e1 >= bound) return false;
  BigInt e = group_transcript("octopus/ped-bit", params, context)
                 .absorb(c.value).absorb(proof.T0).absorb(proof.T1).challenge();
  if ((proof.e0 ^ proof.e1) != e) return false;
  auto [y0, y1] = bit_statements(params, c);
  return powm(params.h, proof.z0, params.p) == mulp(params, proof.T0, powm(y0, proof.e0, params.p)) &&
         powm(params.h, proof.z1, params.p) == mulp(params, proof.T1, powm(y1, proof.e1, params.p));
}

MultiplicationProof prove_multiplication(const PedersenParams& params, const Commitment& c_x,
                                         const Commitment& c_y, const Commitment& c_z, const BigInt& x,
                                         const BigInt& r_x, const BigInt& r_y, const BigInt& r_z,
                                         ByteSpan context, Rng& rng) {
  BigInt a = rng.below(params.q), b = rng.below(params.q), b2 = rng.below(params.q);
  MultiplicationProof proof;
  proof.T1 = crypto::pedersen_commit(params, a, b).value;
  proof.T2 = mulp(params, powm(c_y.value, a, params.p), powm(params.h, b2, params.p));
  BigInt e = group_transcript("octopus/ped-mul", params, context)
                 .absorb(c_x.value).absorb(c_y.value).absorb(c_z.value)
                 .absorb(proof.T1).absorb(proof.T2).challenge();
  BigInt r_prime = mod(r_z - x * r_y, params.q);
  proof.z_x = mod(a + e * x, params.q);
  proof.z_rx = mod(b + e * r_x, params.q);
  proof.z_r = mod(b2 + e * r_prime, params.q);
  return proof;
}

bool verify_multiplication(const PedersenParams& params, const Commitment& c_x, const Commitment& c_y,
                           const Commitment& c_z, const MultiplicationProof& proof, ByteSpan context) {
  for (const BigInt* v : {&c_x.value, &c_y.value, &c_z.value, &proof.T1, &proof.T2}) {
    if (!element(params, *v)) return false;
  }
  for (const BigInt* v : {&proof.z_x, &proof.z_rx, &proof.z_r}) {
    if (!scalar(params, *v)) return false;
  }
  BigInt e = group_transcript("octopus/ped-mul", params, context)
                 .absorb(c_x.value).absorb(c_y.value).absorb(c_z.value)
                 .absorb(proof.T1).absorb(proof.T2).challenge();
  bool first = crypto::pedersen_commit(params, proof.z_x, proof.z_rx).value ==
               mulp(params, proof.T1, powm(c_x.value, e, params.p));
  bool second = mulp(params, powm(c_y.value, proof.z_x, params.p), powm(params.h, proof.z_r, params.p)) ==
                mulp(params, proof.T2, powm(c_z.value, e, params.p));
  return first && second;
}

RangeProof prove_range(const PedersenParams& params, const Commitment& c, const BigInt& x, const BigInt& r,
                       unsigned L, ByteSpan context, Rng& rng) {
  if (L == 0) throw std::invalid_argument("range proof needs at least one bit");
  BigInt xr = mod(x, params.q);
  std::vector<BigInt> rand(L);
  BigInt rest = 0;
  for (unsigned j = 1; j < L; ++j) {
    rand[j] = rng.below(params.q);
    rest += (BigInt(1) << j) * rand[j];
  }
  rand[0] = mod(r - rest, params.q);
  RangeProof proof;
  for (unsigned j = 0; j < L; ++j) {
    BigInt bit = mpz_tstbit(xr.get_mpz_t(), j);
    proof.bits.push_back(crypto::pedersen_commit(params, bit, rand[j]));
  }
  for (unsigned j = 0; j < L; ++j) {
    BigInt bit = mpz_tstbit(xr.get_mpz_t(), j);
    Bytes ctx = bit_context(context, c, j);
    proof.proofs.push_back(prove_bit(params, proof.bits[j], bit, rand[j], ctx, rng));
  }
  return proof;
}

bool verify_range(const PedersenParams& params, const Commitment& c, unsigned L, const RangeProof& proof,
                  ByteSpan context) {
  if (L == 0 || proof.bits.size() != L || proof.proofs.size() != L) return false;
  if (!element(params, c.value)) return false;
  BigInt acc = 1;
  for (unsigned j = 0; j < L; ++j) {
    if (!element(params, proof.bits[j].value)) return false;
    acc = mulp(params, acc, powm(proof.bits[j].value, BigInt(1) << j, params.p));
  }
  if (acc != c.value) return false;
  for (unsigned j = 0; j < L; ++j) {
    Bytes ctx = bit_context(context, c, j);
    if (!verify_bit(params, proof.bits[j], proof.proofs[j], ctx)) return false;
  }
  return true;
}

ComparisonProof prove_comparison(const PedersenParams& params, const Commitment& c, const BigInt& x,
                                 const BigInt& r, const BigInt& t, unsigned L, ByteSpan context, Rng& rng) {
  ComparisonProof proof;
  proof.claim_less = x < t;
  if (proof.claim_less) {
    // g^(t-1) c^-1 commits to t-1-x with randomness -r.
    Commitment upper{mulp(params, powm(params.g, mod(t - 1, params.q), params.p), invert(c.value, params.p))};
    proof.ranges.push_back(prove_range(params, c, x, r, L, sub_context(context, "lt-low"), rng));
    proof.ranges.push_back(prove_range(params, upper, t - 1 - x, -r, L, sub_context(context, "lt-high"), rng));
  } else {
    Commitment diff{shifted(params, c, -t)};
    proof.ranges.push_back(prove_range(params, diff, x - t, r, L, sub_context(context, "ge"), rng));
  }
  return proof;
}

std::optional<bool> verify_comparison(const PedersenParams& params, const Commitment& c, const BigInt& t,
                                      unsigned L, const ComparisonProof& proof, ByteSpan context) {
  if (!element(params, c.value) || t < 0) return std::nullopt;
  if (proof.claim_less) {
    if (proof.ranges.size() != 2) return std::nullopt;
    Commitment upper{mulp(params, powm(params.g, mod(t - 1, params.q), params.p), invert(c.value, params.p))};
    if (!verify_range(params, c, L, proof.ranges[0], sub_context(context, "lt-low"))) return std::nullopt;
    if (!verify_range(params, upper, L, proof.ranges[1], sub_context(context, "lt-high"))) return std::nullopt;
    return true;
  }
  if (proof.ranges.size() != 1) return std::nullopt;
  Commitment diff{shifted(params, c, -t)};
  if (!verify_range(params, diff, L, proof.ranges[0], sub_context(context, "ge"))) return std::nullopt;
  return false;
}

void OpeningProof::serialize(ByteWriter& w) const {
  w.put_u8(0x11);
  write_int(w, T);
  write_int(w, z_x);
  write_int(w, z_r);
}

OpeningProof OpeningProof::deserialize(ByteReader& r) {
  if (r.u8() != 0x11) throw DecodeError("not an opening proof");
  OpeningProof p;
  p.T = read_int(r);
  p.z_x = read_int(r);
  p.z_r = read_int(r);
  return p;
}

void BitProof::serialize(ByteWriter& w) const {
  w.put_u8(0x12);
  for (const BigInt* v : {&T0, &T1, &e0, &e1, &z0, &z1}) write_int(w, *v);
}

BitProof BitProof::deserialize(ByteReader& r) {
  if (r.u8() != 0x12) throw DecodeError("not a bit proof");
  BitProof p;
  for (BigInt* v : {&p.T0, &p.T1, &p.e0, &p.e1, &p.z0, &p.z1}) *v = read_int(r);
  return p;
}

void MultiplicationProof::serialize(ByteWriter& w) const {
  w.put_u8(0x13);
  for (const BigInt* v : {&T1, &T2, &z_x, &z_rx, &z_r}) write_int(w, *v);
}

MultiplicationProof MultiplicationProof::deserialize(ByteReader& r) {
  if (r.u8() != 0x13) throw DecodeError("not a multiplication proof");
  MultiplicationProof p;
  for (BigInt* v : {&p.T1, &p.T2, &p.z_x, &p.z_rx, &p.z_r}) *v = read_int(r);
  return p;
}

void RangeProof::serialize(ByteWriter& w, const PedersenParams& params) const {
  w.put_u8(0x14);
  w.put_u16(static_cast<uint16_t>(bits.size()));
  for (const auto& c : bits) crypto::write_commitment(w, params, c);
  for (const auto& p : proofs) p.serialize(w);
}

RangeProof RangeProof::deserialize(ByteReader& r, const PedersenParams& params) {
  if (r.u8() != 0x14) throw DecodeError("not a range proof");
  RangeProof out;
  const uint16_t L = r.u16();
  for (uint16_t j = 0; j < L; ++j) out.bits.push_back(crypto::read_commitment(r, params));
  for (uint16_t j = 0; j < L; ++j) out.proofs.push_back(BitProof::deserialize(r));
  return out;
}

void ComparisonProof::serialize(ByteWriter& w, const PedersenParams& params) const {
  w.put_u8(0x15);
  w.put_u8(claim_less ? 1 : 0);
  w.put_u8(static_cast<uint8_t>(ranges.size()));
  for (const auto& p : ranges) p.serialize(w, params);
}

ComparisonProof ComparisonProof::deserialize(ByteReader& r, const PedersenParams& params) {
  if (r.u8() != 0x15) throw DecodeError("not a comparison proof");
  ComparisonProof out;
  out.claim_less = r.u8() != 0;
  const uint8_t n = r.u8();
  for (uint8_t i = 0; i < n; ++i) out.ranges.push_back(RangeProof::deserialize(r, params));
  return out;
}

}  // namespace octopus::zk
