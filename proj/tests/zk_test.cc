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

#include <gtest/gtest.h>

#include "octopus/pir/query.hpp"
#include "octopus/zk/paillier_proofs.hpp"
#include "octopus/zk/pedersen_proofs.hpp"
#include "octopus/zk/query_proofs.hpp"
#include "octopus/zk/transcript.hpp"
#include "test_util.hpp"

namespace octopus::zk {
namespace {

const crypto::PaillierKeyPair& keys() { return testing::paillier_keys(256); }
const crypto::PedersenParams& pp() { return testing::small_pedersen(); }
const Bytes kCtx = to_bytes("test-context");
const Bytes kOtherCtx = to_bytes("other-context");

TEST(Transcript, ChallengeMatchesReference) {
  Transcript t("octopus-test");
  t.absorb(to_bytes("abc")).absorb(BigInt(12345)).absorb_u64(7);
  EXPECT_EQ(t.challenge(), BigInt("902991031117256840026067180115334530"));
  Transcript u("octopus-test");
  u.absorb(to_bytes("ab")).absorb(to_bytes("c")).absorb(BigInt(12345)).absorb_u64(7);
  EXPECT_NE(u.challenge(), t.challenge());
  EXPECT_LT(t.challenge(), BigInt(1) << kChallengeBits);
  EXPECT_NE(sub_context(kCtx, "x", 1, 2), sub_context(kCtx, "x", 2, 1));
}

TEST(PlaintextKnowledge, CompleteSoundAndContextBound) {
  Rng rng(1);
  for (int i = 0; i < 30; ++i) {
    BigInt x = rng.below(keys().pk.n), r = rng.unit_mod(keys().pk.n);
    auto c = crypto::paillier_encrypt(keys().pk, x, r);
    auto proof = prove_plaintext_knowledge(keys().pk, c, x, r, kCtx, rng);
    ASSERT_TRUE(verify_plaintext_knowledge(keys().pk, c, proof, kCtx));
    ASSERT_FALSE(verify_plaintext_knowledge(keys().pk, c, proof, kOtherCtx));
    auto other = crypto::paillier_encrypt(keys().pk, x, rng);
    ASSERT_FALSE(verify_plaintext_knowledge(keys().pk, other, proof, kCtx));
    auto bad = prove_plaintext_knowledge(keys().pk, c, x + 1, r, kCtx, rng);
    ASSERT_FALSE(verify_plaintext_knowledge(keys().pk, c, bad, kCtx));
  }
}

TEST(NthRoot, OrProofAcceptsAnyRealBranch) {
  Rng rng(2);
  const auto& pk = keys().pk;
  std::vector<BigInt> stmts;
  std::vector<BigInt> roots;
  for (int j = 0; j < 4; ++j) {
    roots.push_back(rng.unit_mod(pk.n));
    stmts.push_back(powm(roots.back(), pk.n, pk.n_squared));
  }
  auto single = prove_nth_root(pk, stmts[0], roots[0], kCtx, rng);
  EXPECT_TRUE(verify_nth_root(pk, stmts[0], single, kCtx));
  EXPECT_FALSE(verify_nth_root(pk, stmts[1], single, kCtx));
  // Only branch 2 is an n-th residue; any other "real" branch fails.
  std::vector<BigInt> mixed(4);
  for (int j = 0; j < 4; ++j) mixed[j] = j == 2 ? stmts[j] : mod(stmts[j] * pk.generator(), pk.n_squared);
  auto ok = prove_or_nth_root(pk, mixed, 2, roots[2], kCtx, rng);
  EXPECT_TRUE(verify_or_nth_root(pk, mixed, ok, kCtx));
  auto wrong = prove_or_nth_root(pk, mixed, 1, roots[1], kCtx, rng);
  EXPECT_FALSE(verify_or_nth_root(pk, mixed, wrong, kCtx));
  ok.e[0] += 1;
  EXPECT_FALSE(verify_or_nth_root(pk, mixed, ok, kCtx));
}

TEST(Binary, ZeroAndOneAcceptedTwoRejected) {
  Rng rng(3);
  const auto& pk = keys().pk;
  for (int i = 0; i < 20; ++i) {
    for (int bit : {0, 1, 2}) {
      BigInt r = rng.unit_mod(pk.n);
      auto c = crypto::paillier_encrypt(pk, bit, r);
      auto proof = prove_binary(pk, c, bit, r, kCtx, rng);
      ASSERT_EQ(verify_binary(pk, c, proof, kCtx), bit != 2);
    }
  }
}

TEST(Binary, SerializationRoundTrip) {
  Rng rng(4);
  BigInt r = rng.unit_mod(keys().pk.n);
  auto c = crypto::paillier_encrypt(keys().pk, 1, r);
  auto proof = prove_binary(keys().pk, c, 1, r, kCtx, rng);
  ByteWriter w;
  proof.serialize(w);
  ByteReader rd(w.view());
  EXPECT_EQ(BinaryProof::deserialize(rd), proof);
  EXPECT_TRUE(rd.done());
}

TEST(ValidQuery, HonestAcceptedMalformedRejected) {
  Rng rng(5);
  pir::QueryShape shape({3, 2});
  for (uint64_t pid = 0; pid < 6; ++pid) {
    auto [q, w] = pir::gen_query(keys().pk, shape, pid, rng);
    auto proof = prove_valid_query(q, w, kCtx, rng);
    ASSERT_TRUE(verify_valid_query(q, proof, kCtx));
    ASSERT_FALSE(verify_valid_query(q, proof, kOtherCtx));
    ByteWriter bw;
    proof.serialize(bw);
    ByteReader br(bw.view());
    ASSERT_TRUE(verify_valid_query(q, ValidQueryProof::deserialize(br), kCtx));
  }
  std::vector<std::vector<std::vector<BigInt>>> bad = {
      {{1, 1, 0}, {1, 0}},  // two ones
      {{0, 0, 0}, {1, 0}},  // no one
      {{2, 0, 0}, {0, 1}},  // not a bit
      {{1, 0, 0}, {1, 1}},
  };
  for (const auto& pt : bad) {
    auto [q, w] = pir::gen_query_from_plaintexts(keys().pk, shape, pt, rng);
    auto proof = prove_valid_query(q, w, kCtx, rng);
    EXPECT_FALSE(verify_valid_query(q, proof, kCtx));
  }
}

class Correspondence : public ::testing::Test {
 protected:
  std::vector<BigInt> dataset(size_t m, Rng& rng) {
    std::vector<BigInt> out;
    while (out.size() < m) {
      BigInt v = rng.bits(64);
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
  }
};

TEST_F(Correspondence, AcceptsIffEncryptedSecretMatchesQueriedItem) {
  Rng rng(6);
  pir::QueryShape shape({2, 3});
  auto data = dataset(6, rng);
  for (uint64_t pid = 0; pid < 6; ++pid) {
    auto [q, w] = pir::gen_query(keys().pk, shape, pid, rng);
    for (uint64_t j = 0; j < 6; ++j) {
      BigInt r = rng.unit_mod(keys().pk.n);
      auto c = crypto::paillier_encrypt(keys().pk, data[j], r);
      auto proof = prove_correspondence(q, w, c, r, data, kCtx, rng);
      ASSERT_EQ(verify_correspondence(q, c, data, proof, kCtx), j == pid) << pid << " " << j;
    }
  }
}

TEST_F(Correspondence, RejectsBadDatasets) {
  Rng rng(7);
  pir::QueryShape shape({2, 2});
  auto data = dataset(4, rng);
  auto [q, w] = pir::gen_query(keys().pk, shape, 1, rng);
  BigInt r = rng.unit_mod(keys().pk.n);
  auto c = crypto::paillier_encrypt(keys().pk, data[1], r);
  auto proof = prove_correspondence(q, w, c, r, data, kCtx, rng);
  ASSERT_TRUE(verify_correspondence(q, c, data, proof, kCtx));
  EXPECT_FALSE(verify_correspondence(q, c, data, proof, kOtherCtx));
  auto dup = data;
  dup[3] = dup[0];
  EXPECT_FALSE(verify_correspondence(q, c, dup, proof, kCtx));
  auto shorter = data;
  shorter.pop_back();
  EXPECT_FALSE(verify_correspondence(q, c, shorter, proof, kCtx));
  auto big = data;
  big[2] = keys().pk.n;
  EXPECT_FALSE(verify_correspondence(q, c, big, proof, kCtx));
  EXPECT_EQ(line_of(shape, 0, 3), 1u);
  EXPECT_EQ(line_slot(shape, 0, 1, 1), 3u);
}

TEST(Opening, CompleteAndSound) {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    BigInt x = rng.below(pp().q), r = rng.below(pp().q);
    auto c = crypto::pedersen_commit(pp(), x, r);
    auto proof = prove_opening(pp(), c, x, r, kCtx, rng);
    ASSERT_TRUE(verify_opening(pp(), c, proof, kCtx));
    ASSERT_FALSE(verify_opening(pp(), c, proof, kOtherCtx));
    ASSERT_FALSE(verify_opening(pp(), c, prove_opening(pp(), c, x, r + 1, kCtx, rng), kCtx));
  }
}

TEST(Bit, CompleteAndSound) {
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    for (int b : {0, 1, 2}) {
      BigInt r = rng.below(pp().q);
      auto c = crypto::pedersen_commit(pp(), b, r);
      ASSERT_EQ(verify_bit(pp(), c, prove_bit(pp(), c, b, r, kCtx, rng), kCtx), b != 2);
    }
  }
}

TEST(Multiplication, CompleteAndSound) {
  Rng rng(10);
  for (int i = 0; i < 20; ++i) {
    BigInt x = rng.bits(30), y = rng.bits(30), rx = rng.below(pp().q), ry = rng.below(pp().q), rz = rng.below(pp().q);
    auto cx = crypto::pedersen_commit(pp(), x, rx), cy = crypto::pedersen_commit(pp(), y, ry);
    auto cz = crypto::pedersen_commit(pp(), x * y, rz);
    auto proof = prove_multiplication(pp(), cx, cy, cz, x, rx, ry, rz, kCtx, rng);
    ASSERT_TRUE(verify_multiplication(pp(), cx, cy, cz, proof, kCtx));
    ASSERT_FALSE(verify_multiplication(pp(), cx, cy, cz, proof, kOtherCtx));
    auto cz_bad = crypto::pedersen_commit(pp(), x * y + 1, rz);
    auto bad = prove_multiplication(pp(), cx, cy, cz_bad, x, rx, ry, rz, kCtx, rng);
    ASSERT_FALSE(verify_multiplication(pp(), cx, cy, cz_bad, bad, kCtx));
  }
}

TEST(Range, BoundariesAndSerialization) {
  Rng rng(11);
  const unsigned L = 16;
  for (BigInt x : {BigInt(0), BigInt(1), BigInt(65535), BigInt(65536), BigInt(-1)}) {
    BigInt r = rng.below(pp().q);
    auto c = crypto::pedersen_commit(pp(), x, r);
    auto proof = prove_range(pp(), c, x, r, L, kCtx, rng);
    bool in_range = x >= 0 && x < 65536;
    EXPECT_EQ(verify_range(pp(), c, L, proof, kCtx), in_range) << x.get_str();
    if (in_range) {
      ByteWriter w;
      proof.serialize(w, pp());
      ByteReader rd(w.view());
      EXPECT_TRUE(verify_range(pp(), c, L, RangeProof::deserialize(rd, pp()), kCtx));
      EXPECT_FALSE(verify_range(pp(), c, L - 1, proof, kCtx));
    }
  }
  EXPECT_EQ(max_range_bits(pp()), 64u);
  EXPECT_EQ(max_range_bits(crypto::PedersenParams::toy()), 2u);
}

TEST(Comparison, ProvesTheTrueSide) {
  Rng rng(12);
  const unsigned L = 20;
  const BigInt t = 1000;
  for (BigInt x : {BigInt(0), BigInt(999), BigInt(1000), BigInt(1001), BigInt(500000)}) {
    BigInt r = rng.below(pp().q);
    auto c = crypto::pedersen_commit(pp(), x, r);
    auto proof = prove_comparison(pp(), c, x, r, t, L, kCtx, rng);
    auto claim = verify_comparison(pp(), c, t, L, proof, kCtx);
    ASSERT_TRUE(claim.has_value()) << x.get_str();
    EXPECT_EQ(*claim, x < t);
    EXPECT_FALSE(verify_comparison(pp(), c, t, L, proof, kOtherCtx).has_value());
    // Flipping the claim invalidates the proof.
    proof.claim_less = !proof.claim_less;
    EXPECT_FALSE(verify_comparison(pp(), c, t, L, proof, kCtx).has_value());
  }
}

}  // namespace
}  // namespace octopus::zk
