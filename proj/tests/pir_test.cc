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

#include "octopus/pir/classify.hpp"
#include "octopus/pir/respond.hpp"
#include "octopus/pir/sizes.hpp"
#include "test_util.hpp"

namespace octopus::pir {
namespace {

using crypto::Digits;

const crypto::PaillierKeyPair& keys() { return testing::paillier_keys(256); }

// Peels until a zero string or the payload digits. Returns the number of
// layers removed and the digits found there; intermediate layers are
// ciphertexts under fresh randomness and are not comparable.
std::pair<size_t, Digits> peel_all(const PirResponse& resp) {
  const auto& sk = keys().sk;
  std::vector<Digits> out;
  crypto::LayeredCiphertext cur = resp.body;
  while (cur.layer > 0) {
    Digits d = crypto::peel_layer(sk, cur);
    out.push_back(d);
    bool zero = std::all_of(d.begin(), d.end(), [](const BigInt& x) { return x == 0; });
    if (cur.layer == 1 || zero) break;
    cur.chunks = crypto::digits_to_chunks(keys().pk, d);
    cur.layer = static_cast<uint8_t>(cur.layer - 1);
  }
  return {out.size(), out.back()};
}

SparseDatabase random_db(const QueryShape& shape, uint32_t width, double fill, Rng& rng) {
  SparseDatabase db(shape, width);
  for (uint64_t pid = 0; pid < shape.capacity(); ++pid) {
    if (rng.uniform01() < fill) {
      Bytes payload = rng.bytes(width);
      payload[0] |= 1;
      db.put(pid, payload);
    }
  }
  return db;
}

ResponseType type_of(const PirResponse& resp, unsigned d, size_t width) {
  return peel_response(keys().sk, resp, d, width).type;
}

TEST(Shape, CoordinatesRoundTrip) {
  QueryShape shape({3, 4});
  EXPECT_EQ(shape.capacity(), 12u);
  EXPECT_EQ(shape.total_slots(), 7u);
  EXPECT_EQ(pid_to_coords(shape, 6), (std::vector<uint32_t>{1, 2}));
  for (uint64_t pid = 0; pid < 12; ++pid) EXPECT_EQ(coords_to_pid(shape, pid_to_coords(shape, pid)), pid);
  EXPECT_THROW(pid_to_coords(shape, 12), std::out_of_range);
  EXPECT_THROW(QueryShape({1, 4}), std::invalid_argument);
  EXPECT_THROW(QueryShape(std::vector<uint32_t>{}), std::invalid_argument);
  ByteWriter w;
  shape.serialize(w);
  EXPECT_EQ(w.size(), shape.encoded_size());
  ByteReader r(w.view());
  EXPECT_EQ(QueryShape::deserialize(r), shape);
}

TEST(Query, SubqueriesAreUnitVectors) {
  Rng rng(1);
  QueryShape shape({3, 4});
  auto [q, w] = gen_query(keys().pk, shape, 6, rng);
  ASSERT_EQ(q.subqueries.size(), 2u);
  auto coords = pid_to_coords(shape, 6);
  for (unsigned i = 0; i < 2; ++i) {
    for (uint32_t j = 0; j < shape.dim(i); ++j) {
      BigInt expect = j == coords[i] ? 1 : 0;
      EXPECT_EQ(keys().sk.decrypt(q.subqueries[i][j]), expect);
      EXPECT_EQ(w.plaintexts[i][j], expect);
      EXPECT_EQ(crypto::paillier_encrypt(keys().pk, w.plaintexts[i][j], w.randomness[i][j]), q.subqueries[i][j]);
    }
  }
  ByteWriter bw;
  write_query(bw, q);
  EXPECT_EQ(bw.size(), query_encoded_size(keys().pk, shape));
  ByteReader br(bw.view());
  PirQuery back = read_query(br, keys().pk);
  EXPECT_EQ(back.subqueries, q.subqueries);
}

TEST(Database, PutFindAndSerialize) {
  QueryShape shape({2, 3});
  SparseDatabase db(shape, 4);
  db.put(5, Bytes{1, 2, 3, 4});
  db.put(0, Bytes{9, 9, 9, 9});
  EXPECT_THROW(db.put(6, Bytes{1, 2, 3, 4}), std::out_of_range);
  EXPECT_THROW(db.put(1, Bytes{1, 2}), std::invalid_argument);
  ASSERT_NE(db.find(5), nullptr);
  EXPECT_EQ(db.find(1), nullptr);
  SparseDatabase back = SparseDatabase::deserialize(db.serialize());
  EXPECT_EQ(back.entries(), db.entries());
  EXPECT_EQ(back.shape(), shape);
  DenseDatabase dense = to_dense(db);
  ASSERT_EQ(dense.size(), 6u);
  EXPECT_TRUE(dense[0] && dense[5]);
  EXPECT_FALSE(dense[3]);
}

class SparseVsNaive : public ::testing::TestWithParam<std::vector<uint32_t>> {};

TEST_P(SparseVsNaive, DecryptIdenticallyForEveryReplaceIteration) {
  QueryShape shape(GetParam());
  Rng rng(shape.capacity());
  const uint32_t width = 20;
  for (unsigned s = kNoReplacement; s <= shape.d(); ++s) {
    for (int trial = 0; trial < 6; ++trial) {
      SparseDatabase db = random_db(shape, width, trial == 0 ? 0.0 : 0.3, rng);
      uint64_t pid = rng.below(shape.capacity());
      auto [q, w] = gen_query(keys().pk, shape, pid, rng);
      RespondResult sparse = sparse_respond(q, db, s, rng);
      RespondResult naive = naive_respond(q, to_dense(db), width, s, rng);
      ASSERT_EQ(sparse.index(), naive.index());
      if (std::holds_alternative<EmptySentinel>(sparse)) {
        EXPECT_EQ(s, kNoReplacement);
        EXPECT_EQ(db.size(), 0u);
        continue;
      }
      const auto& a = std::get<PirResponse>(sparse);
      const auto& b = std::get<PirResponse>(naive);
      EXPECT_NE(a.body.chunks, b.body.chunks);  // independent masks
      ASSERT_EQ(peel_all(a), peel_all(b)) << "s=" << s << " pid=" << pid;
      if (const Bytes* item = db.find(pid)) {
        EXPECT_EQ(crypto::layered_decrypt(keys().sk, a.body, width), *item);
      } else {
        EXPECT_NE(type_of(a, shape.d(), width), ResponseType::type0());
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Shapes, SparseVsNaive,
                         ::testing::Values(std::vector<uint32_t>{2, 3}, std::vector<uint32_t>{2, 2, 2},
                                           std::vector<uint32_t>{5}));

TEST(SparseRespond, FirstIterationWorkIsProportionalToEntries) {
  Rng rng(2);
  QueryShape shape({4, 4, 4});
  for (int trial = 0; trial < 3; ++trial) {
    SparseDatabase db = random_db(shape, 8, 0.1 + 0.2 * trial, rng);
    auto [q, w] = gen_query(keys().pk, shape, 0, rng);
    RespondStats stats;
    sparse_respond(q, db, 1, rng, &stats);
    ASSERT_EQ(stats.scale_ops.size(), 3u);
    EXPECT_EQ(stats.scale_ops[0], db.size());
    // After the replacement every column of iteration 1 is present.
    EXPECT_EQ(stats.scale_ops[1], 16u);
  }
}

TEST(SparseRespond, RejectsBadInputs) {
  Rng rng(3);
  auto [q, w] = gen_query(keys().pk, QueryShape({2, 2}), 0, rng);
  SparseDatabase other(QueryShape({4}), 4);
  EXPECT_THROW(sparse_respond(q, other, 1, rng), std::invalid_argument);
  SparseDatabase db(QueryShape({2, 2}), 4);
  EXPECT_THROW(sparse_respond(q, db, 3, rng), std::invalid_argument);
}

// The 3x4 examples for a query on row 2, column 3 (pid 6).
struct Grid3x4 {
  static SparseDatabase db(int which) {
    QueryShape shape({3, 4});
    SparseDatabase db(shape, 16);
    auto item = [](uint8_t v) { return Bytes(16, v); };
    if (which == 0) {
      // Target empty, another item shares its column.
      db.put(2, item(1));
      db.put(4, item(2));
      db.put(11, item(3));
    } else if (which == 1) {
      // The whole third column is empty.
      for (uint64_t pid : {0, 1, 3, 5, 7, 8, 9}) db.put(pid, item(static_cast<uint8_t>(pid + 1)));
    }
    return db;
  }
};

TEST(Taxonomy, UnreplacedExamples) {
  Rng rng(4);
  auto [q, w] = gen_query(keys().pk, QueryShape({3, 4}), 6, rng);
  auto run = [&](int which) {
    return finalize_response(keys().pk, sparse_respond(q, Grid3x4::db(which), kNoReplacement, rng), 2, 16, rng);
  };
  EXPECT_EQ(type_of(run(0), 2, 16), ResponseType::type_d());
  EXPECT_EQ(type_of(run(1), 2, 16), ResponseType::type_i(1));
  EXPECT_TRUE(std::holds_alternative<EmptySentinel>(sparse_respond(q, Grid3x4::db(2), kNoReplacement, rng)));
  EXPECT_EQ(type_of(run(2), 2, 16), ResponseType::type_d());
}

TEST(Taxonomy, ReplacementCollapsesEmptyColumns) {
  Rng rng(5);
  auto [q, w] = gen_query(keys().pk, QueryShape({3, 4}), 6, rng);
  for (int which = 0; which < 3; ++which) {
    // s = 1: an empty target always reads as E^2(0), whatever its neighbours hold.
    EXPECT_EQ(type_of(std::get<PirResponse>(sparse_respond(q, Grid3x4::db(which), 1, rng)), 2, 16),
              ResponseType::type_d());
  }
  // s = 2: an empty column and an empty database look alike.
  EXPECT_EQ(type_of(std::get<PirResponse>(sparse_respond(q, Grid3x4::db(1), 2, rng)), 2, 16), ResponseType::type_i(1));
  EXPECT_EQ(type_of(std::get<PirResponse>(sparse_respond(q, Grid3x4::db(2), 2, rng)), 2, 16), ResponseType::type_i(1));
  EXPECT_EQ(type_of(std::get<PirResponse>(sparse_respond(q, Grid3x4::db(0), 2, rng)), 2, 16), ResponseType::type_d());
}

TEST(Taxonomy, ReachableTypes) {
  using RT = ResponseType;
  EXPECT_EQ(reachable_types(2, 1), (std::set<RT>{RT::type0(), RT::type_d()}));
  EXPECT_EQ(reachable_types(3, 3), (std::set<RT>{RT::type0(), RT::type_i(1), RT::type_i(2), RT::type_d()}));
  EXPECT_EQ(reachable_types(3, 2), (std::set<RT>{RT::type0(), RT::type_i(1), RT::type_d()}));
  EXPECT_EQ(reachable_types(3, kNoReplacement), reachable_types(3, 3));
  EXPECT_THROW(reachable_types(2, 3), std::invalid_argument);
  EXPECT_THROW(RT::type_i(0), std::invalid_argument);
  EXPECT_EQ(RT::type_d().index(4), 4u);
  EXPECT_EQ(RT::type_i(2).index(4), 2u);
  EXPECT_EQ(RT::type_i(2).name(), "TypeI(2)");
  ByteWriter w;
  RT::type_i(3).serialize(w);
  ByteReader r(w.view());
  EXPECT_EQ(RT::deserialize(r), RT::type_i(3));
}

TEST(Taxonomy, BruteForceInfluenceOn2x2) {
  // Each target's type may only depend on slots sharing its first s-1 folds.
  QueryShape shape({2, 2});
  Rng rng(6);
  for (unsigned s = 1; s <= 2; ++s) {
    for (uint64_t target = 0; target < 4; ++target) {
      auto [q, w] = gen_query(keys().pk, shape, target, rng);
      std::vector<ResponseType> types(16);
      for (unsigned mask = 0; mask < 16; ++mask) {
        SparseDatabase db(shape, 4);
        for (uint64_t pid = 0; pid < 4; ++pid) {
          if (mask >> pid & 1) db.put(pid, Bytes{1, 2, 3, static_cast<uint8_t>(pid)});
        }
        types[mask] = type_of(std::get<PirResponse>(sparse_respond(q, db, s, rng)), 2, 4);
      }
      size_t influencing = 0;
      for (uint64_t slot = 0; slot < 4; ++slot) {
        bool any = false;
        for (unsigned mask = 0; mask < 16; ++mask) any = any || types[mask] != types[mask ^ (1u << slot)];
        influencing += any;
      }
      EXPECT_EQ(influencing, s == 1 ? 1u : 2u) << "s=" << s << " target=" << target;
    }
  }
}

TEST(Classify, CommitmentsAndMalformedResponses) {
  const auto& pp = crypto::PedersenParams::toy();
  Rng rng(7);
  Bytes payload;
  for (int v : {6, 12}) {
    Bytes e = to_bytes_be(v, pp.element_bytes());
    payload.insert(payload.end(), e.begin(), e.end());
  }
  PirResponse resp{crypto::layered_encrypt(keys().pk, payload, 2, rng)};
  Classification c = classify_response(keys().sk, resp, 2, payload.size(), pp);
  EXPECT_EQ(c.type, ResponseType::type0());
  ASSERT_EQ(c.commitments.size(), 2u);
  EXPECT_EQ(c.commitments[1].value, 12);

  PirResponse zero{crypto::layered_encrypt_zero(keys().pk, payload.size(), 1, 2, rng)};
  EXPECT_EQ(classify_response(keys().sk, zero, 2, payload.size(), pp).type, ResponseType::type_i(1));

  PirResponse cut = resp;
  cut.body.chunks.pop_back();
  EXPECT_THROW(classify_response(keys().sk, cut, 2, payload.size(), pp), MalformedResponse);
  PirResponse wrong_layer = resp;
  wrong_layer.body.layer = 3;
  EXPECT_THROW(classify_response(keys().sk, wrong_layer, 2, payload.size(), pp), MalformedResponse);
  // 5 is not in the order-11 subgroup.
  Bytes bad = to_bytes_be(5, pp.element_bytes());
  bad.insert(bad.end(), payload.begin() + pp.element_bytes(), payload.end());
  PirResponse not_group{crypto::layered_encrypt(keys().pk, bad, 2, rng)};
  EXPECT_THROW(classify_response(keys().sk, not_group, 2, payload.size(), pp), MalformedResponse);
}

TEST(Sizes, PredictedFormulas) {
  EXPECT_EQ(predicted_query_bits(QueryShape({10, 10, 10, 10}), 2, 1024), 81920u);
  EXPECT_EQ(predicted_query_bits(QueryShape({100, 100}), 2, 1024), 409600u);
  EXPECT_EQ(predicted_response_bits(4, 2, 1024), 16384u);
  EXPECT_EQ(predicted_response_bits(1, 2, 512), 1024u);
}

}  // namespace
}  // namespace octopus::pir
