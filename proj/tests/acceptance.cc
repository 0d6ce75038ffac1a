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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "octopus/crypto/laplace.hpp"
#include "octopus/dp/noise.hpp"
#include "octopus/harness/scenario.hpp"
#include "octopus/pir/classify.hpp"
#include "octopus/pir/respond.hpp"
#include "octopus/protocol/common.hpp"
#include "octopus/protocol/session.hpp"
#include "octopus/zk/paillier_proofs.hpp"
#include "octopus/zk/pedersen_proofs.hpp"
#include "octopus/zk/query_proofs.hpp"
#include "test_util.hpp"

namespace octopus {
namespace {

using Clock = std::chrono::steady_clock;
using pir::ResponseType;
using protocol::AbortKind;
using protocol::QueryKind;

// Pinned tolerances and budgets.
constexpr double kPirSecondsBudget = 60.0;
constexpr int kPirDatabasesPerCase = 100;
constexpr double kCalibrationRelTol = 1e-9;
constexpr int kSamplerDraws = 1'000'000;
constexpr double kSamplerMeanRelTol = 0.02;
constexpr int kZkTrials = 1000;
constexpr int kSessionTrials = 100;
constexpr int kEvaluationSessions = 200;
constexpr double kSizeRelTol = 0.10;
constexpr double kQ10x4Bytes = 10.4e3;
constexpr double kQ100x2Bytes = 51.5e3;
constexpr double kSmokeSecondsBudget = 30.0;

// Reference values from the independent oracle script (tests/oracles).
constexpr double kRefMu = 27.315186774396087569;
constexpr double kRefLambda = 2.857142857142857;
constexpr double kRefTruncatedMean = 27.81608256167293;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const crypto::PaillierKeyPair& keys512() { return testing::paillier_keys(512); }

// ---------------------------------------------------------------------------
// PIR

std::pair<size_t, crypto::Digits> peel_to_end(const crypto::PaillierKeyPair& kp, const pir::PirResponse& resp) {
  crypto::LayeredCiphertext cur = resp.body;
  size_t peeled = 0;
  crypto::Digits digits;
  while (cur.layer > 0) {
    digits = crypto::peel_layer(kp.sk, cur);
    ++peeled;
    bool zero = std::all_of(digits.begin(), digits.end(), [](const BigInt& x) { return x == 0; });
    if (cur.layer == 1 || zero) break;
    cur.chunks = crypto::digits_to_chunks(kp.pk, digits);
    cur.layer = static_cast<uint8_t>(cur.layer - 1);
  }
  return {peeled, digits};
}

pir::SparseDatabase random_db(const pir::QueryShape& shape, uint32_t width, double fill, Rng& rng) {
  pir::SparseDatabase db(shape, width);
  for (uint64_t pid = 0; pid < shape.capacity(); ++pid) {
    if (rng.uniform01() < fill) {
      Bytes payload = rng.bytes(width);
      payload[0] |= 1;
      db.put(pid, payload);
    }
  }
  return db;
}

void criterion1(Verdict& v) {
  const std::vector<std::vector<uint32_t>> shapes = {{2, 2}, {3, 4}, {2, 2, 2}, {4, 4}};
  const uint32_t width = 24;
  const auto& kp = keys512();
  Rng rng(101);
  auto t0 = Clock::now();
  size_t cases = 0, dbs = 0;
  for (const auto& dims : shapes) {
    pir::QueryShape shape(dims);
    for (unsigned s = 1; s <= shape.d(); ++s) {
      ++cases;
      for (int trial = 0; trial < kPirDatabasesPerCase; ++trial, ++dbs) {
        double fill = trial == 0 ? 0.0 : trial == 1 ? 1.0 : rng.uniform01();
        auto db = random_db(shape, width, fill, rng);
        uint64_t pid = rng.below(shape.capacity());
        auto [q, w] = pir::gen_query(kp.pk, shape, pid, rng);
        auto sparse = pir::sparse_respond(q, db, s, rng);
        auto naive = pir::naive_respond(q, pir::to_dense(db), width, s, rng);
        if (!std::holds_alternative<pir::PirResponse>(sparse) || !std::holds_alternative<pir::PirResponse>(naive)) {
          v.require(false, "sentinel with replacement enabled");
          continue;
        }
        const auto& a = std::get<pir::PirResponse>(sparse);
        const auto& b = std::get<pir::PirResponse>(naive);
        v.require(peel_to_end(kp, a) == peel_to_end(kp, b), "sparse and naive decrypt differently");
        auto type = pir::peel_response(kp.sk, a, shape.d(), width).type;
        if (const Bytes* item = db.find(pid)) {
          v.require(crypto::layered_decrypt(kp.sk, a.body, width) == *item, "sparse differs from direct lookup");
          v.require(crypto::layered_decrypt(kp.sk, b.body, width) == *item, "naive differs from direct lookup");
        } else {
          v.require(type != ResponseType::type0(), "empty slot decrypted to a payload");
        }
      }
    }
  }
  double secs = seconds_since(t0);
  v.require(secs < kPirSecondsBudget, "time budget");
  v.detail << cases << " (shape, s) cases, " << dbs << " databases, " << secs << " s";
}

// The three 3x4 databases for a query on pid 6 (row 1, column 2).
pir::SparseDatabase grid_db(int which) {
  pir::SparseDatabase db(pir::QueryShape({3, 4}), 16);
  auto item = [](uint8_t x) { return Bytes(16, x); };
  if (which == 0) {
    for (uint64_t pid : {2, 4, 11}) db.put(pid, item(static_cast<uint8_t>(pid + 1)));
  } else if (which == 1) {
    for (uint64_t pid : {0, 1, 3, 5, 7, 8, 9}) db.put(pid, item(static_cast<uint8_t>(pid + 1)));
  }
  return db;
}

void criterion2(Verdict& v) {
  const auto& kp = keys512();
  Rng rng(102);
  auto [q, w] = pir::gen_query(kp.pk, pir::QueryShape({3, 4}), 6, rng);
  const ResponseType want[] = {ResponseType::type_d(), ResponseType::type_i(1), ResponseType::type_d()};
  for (int which = 0; which < 3; ++which) {
    auto raw = pir::sparse_respond(q, grid_db(which), pir::kNoReplacement, rng);
    bool sentinel = std::holds_alternative<pir::EmptySentinel>(raw);
    auto resp = pir::finalize_response(kp.pk, raw, 2, 16, rng);
    auto got = pir::peel_response(kp.sk, resp, 2, 16).type;
    v.require(got == want[which], "database " + std::to_string(which));
    v.require(sentinel == (which == 2), "sentinel only for the empty database");
    v.detail << "db" << which << "=" << got.name() << (sentinel ? " (after replacement)" : "") << " ";
  }
}

// ---------------------------------------------------------------------------
// Differential privacy

void criterion3(Verdict& v) {
  auto lp = dp::derive_laplace_params(0.7, 1e-4);
  // Forward formulas, written out independently of the library.
  double eps = 2.0 / lp.lambda;
  double t = std::exp((1.0 - lp.mu) / lp.lambda);
  double delta = t * (1.0 - t / 4.0);
  double eps_err = std::abs(eps - 0.7) / 0.7;
  double delta_err = std::abs(delta - 1e-4) / 1e-4;
  v.require(eps_err <= kCalibrationRelTol, "epsilon back-substitution");
  v.require(delta_err <= kCalibrationRelTol, "delta back-substitution");
  v.require(std::abs(lp.mu - kRefMu) / kRefMu <= kCalibrationRelTol, "mu vs reference");
  v.require(std::abs(lp.lambda - kRefLambda) / kRefLambda <= kCalibrationRelTol, "lambda vs reference");
  Rng rng(103);
  double sum = 0;
  for (int i = 0; i < kSamplerDraws; ++i) sum += static_cast<double>(crypto::sample_truncated_laplace(lp.mu, lp.lambda, rng));
  double mean = sum / kSamplerDraws;
  double mean_err = std::abs(mean - kRefTruncatedMean) / kRefTruncatedMean;
  v.require(mean_err <= kSamplerMeanRelTol, "sampler mean");
  v.detail << "mu=" << lp.mu << " lambda=" << lp.lambda << " eps_rel_err=" << eps_err << " delta_rel_err=" << delta_err
           << " sample_mean=" << mean << " (ref " << kRefTruncatedMean << ", rel err " << mean_err << ")";
}

void criterion4(Verdict& v) {
  const auto& kp = keys512();
  pir::QueryShape shape({2, 2, 2});
  const uint64_t m = shape.capacity();
  Rng rng(104);
  for (unsigned s : {1u, 3u}) {
    size_t worst = 0;
    for (uint64_t target = 0; target < m; ++target) {
      auto [q, w] = pir::gen_query(kp.pk, shape, target, rng);
      std::vector<ResponseType> types(1u << m);
      for (unsigned mask = 0; mask < types.size(); ++mask) {
        pir::SparseDatabase db(shape, 4);
        for (uint64_t pid = 0; pid < m; ++pid) {
          if (mask >> pid & 1) db.put(pid, Bytes{1, 2, 3, static_cast<uint8_t>(pid)});
        }
        types[mask] = pir::peel_response(kp.sk, std::get<pir::PirResponse>(pir::sparse_respond(q, db, s, rng)), 3, 4).type;
      }
      size_t influencing = 0;
      for (uint64_t slot = 0; slot < m; ++slot) {
        bool any = false;
        for (unsigned mask = 0; mask < types.size() && !any; ++mask) any = types[mask] != types[mask ^ (1u << slot)];
        influencing += any;
        if (s == 1 && slot != target) v.require(!any, "cross-slot influence at s=1");
      }
      worst = std::max(worst, influencing);
    }
    uint64_t bound = dp::affected_bound(m, 3, s);
    v.require(worst <= bound, "influence above bound for s=" + std::to_string(s));
    v.detail << "s=" << s << ": max influencing slots " << worst << " (bound " << bound << ") ";
  }
  v.require(dp::affected_bound(8, 3, 3) == 4, "ceil(8^(2/3)) = 4");
}

// ---------------------------------------------------------------------------
// Zero-knowledge proofs

void criterion5(Verdict& v) {
  const auto& kp = keys512();
  const auto& pk = kp.pk;
  const auto& pp = testing::small_pedersen();
  const Bytes ctx = to_bytes("acceptance");
  Rng rng(105);
  struct Tally {
    std::string name;
    int complete = 0, sound = 0;
  };
  std::vector<Tally> tallies;

  auto run = [&](const std::string& name, const std::function<bool()>& honest, const std::function<bool()>& cheat) {
    Tally t{name};
    for (int i = 0; i < kZkTrials; ++i) t.complete += honest();
    for (int i = 0; i < kZkTrials; ++i) t.sound += !cheat();
    v.require(t.complete == kZkTrials, name + " completeness");
    v.require(t.sound == kZkTrials, name + " soundness");
    tallies.push_back(t);
  };

  run(
      "plaintext-knowledge",
      [&] {
        BigInt x = rng.below(pk.n), r = rng.unit_mod(pk.n);
        auto c = crypto::paillier_encrypt(pk, x, r);
        return zk::verify_plaintext_knowledge(pk, c, zk::prove_plaintext_knowledge(pk, c, x, r, ctx, rng), ctx);
      },
      [&] {
        BigInt x = rng.below(pk.n), r = rng.unit_mod(pk.n);
        auto c = crypto::paillier_encrypt(pk, x, r);
        BigInt wrong_r = rng.unit_mod(pk.n);
        return zk::verify_plaintext_knowledge(pk, c, zk::prove_plaintext_knowledge(pk, c, x, wrong_r, ctx, rng),
                                              ctx);
      });

  run(
      "binary",
      [&] {
        BigInt bit = rng.below(2), r = rng.unit_mod(pk.n);
        auto c = crypto::paillier_encrypt(pk, bit, r);
        return zk::verify_binary(pk, c, zk::prove_binary(pk, c, bit, r, ctx, rng), ctx);
      },
      [&] {
        BigInt x = 2 + rng.below(pk.n - 2), r = rng.unit_mod(pk.n);
        auto c = crypto::paillier_encrypt(pk, x, r);
        return zk::verify_binary(pk, c, zk::prove_binary(pk, c, rng.below(2), r, ctx, rng), ctx);
      });

  pir::QueryShape qshape({3, 2});
  run(
      "valid-query",
      [&] {
        auto [q, w] = pir::gen_query(pk, qshape, rng.below(qshape.capacity()), rng);
        return zk::verify_valid_query(q, zk::prove_valid_query(q, w, ctx, rng), ctx);
      },
      [&] {
        // A unit vector in every dimension except one, which is corrupted.
        std::vector<std::vector<BigInt>> pt(qshape.d());
        for (unsigned i = 0; i < qshape.d(); ++i) {
          pt[i].assign(qshape.dim(i), 0);
          pt[i][rng.below(qshape.dim(i))] = 1;
        }
        unsigned bad = static_cast<unsigned>(rng.below(qshape.d()));
        switch (rng.below(3)) {
          case 0:
            std::fill(pt[bad].begin(), pt[bad].end(), 0);
            break;
          case 1:
            std::fill(pt[bad].begin(), pt[bad].end(), 1);
            break;
          default:
            pt[bad][rng.below(qshape.dim(bad))] = 2 + rng.below(pk.n - 2);
        }
        auto [q, w] = pir::gen_query_from_plaintexts(pk, qshape, pt, rng);
        return zk::verify_valid_query(q, zk::prove_valid_query(q, w, ctx, rng), ctx);
      });

  pir::QueryShape cshape({2, 3});
  auto dataset = [&](uint64_t size) {
    std::vector<BigInt> out;
    while (out.size() < size) {
      BigInt x = rng.bits(64);
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
    return out;
  };
  auto correspondence = [&](bool honest) {
    auto data = dataset(cshape.capacity());
    uint64_t pid = rng.below(cshape.capacity());
    uint64_t j = pid;
    if (!honest) j = (pid + 1 + rng.below(cshape.capacity() - 1)) % cshape.capacity();
    auto [q, w] = pir::gen_query(pk, cshape, pid, rng);
    BigInt r = rng.unit_mod(pk.n);
    auto c = crypto::paillier_encrypt(pk, data[j], r);
    return zk::verify_correspondence(q, c, data, zk::prove_correspondence(q, w, c, r, data, ctx, rng), ctx);
  };
  run("correspondence", [&] { return correspondence(true); }, [&] { return correspondence(false); });

  auto multiplication = [&](bool honest) {
    BigInt x = rng.bits(32), y = rng.bits(32);
    BigInt rx = rng.below(pp.q), ry = rng.below(pp.q), rz = rng.below(pp.q);
    BigInt z = x * y;
    if (!honest) z += 1 + rng.below(pp.q - 1);
    auto cx = crypto::pedersen_commit(pp, x, rx), cy = crypto::pedersen_commit(pp, y, ry);
    auto cz = crypto::pedersen_commit(pp, z, rz);
    return zk::verify_multiplication(pp, cx, cy, cz, zk::prove_multiplication(pp, cx, cy, cz, x, rx, ry, rz, ctx, rng),
                                     ctx);
  };
  run("multiplication", [&] { return multiplication(true); }, [&] { return multiplication(false); });

  const unsigned L = 16;
  auto range = [&](bool honest) {
    BigInt x = honest ? rng.below(BigInt(1) << L) : (BigInt(1) << L) + rng.below(pp.q - (BigInt(1) << L));
    BigInt r = rng.below(pp.q);
    auto c = crypto::pedersen_commit(pp, x, r);
    return zk::verify_range(pp, c, L, zk::prove_range(pp, c, x, r, L, ctx, rng), ctx);
  };
  run("range", [&] { return range(true); }, [&] { return range(false); });

  // Exhaustive on 2x2: every (queried pid, encrypted item) pair over several datasets.
  pir::QueryShape small({2, 2});
  int pairs = 0, matches = 0;
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<BigInt> data;
    while (data.size() < 4) {
      BigInt x = rng.bits(32);
      if (std::find(data.begin(), data.end(), x) == data.end()) data.push_back(x);
    }
    for (uint64_t pid = 0; pid < 4; ++pid) {
      auto [q, w] = pir::gen_query(pk, small, pid, rng);
      for (uint64_t j = 0; j < 4; ++j, ++pairs) {
        BigInt r = rng.unit_mod(pk.n);
        auto c = crypto::paillier_encrypt(pk, data[j], r);
        bool ok = zk::verify_correspondence(q, c, data, zk::prove_correspondence(q, w, c, r, data, ctx, rng), ctx);
        matches += ok == (j == pid);
      }
    }
  }
  v.require(matches == pairs, "exhaustive 2x2 correspondence");
  for (const auto& t : tallies) v.detail << t.name << " " << t.complete << "/" << t.sound << ", ";
  v.detail << "2x2 exhaustive " << matches << "/" << pairs << " (per suite: complete/rejected of " << kZkTrials << ")";
}

// ---------------------------------------------------------------------------
// Sessions

struct RandomWorld {
  registry::Registry reg;
  std::vector<std::string> lenders;
  std::string borrower;
};

RandomWorld random_world(Rng& rng, uint64_t capacity, uint64_t max_amount) {
  unsigned n_lenders = 1 + static_cast<unsigned>(rng.below(3));
  std::vector<std::string> lenders;
  for (unsigned i = 0; i < n_lenders; ++i) lenders.push_back("L" + std::to_string(i + 1));
  std::vector<std::vector<uint64_t>> loans(n_lenders, std::vector<uint64_t>(capacity, 0));
  for (auto& row : loans) {
    for (auto& x : row) x = rng.uniform01() < 0.5 ? 1 + rng.below(max_amount) : 0;
  }
  auto reg = testing::make_registry(capacity, lenders, loans, rng);
  return {std::move(reg), lenders, testing::user_name(rng.below(capacity))};
}

void criterion6(Verdict& v) {
  Rng rng(106);
  pir::QueryShape shape({2, 2});
  int honest_pass = 0, lie_caught = 0;
  for (int i = 0; i < kSessionTrials; ++i) {
    auto world = random_world(rng, 4, 1000);
    auto cfg = testing::small_session(world.reg, world.borrower, shape, QueryKind::kSum, rng.next_u64());
    protocol::InProcTransport t1;
    auto out = protocol::run_octopus(cfg, t1);
    honest_pass += out.ok() && out.z3 == true;
    cfg.adversary.lie_sum = true;
    cfg.seed = rng.next_u64();
    protocol::InProcTransport t2;
    auto bad = protocol::run_octopus(cfg, t2);
    lie_caught += bad.abort == AbortKind::kInconsistentSum && bad.z3 == false && !bad.result;
  }
  v.require(honest_pass == kSessionTrials, "honest sessions");
  v.require(lie_caught == kSessionTrials, "lie-sum sessions");

  // Toy trace: one lender x = 3, r = 5; one Type0 noise F(0, 2); r_b = 7, r_o = 4.
  const auto pp = crypto::PedersenParams::toy();
  auto c = protocol::aggregate(pp, {crypto::pedersen_commit(pp, 3, 5), crypto::pedersen_commit(pp, 0, 2)});
  BigInt delta_rb = protocol::borrower_delta(7, 4, {5}, pp.q);
  BigInt delta_r = protocol::exchanger_delta(delta_rb, 2, pp.q);
  auto c_b = crypto::pedersen_commit(pp, 3, 7);
  bool check = protocol::consistency_check(pp, c_b, c, delta_r, 4);
  v.require(c.value == 3 && delta_rb == 9 && delta_r == 7 && check, "toy trace");
  v.detail << "honest " << honest_pass << "/" << kSessionTrials << " pass, lie-sum " << lie_caught << "/"
           << kSessionTrials << " rejected, toy trace c=" << c.value.get_str() << " delta_rb=" << delta_rb.get_str()
           << " delta_r=" << delta_r.get_str() << " check=" << (check ? "pass" : "fail");
}

void criterion7(Verdict& v) {
  Rng rng(107);
  pir::QueryShape shape({2, 2});
  int impostor_ok = 0, bad_query_ok = 0;
  auto gated = [](const protocol::Transport& t) {
    for (const auto* rec : t.transcript(protocol::kOriginator)) {
      if (rec->type == protocol::MsgType::kResponseBatch || rec->type == protocol::MsgType::kLenderResponse) {
        return false;
      }
    }
    return true;
  };
  for (int i = 0; i < kSessionTrials; ++i) {
    auto world = random_world(rng, 4, 1000);
    auto cfg = testing::small_session(world.reg, world.borrower, shape, QueryKind::kSum, rng.next_u64());
    cfg.adversary.impostor = true;
    protocol::InProcTransport t1;
    auto a = protocol::run_octopus(cfg, t1);
    impostor_ok += a.abort == AbortKind::kUnauthorized && !a.result && gated(t1);
    cfg.adversary = {};
    cfg.adversary.bad_query = true;
    cfg.seed = rng.next_u64();
    protocol::InProcTransport t2;
    auto b = protocol::run_octopus(cfg, t2);
    bad_query_ok += b.abort == AbortKind::kInvalidQuery && !b.result && gated(t2);
  }
  v.require(impostor_ok == kSessionTrials, "impostor");
  v.require(bad_query_ok == kSessionTrials, "bad query");
  v.detail << "impostor " << impostor_ok << "/" << kSessionTrials << " Unauthorized, bad-query " << bad_query_ok << "/"
           << kSessionTrials << " InvalidQuery, no response bytes reached the originator";
}

// ---------------------------------------------------------------------------
// Sizes

void criterion8(Verdict& v) {
  auto rows = harness::bench_sizes({{10, 10, 10, 10}, {100, 100}}, 1024, 108);
  const double targets[] = {kQ10x4Bytes, kQ100x2Bytes};
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    pir::QueryShape shape(r.shape);
    // Frame header, shape encoding and a u32 length per ciphertext.
    uint64_t q_frame = protocol::kFrameOverhead + shape.encoded_size() + 4 * shape.total_slots();
    uint64_t chunks = r.predicted_response_bytes / 256;
    uint64_t r_frame = protocol::kFrameOverhead + 1 + 2 + 4 * chunks;
    v.require(r.predicted_query_bytes == shape.total_slots() * 2 * 1024 / 8, "query formula");
    v.require(r.predicted_response_bytes == (uint64_t{1} << shape.d()) * 1024 / 8, "response formula");
    v.require(r.measured_query_bytes == r.predicted_query_bytes + q_frame, "query framing");
    v.require(r.measured_response_bytes == r.predicted_response_bytes + r_frame, "response framing");
    double rel = std::abs(static_cast<double>(r.measured_query_bytes) - targets[i]) / targets[i];
    v.require(rel <= kSizeRelTol, r.label + " within 10%");
    v.detail << r.label << " query " << r.measured_query_bytes << " B (predicted " << r.predicted_query_bytes
             << " + framing " << q_frame << ", " << 100 * rel << "% from " << targets[i] << ") response "
             << r.measured_response_bytes << " B; ";
  }
}

// ---------------------------------------------------------------------------
// Evaluation

void criterion9(Verdict& v) {
  Rng rng(109);
  pir::QueryShape shape({2, 2});
  const QueryKind kinds[] = {QueryKind::kSum, QueryKind::kCount, QueryKind::kVariance, QueryKind::kCmpPublic};
  int matched = 0;
  for (int i = 0; i < kEvaluationSessions; ++i) {
    auto world = random_world(rng, 4, 1000);
    QueryKind kind = kinds[i % 4];
    auto cfg = testing::small_session(world.reg, world.borrower, shape, kind, rng.next_u64());
    cfg.threshold = rng.below(2500);
    protocol::InProcTransport t;
    auto out = protocol::run_octopus(cfg, t);
    auto want = protocol::plaintext_oracle(world.reg, world.borrower, world.lenders, kind, cfg.threshold);
    bool ok = out.ok() && out.result && out.result->str() == want.str();
    matched += ok;
    if (!ok) v.require(false, "session " + std::to_string(i) + " (" + protocol::to_string(kind) + ")");
  }

  Rng wrng(110);
  auto reg = testing::make_registry(4, {"A", "B"}, {{0, 1, 0, 0}, {0, 2, 0, 0}}, wrng);
  auto cfg = testing::small_session(reg, testing::user_name(1), shape, QueryKind::kVariance, 9);
  protocol::InProcTransport t1;
  auto var = protocol::run_octopus(cfg, t1);
  bool quarter = var.result && var.result->value == 1 && var.result->denominator == 4;
  v.require(quarter, "variance of [1, 2]");
  cfg.kind = QueryKind::kCmpPrivate;
  protocol::InProcTransport t2;
  auto priv = protocol::run_octopus(cfg, t2);
  v.require(priv.abort == AbortKind::kUnsupportedQuery, "cmp_private");
  v.detail << matched << "/" << kEvaluationSessions << " sessions match the plaintext oracle, variance [1,2] = "
           << (var.result ? var.result->str() : "-") << ", cmp_private -> " << protocol::to_string(priv.abort);
}

void criterion10(Verdict& v) {
  harness::ScenarioConfig cfg;
  auto t0 = Clock::now();
  auto a = harness::run_scenario(cfg);
  double secs = seconds_since(t0);
  auto b = harness::run_scenario(cfg);
  v.require(a.correct && a.outcome.ok(), "default scenario result");
  v.require(secs < kSmokeSecondsBudget, "time budget");
  v.require(a.transcript_digest == b.transcript_digest, "replay digest");
  v.detail << "default scenario " << secs << " s (setup " << a.setup_seconds << " s), result "
           << (a.outcome.result ? a.outcome.result->str() : "-") << ", replay digest "
           << (a.transcript_digest == b.transcript_digest ? "identical" : "differs");
}

}  // namespace
}  // namespace octopus

int main() {
  using namespace octopus;
  const std::vector<std::pair<int, void (*)(Verdict&)>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10},
  };
  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    Verdict v;
    auto t0 = Clock::now();
    try {
      fn(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    failed += !v.pass;
    std::printf("criterion %d: %s  [%.1f s] %s\n", id, v.pass ? "PASS" : "FAIL", seconds_since(t0),
                v.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
