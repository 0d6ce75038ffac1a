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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "octopus/crypto/prf.hpp"
#include "octopus/dp/noise.hpp"
#include "octopus/pir/classify.hpp"
#include "octopus/pir/database.hpp"
#include "octopus/protocol/common.hpp"
#include "octopus/protocol/transport.hpp"
#include "octopus/registry/registry.hpp"

namespace octopus::protocol {

struct Adversary {
  bool lie_sum = false;           // borrower commits to x + 1
  bool bad_query = false;         // originator selects two slots in dimension 1
  bool impostor = false;          // borrower holds the wrong tau_eu
  bool replay_proof = false;      // borrower reuses a knowledge proof from another session
  bool corrupt_response = false;  // one lender truncates its response
};

struct Processes {
  bool authorization = true;
  bool aggregation = true;
  bool evaluation = true;
};

struct QueryResult {
  QueryKind kind = QueryKind::kSum;
  BigInt value;            // sum, count, or the variance numerator
  BigInt denominator = 1;  // variance: n^2
  bool less_than = false;  // cmp_public: x < t

  double as_double() const;
  std::string str() const;
};

class Outbox {
 public:
  Outbox(Transport& transport, Endpoint self) : transport_(transport), self_(std::move(self)) {}
  void send(const Endpoint& to, MsgType type, const SessionId& session, Bytes body);

 private:
  Transport& transport_;
  Endpoint self_;
};

class Role {
 public:
  virtual ~Role() = default;
  virtual const Endpoint& endpoint() const = 0;
  virtual void handle(const Endpoint& from, const Envelope& env, Outbox& out) = 0;

  AbortKind abort() const { return abort_; }
  const std::string& abort_detail() const { return abort_detail_; }
  bool aborted() const { return abort_ != AbortKind::kNone; }

 protected:
  // Keeps the first abort only.
  void record_abort(AbortKind kind, std::string detail);

 private:
  AbortKind abort_ = AbortKind::kNone;
  std::string abort_detail_;
};

struct OriginatorConfig {
  crypto::PaillierKeyPair keys;
  crypto::PedersenParams params;
  std::string borrower_uid;
  uint64_t gid = 0;
  uint64_t pid = 0;
  crypto::PrfSeed tau_ob;
  std::string date;
  QueryKind kind = QueryKind::kSum;
  BigInt threshold;
  unsigned range_bits = 32;
  pir::QueryShape shape;
  dp::DpParams dp;
  uint32_t lender_count = 0;
  Processes processes;
  bool bad_query = false;
};

class Originator : public Role {
 public:
  Originator(OriginatorConfig cfg, Rng rng);

  const Endpoint& endpoint() const override { return kOriginator; }
  void start(Outbox& out);
  void handle(const Endpoint& from, const Envelope& env, Outbox& out) override;

  const SessionHeader& header() const { return header_; }
  std::optional<bool> z3() const { return z3_; }
  const std::optional<QueryResult>& result() const { return result_; }
  // n_0 .. n_d: responses of each type, noise included.
  const std::vector<uint64_t>& type_counts() const { return type_counts_; }
  size_t responses_seen() const { return responses_seen_; }

 private:
  void on_group_secrets(const GroupSecrets& m, Outbox& out);
  void on_relay(const SealedRelay& m, Outbox& out);
  void try_check(Outbox& out);
  void on_eval(const EvalMaterial& m);
  void abort_session(AbortKind kind, std::string detail, Outbox& out);

  OriginatorConfig cfg_;
  Rng rng_;
  SessionHeader header_;
  WireContext wire_;
  std::optional<RelayChannel> channel_;
  pir::PirQuery query_;
  pir::QueryWitness witness_;
  std::optional<std::vector<crypto::Commitment>> c_b_;
  std::optional<ResponseBatch> batch_;
  std::optional<bool> z3_;
  std::optional<QueryResult> result_;
  std::vector<uint64_t> type_counts_;
  size_t responses_seen_ = 0;
};

struct ExchangerConfig {
  const registry::Registry* registry = nullptr;
  crypto::PedersenParams params;
  std::vector<std::string> lender_ids;
  Processes processes;
  // Overrides the sampled noise counts when set.
  std::optional<std::map<pir::ResponseType, uint64_t>> forced_noise;
  // Pre-generated batch consumed instead of fresh noise when set.
  const dp::NoiseBatch* noise_batch = nullptr;
};

class Exchanger : public Role {
 public:
  Exchanger(ExchangerConfig cfg, Rng rng);

  const Endpoint& endpoint() const override { return kExchanger; }
  void handle(const Endpoint& from, const Envelope& env, Outbox& out) override;

  std::optional<bool> z1() const { return z1_; }
  std::optional<bool> z2() const { return z2_; }
  bool released() const { return released_; }
  const std::map<pir::ResponseType, uint64_t>& noise_counts() const { return noise_counts_; }

 private:
  void on_open(const SessionOpen& m, Outbox& out);
  void try_authorize(Outbox& out);
  void try_release(Outbox& out);
  void broadcast_abort(AbortKind kind, std::string detail, const Endpoint& except, Outbox& out);

  ExchangerConfig cfg_;
  Rng rng_;
  std::optional<SessionOpen> open_;
  WireContext wire_;
  BigInt r_e_;
  std::vector<BigInt> dataset_;
  std::optional<BorrowerCipher> cipher_;
  std::optional<pir::PirQuery> query_;
  std::optional<Correspondence> correspondence_;
  std::map<Endpoint, crypto::LayeredCiphertext> responses_;
  std::optional<BorrowerDelta> delta_;
  std::optional<bool> z1_, z2_;
  bool released_ = false;
  std::map<pir::ResponseType, uint64_t> noise_counts_;
};

struct BorrowerLoan {
  std::string lender_id;
  uint64_t amount = 0;
  crypto::PrfSeed tau;
};

struct BorrowerConfig {
  std::string uid;
  crypto::PrfSeed tau_eu;
  crypto::PrfSeed tau_ob;
  std::vector<BorrowerLoan> loans;
  crypto::PedersenParams params;
  Processes processes;
  Adversary adversary;
};

class Borrower : public Role {
 public:
  Borrower(BorrowerConfig cfg, Rng rng);

  const Endpoint& endpoint() const override { return kBorrower; }
  void handle(const Endpoint& from, const Envelope& env, Outbox& out) override;

 private:
  void on_open(const SessionOpen& m, Outbox& out);
  void on_nonce(const AuthNonce& m, Outbox& out);
  void on_eval_request(Outbox& out);
  void send_relay(const RelayMessage& m, Outbox& out);

  BorrowerConfig cfg_;
  Rng rng_;
  std::optional<SessionOpen> open_;
  WireContext wire_;
  std::optional<RelayChannel> channel_;
  std::vector<BigInt> totals_;  // per column
  std::vector<BigInt> r_b_;
  std::vector<crypto::Commitment> c_b_;
};

struct LenderConfig {
  std::string lender_id;
  crypto::PedersenParams params;
  std::vector<registry::LoanRecord> loans;
  std::vector<registry::GroupSnapshot> groups;
  bool corrupt_response = false;
};

class Lender : public Role {
 public:
  Lender(LenderConfig cfg, Rng rng);

  const Endpoint& endpoint() const override { return endpoint_; }
  void handle(const Endpoint& from, const Envelope& env, Outbox& out) override;

  // Commitment database for one session: payload columns per query kind,
  // randomness PRF_tau_iu("rc" || u || x || date).
  pir::SparseDatabase build_database(const SessionHeader& header) const;
  const std::optional<pir::RespondStats>& last_stats() const { return stats_; }

 private:
  LenderConfig cfg_;
  Endpoint endpoint_;
  Rng rng_;
  std::optional<SessionOpen> open_;
  WireContext wire_;
  std::optional<pir::SparseDatabase> db_;
  std::optional<pir::RespondStats> stats_;
};

// Fisher-Yates.
template <typename T>
void exchanger_shuffle(std::vector<T>& items, Rng& rng) {
  for (size_t i = items.size(); i > 1; --i) {
    size_t j = rng.below(static_cast<uint64_t>(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace octopus::protocol
