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

#include <stdexcept>

#include "octopus/protocol/roles.hpp"
#include "octopus/zk/query_proofs.hpp"

namespace octopus::protocol {

Originator::Originator(OriginatorConfig cfg, Rng rng) : cfg_(std::move(cfg)), rng_(std::move(rng)) {
  wire_ = WireContext{&cfg_.keys.pk, &cfg_.params};
  type_counts_.assign(cfg_.shape.d() + 1, 0);
}

void Originator::start(Outbox& out) {
  rng_.fill(header_.id);
  header_.gid = cfg_.gid;
  header_.date = cfg_.date;
  header_.kind = cfg_.kind;
  header_.threshold = cfg_.threshold;
  header_.range_bits = cfg_.range_bits;
  header_.shape = cfg_.shape;
  header_.s = cfg_.dp.s;
  header_.dp = cfg_.dp;
  header_.lender_count = cfg_.lender_count;

  if (cfg_.kind == QueryKind::kCmpPrivate) {
    // Needs a secure two-party comparison; refused before any message leaves.
    record_abort(AbortKind::kUnsupportedQuery, "cmp_private is not supported");
    return;
  }
  channel_.emplace(cfg_.tau_ob, cfg_.date, header_.id);

  if (cfg_.bad_query) {
    // Selects two slots in the first dimension.
    std::vector<std::vector<BigInt>> plain;
    auto coords = pir::pid_to_coords(cfg_.shape, cfg_.pid);
    for (unsigned i = 0; i < cfg_.shape.d(); ++i) {
      std::vector<BigInt> row(cfg_.shape.dim(i), BigInt(0));
      row[coords[i]] = 1;
      if (i == 0) row[(coords[i] + 1) % cfg_.shape.dim(i)] = 1;
      plain.push_back(std::move(row));
    }
    std::tie(query_, witness_) = pir::gen_query_from_plaintexts(cfg_.keys.pk, cfg_.shape, std::move(plain), rng_);
    witness_.pid = cfg_.pid;
  } else {
    std::tie(query_, witness_) = pir::gen_query(cfg_.keys.pk, cfg_.shape, cfg_.pid, rng_);
  }

  out.send(kExchanger, MsgType::kSessionOpen, header_.id, encode(SessionOpen{header_, cfg_.keys.pk}));
  QuerySubmit submit{query_, {}};
  if (cfg_.processes.authorization) {
    submit.proof = zk::prove_valid_query(query_, witness_, proof_context(header_.id, "valid-query"), rng_);
  }
  out.send(kExchanger, MsgType::kQuerySubmit, header_.id, encode(submit));
}

void Originator::handle(const Endpoint&, const Envelope& env, Outbox& out) {
  if (aborted() || env.session != header_.id) return;
  switch (env.type) {
    case MsgType::kGroupSecrets:
      on_group_secrets(decode_group_secrets(env.body), out);
      break;
    case MsgType::kSealedRelay:
      on_relay(decode_sealed_relay(env.body), out);
      break;
    case MsgType::kResponseBatch:
      batch_ = decode_response_batch(env.body, wire_);
      try_check(out);
      break;
    case MsgType::kAbort: {
      AbortNotice n = decode_abort(env.body);
      record_abort(n.kind, n.detail);
      break;
    }
    default:
      break;
  }
}

void Originator::on_group_secrets(const GroupSecrets& m, Outbox& out) {
  if (m.y.size() != cfg_.shape.capacity()) {
    abort_session(AbortKind::kUnauthorized, "group secret list has the wrong size", out);
    return;
  }
  const auto& pk = cfg_.keys.pk;
  BigInt r = auth_randomness(cfg_.tau_ob, pk, cfg_.borrower_uid, cfg_.date);
  crypto::Ciphertext c = crypto::paillier_encrypt(pk, m.y[cfg_.pid], r);
  Correspondence corr{zk::prove_correspondence(query_, witness_, c, r, m.y,
                                               proof_context(header_.id, "correspondence"), rng_)};
  out.send(kExchanger, MsgType::kCorrespondence, header_.id, encode(corr));
}

void Originator::on_relay(const SealedRelay& m, Outbox& out) {
  if (m.direction != 0) return;
  std::optional<Bytes> plain = channel_->open(m);
  if (!plain) {
    abort_session(AbortKind::kEvaluationRejected, "relay message failed authentication", out);
    return;
  }
  RelayMessage msg = decode_relay(*plain, wire_);
  if (msg.kind == RelayKind::kBorrowerCommit) {
    if (msg.commit.c_b.size() != header_.columns()) {
      abort_session(AbortKind::kInconsistentSum, "borrower commitment has the wrong column count", out);
      return;
    }
    c_b_ = msg.commit.c_b;
    try_check(out);
  } else if (msg.kind == RelayKind::kEvalMaterial) {
    on_eval(msg.eval);
  }
}

void Originator::try_check(Outbox& out) {
  if (!batch_ || !c_b_ || z3_) return;
  const auto& params = cfg_.params;
  const size_t columns = header_.columns();
  const size_t payload_len = header_.payload_len(params);
  std::vector<std::vector<crypto::Commitment>> collected(columns);
  responses_seen_ = batch_->responses.size();
  for (const auto& body : batch_->responses) {
    pir::Classification cls;
    try {
      cls = pir::classify_response(cfg_.keys.sk, pir::PirResponse{body}, cfg_.shape.d(), payload_len, params);
    } catch (const pir::MalformedResponse& e) {
      abort_session(AbortKind::kMalformedResponse, e.what(), out);
      return;
    }
    ++type_counts_[cls.type.index(cfg_.shape.d())];
    for (size_t col = 0; col < cls.commitments.size(); ++col) collected[col].push_back(cls.commitments[col]);
  }
  if (batch_->delta_r.size() != columns) {
    abort_session(AbortKind::kInconsistentSum, "delta has the wrong column count", out);
    return;
  }
  for (size_t col = 0; col < columns; ++col) {
    crypto::Commitment c = aggregate(params, collected[col]);
    BigInt r_o = commitment_randomness(cfg_.tau_ob, originator_label(cfg_.borrower_uid, cfg_.date, col), params);
    if (!consistency_check(params, (*c_b_)[col], c, batch_->delta_r[col], r_o)) {
      z3_ = false;
      abort_session(AbortKind::kInconsistentSum, "consistency check failed on column " + std::to_string(col), out);
      return;
    }
  }
  z3_ = true;
  if (cfg_.processes.evaluation) {
    RelayMessage req{RelayKind::kEvalRequest, {}, {}};
    SealedRelay sealed = channel_->seal(1, encode(req, wire_));
    out.send(kExchanger, MsgType::kSealedRelay, header_.id, encode(sealed));
  }
}

void Originator::on_eval(const EvalMaterial& m) {
  if (!z3_ || !*z3_ || result_) return;
  const auto& params = cfg_.params;
  const auto& c_b = *c_b_;
  const BigInt half_q = params.q / 2;
  QueryResult res;
  res.kind = cfg_.kind;
  switch (cfg_.kind) {
    case QueryKind::kSum:
    case QueryKind::kCount: {
      const size_t col = cfg_.kind == QueryKind::kSum ? 0 : 1;
      if (m.value < 0 || m.value >= half_q || !crypto::pedersen_verify_open(params, c_b[col], m.value, m.randomness)) {
        record_abort(AbortKind::kEvaluationRejected, "opening does not match the borrower commitment");
        return;
      }
      res.value = m.value;
      break;
    }
    case QueryKind::kVariance: {
      if (!m.f2 || !m.mul) {
        record_abort(AbortKind::kEvaluationRejected, "variance material incomplete");
        return;
      }
      if (!zk::verify_multiplication(params, c_b[0], c_b[0], *m.f2, *m.mul,
                                     proof_context(header_.id, "variance-square"))) {
        record_abort(AbortKind::kEvaluationRejected, "multiplication proof rejected");
        return;
      }
      const BigInt n = cfg_.lender_count;
      // F_3 = F_1^n * F_2^-1 commits to n * sum x^2 - (sum x)^2.
      crypto::Commitment f3 = crypto::commit_mul(params, crypto::commit_pow(params, c_b[1], n),
                                                 crypto::commit_inv(params, *m.f2));
      if (m.value < 0 || m.value >= half_q || !crypto::pedersen_verify_open(params, f3, m.value, m.randomness)) {
        record_abort(AbortKind::kEvaluationRejected, "variance opening rejected");
        return;
      }
      res.value = m.value;
      res.denominator = n * n;
      break;
    }
    case QueryKind::kCmpPublic: {
      if (!m.cmp) {
        record_abort(AbortKind::kEvaluationRejected, "comparison proof missing");
        return;
      }
      auto claim = zk::verify_comparison(params, c_b[0], cfg_.threshold, cfg_.range_bits, *m.cmp,
                                         proof_context(header_.id, "comparison"));
      if (!claim) {
        record_abort(AbortKind::kEvaluationRejected, "comparison proof rejected");
        return;
      }
      res.less_than = *claim;
      break;
    }
    case QueryKind::kCmpPrivate:
      record_abort(AbortKind::kUnsupportedQuery, "cmp_private is not supported");
      return;
  }
  result_ = res;
}

void Originator::abort_session(AbortKind kind, std::string detail, Outbox& out) {
  record_abort(kind, detail);
  out.send(kExchanger, MsgType::kAbort, header_.id, encode(AbortNotice{kind, std::move(detail)}));
}

}  // namespace octopus::protocol
