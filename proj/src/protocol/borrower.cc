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

namespace octopus::protocol {

Borrower::Borrower(BorrowerConfig cfg, Rng rng) : cfg_(std::move(cfg)), rng_(std::move(rng)) {}

void Borrower::handle(const Endpoint& from, const Envelope& env, Outbox& out) {
  if (from != kExchanger || aborted()) return;
  if (env.type == MsgType::kSessionOpen) {
    if (!open_) on_open(decode_session_open(env.body), out);
    return;
  }
  if (!open_ || env.session != open_->header.id) return;
  switch (env.type) {
    case MsgType::kAuthNonce:
      on_nonce(decode_auth_nonce(env.body), out);
      break;
    case MsgType::kSealedRelay: {
      SealedRelay m = decode_sealed_relay(env.body);
      if (m.direction != 1) return;
      std::optional<Bytes> plain = channel_->open(m);
      if (!plain) return;
      if (decode_relay(*plain, wire_).kind == RelayKind::kEvalRequest) on_eval_request(out);
      break;
    }
    case MsgType::kAbort: {
      AbortNotice n = decode_abort(env.body);
      record_abort(n.kind, n.detail);
      break;
    }
    default:
      break;
  }
}

void Borrower::on_open(const SessionOpen& m, Outbox& out) {
  open_ = m;
  wire_ = WireContext{&open_->pk, &cfg_.params};
  const auto& h = open_->header;
  const auto& params = cfg_.params;
  channel_.emplace(cfg_.tau_ob, h.date, h.id);
  if (!cfg_.processes.aggregation) return;

  const size_t columns = h.columns();
  totals_.assign(columns, BigInt(0));
  std::vector<std::vector<BigInt>> r_i(columns);
  for (const auto& loan : cfg_.loans) {
    std::vector<BigInt> values = column_values(h.kind, loan.amount);
    for (size_t col = 0; col < columns; ++col) {
      totals_[col] += values[col];
      r_i[col].push_back(commitment_randomness(loan.tau, commitment_label(cfg_.uid, values[col], h.date, col), params));
    }
  }
  if (cfg_.adversary.lie_sum) totals_[0] += 1;

  BorrowerDelta delta;
  r_b_.clear();
  c_b_.clear();
  for (size_t col = 0; col < columns; ++col) {
    r_b_.push_back(rng_.below(params.q));
    c_b_.push_back(crypto::pedersen_commit(params, totals_[col], r_b_[col]));
    BigInt r_o = commitment_randomness(cfg_.tau_ob, originator_label(cfg_.uid, h.date, col), params);
    delta.delta_rb.push_back(borrower_delta(r_b_[col], r_o, r_i[col], params.q));
  }
  out.send(kExchanger, MsgType::kBorrowerDelta, h.id, encode(delta));
  RelayMessage commit{RelayKind::kBorrowerCommit, BorrowerCommit{c_b_}, {}};
  send_relay(commit, out);
}

void Borrower::on_nonce(const AuthNonce& m, Outbox& out) {
  const auto& h = open_->header;
  const auto& pk = open_->pk;
  crypto::PrfSeed tau_eu = cfg_.tau_eu;
  if (cfg_.adversary.impostor) tau_eu = crypto::PrfSeed::random(rng_);
  BigInt y = group_secret(tau_eu, m.r_e, h.date, pk);
  BigInt r = auth_randomness(cfg_.tau_ob, pk, cfg_.uid, h.date);
  BorrowerCipher msg;
  msg.c = crypto::paillier_encrypt(pk, y, r);

  SessionId ctx_session = h.id;
  if (cfg_.adversary.replay_proof) {
    // A proof lifted from an earlier session carries that session's context.
    ctx_session[0] ^= 0x5a;
  }
  ByteWriter ctx;
  ctx.put_bytes(proof_context(ctx_session, "knowledge"));
  write_int(ctx, m.r_e);
  msg.proof = zk::prove_plaintext_knowledge(pk, msg.c, y, r, ctx.view(), rng_);
  out.send(kExchanger, MsgType::kBorrowerCipher, h.id, encode(msg, wire_));
}

void Borrower::on_eval_request(Outbox& out) {
  const auto& h = open_->header;
  const auto& params = cfg_.params;
  RelayMessage reply{RelayKind::kEvalMaterial, {}, {}};
  EvalMaterial& e = reply.eval;
  switch (h.kind) {
    case QueryKind::kSum:
      e.value = totals_[0];
      e.randomness = r_b_[0];
      break;
    case QueryKind::kCount:
      e.value = totals_[1];
      e.randomness = r_b_[1];
      break;
    case QueryKind::kVariance: {
      const BigInt n = h.lender_count;
      const BigInt& x = totals_[0];
      BigInt r2 = rng_.below(params.q);
      crypto::Commitment f2 = crypto::pedersen_commit(params, x * x, r2);
      e.f2 = f2;
      e.mul = zk::prove_multiplication(params, c_b_[0], c_b_[0], f2, x, r_b_[0], r_b_[0], r2,
                                       proof_context(h.id, "variance-square"), rng_);
      e.value = mod(n * totals_[1] - x * x, params.q);
      e.randomness = mod(n * r_b_[1] - r2, params.q);
      break;
    }
    case QueryKind::kCmpPublic:
      e.cmp = zk::prove_comparison(params, c_b_[0], totals_[0], r_b_[0], h.threshold, h.range_bits,
                                   proof_context(h.id, "comparison"), rng_);
      break;
    case QueryKind::kCmpPrivate:
      return;
  }
  send_relay(reply, out);
}

void Borrower::send_relay(const RelayMessage& m, Outbox& out) {
  SealedRelay sealed = channel_->seal(0, encode(m, wire_));
  out.send(kExchanger, MsgType::kSealedRelay, open_->header.id, encode(sealed));
}

}  // namespace octopus::protocol
