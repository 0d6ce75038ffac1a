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

Exchanger::Exchanger(ExchangerConfig cfg, Rng rng) : cfg_(std::move(cfg)), rng_(std::move(rng)) {
  if (!cfg_.registry) throw std::invalid_argument("exchanger needs the registry");
}

void Exchanger::handle(const Endpoint& from, const Envelope& env, Outbox& out) {
  if (env.type == MsgType::kSessionOpen) {
    if (from != kOriginator || open_) return;
    on_open(decode_session_open(env.body), out);
    return;
  }
  if (!open_ || env.session != open_->header.id) return;
  const SessionId& sid = open_->header.id;
  if (env.type == MsgType::kAbort) {
    AbortNotice n = decode_abort(env.body);
    if (!aborted()) {
      record_abort(n.kind, n.detail);
      broadcast_abort(n.kind, n.detail, from, out);
    }
    return;
  }
  if (aborted()) return;
  switch (env.type) {
    case MsgType::kBorrowerCipher:
      if (from != kBorrower) return;
      cipher_ = decode_borrower_cipher(env.body, wire_);
      try_authorize(out);
      break;
    case MsgType::kQuerySubmit: {
      if (from != kOriginator || query_) return;
      QuerySubmit m = decode_query_submit(env.body, wire_);
      if (!(m.query.shape == open_->header.shape)) {
        z1_ = false;
      } else if (cfg_.processes.authorization) {
        z1_ = zk::verify_valid_query(m.query, m.proof, proof_context(sid, "valid-query"));
      }
      if (z1_ && !*z1_) {
        broadcast_abort(AbortKind::kInvalidQuery, "valid-query proof rejected", "", out);
        return;
      }
      query_ = std::move(m.query);
      if (cfg_.processes.aggregation) {
        Bytes body = encode(LenderQuery{*query_});
        for (const auto& id : cfg_.lender_ids) out.send(lender_endpoint(id), MsgType::kLenderQuery, sid, body);
      }
      try_authorize(out);
      break;
    }
    case MsgType::kCorrespondence:
      if (from != kOriginator) return;
      correspondence_ = decode_correspondence(env.body);
      try_authorize(out);
      break;
    case MsgType::kLenderResponse:
      if (!from.starts_with("lender/")) return;
      responses_.emplace(from, decode_lender_response(env.body, wire_).body);
      try_release(out);
      break;
    case MsgType::kBorrowerDelta:
      if (from != kBorrower) return;
      delta_ = decode_borrower_delta(env.body);
      try_release(out);
      break;
    case MsgType::kSealedRelay: {
      // Opaque to the exchanger; only the direction is read.
      SealedRelay m = decode_sealed_relay(env.body);
      if (m.direction == 0 && from == kBorrower) out.send(kOriginator, MsgType::kSealedRelay, sid, env.body);
      if (m.direction == 1 && from == kOriginator) out.send(kBorrower, MsgType::kSealedRelay, sid, env.body);
      break;
    }
    default:
      break;
  }
}

void Exchanger::on_open(const SessionOpen& m, Outbox& out) {
  open_ = m;
  wire_ = WireContext{&open_->pk, &cfg_.params};
  const auto& h = open_->header;
  const SessionId& sid = h.id;
  Bytes body = encode(*open_);
  out.send(kBorrower, MsgType::kSessionOpen, sid, body);
  if (cfg_.processes.aggregation) {
    for (const auto& id : cfg_.lender_ids) out.send(lender_endpoint(id), MsgType::kSessionOpen, sid, body);
  }
  if (!cfg_.processes.authorization) return;

  r_e_ = zk::random_challenge(rng_);
  out.send(kBorrower, MsgType::kAuthNonce, sid, encode(AuthNonce{r_e_}));

  // Slots without a registered user get values from a pad seed only the
  // exchanger knows, so the dataset stays pairwise distinct.
  crypto::PrfSeed pad = crypto::PrfSeed::random(rng_);
  const auto& pk = open_->pk;
  const uint64_t capacity = h.shape.capacity();
  if (capacity != cfg_.registry->group_size()) throw std::invalid_argument("shape capacity != group size");
  dataset_.clear();
  for (uint64_t pid = 0; pid < capacity; ++pid) {
    const registry::UserRecord* u = cfg_.registry->user_at(h.gid, pid);
    if (u) {
      dataset_.push_back(group_secret(u->tau_eu, r_e_, h.date, pk));
    } else {
      dataset_.push_back(crypto::prf_eval(pad, crypto::prf_label({"pad", r_e_.get_str(16), std::to_string(pid)}),
                                          group_secret_range(pk)));
    }
  }
  out.send(kOriginator, MsgType::kGroupSecrets, sid, encode(GroupSecrets{dataset_}));
}

void Exchanger::try_authorize(Outbox& out) {
  if (!cfg_.processes.authorization || z2_ || !cipher_ || !correspondence_ || !query_) return;
  const SessionId& sid = open_->header.id;
  Bytes knowledge_ctx = proof_context(sid, "knowledge");
  ByteWriter w;
  w.put_bytes(knowledge_ctx);
  write_int(w, r_e_);
  bool knows = zk::verify_plaintext_knowledge(open_->pk, cipher_->c, cipher_->proof, w.view());
  bool corresponds = zk::verify_correspondence(*query_, cipher_->c, dataset_, correspondence_->proof,
                                               proof_context(sid, "correspondence"));
  z2_ = knows && corresponds;
  if (!*z2_) {
    broadcast_abort(AbortKind::kUnauthorized, knows ? "correspondence proof rejected" : "knowledge proof rejected",
                    "", out);
    return;
  }
  try_release(out);
}

void Exchanger::try_release(Outbox& out) {
  if (!cfg_.processes.aggregation || released_ || aborted() || !delta_) return;
  if (cfg_.processes.authorization && !(z1_.value_or(false) && z2_.value_or(false))) return;
  if (responses_.size() != cfg_.lender_ids.size()) return;

  const auto& h = open_->header;
  const auto& pk = open_->pk;
  const size_t payload_len = h.payload_len(cfg_.params);
  dp::NoiseBatch noise;
  if (cfg_.noise_batch) {
    noise = *cfg_.noise_batch;
  } else {
    dp::DpParams dp = h.dp;
    dp.d = h.shape.d();
    dp.m = h.shape.capacity();
    dp::LaplacePlan plan = dp::plan_noise(dp, rng_);
    if (cfg_.forced_noise) plan.counts = *cfg_.forced_noise;
    noise = dp::gen_noise_batch(pk, cfg_.params, plan, h.shape.d(), payload_len, rng_);
  }
  if (noise.r_z.size() != h.columns()) throw std::invalid_argument("noise batch column count mismatch");
  if (delta_->delta_rb.size() != h.columns()) {
    broadcast_abort(AbortKind::kInconsistentSum, "borrower delta has the wrong column count", "", out);
    return;
  }
  noise_counts_.clear();
  std::vector<crypto::LayeredCiphertext> mixed;
  for (const auto& [from, body] : responses_) mixed.push_back(body);
  for (auto& resp : noise.responses) {
    ++noise_counts_[resp.type];
    mixed.push_back(std::move(resp.body));
  }
  exchanger_shuffle(mixed, rng_);

  ResponseBatch batch;
  batch.responses = std::move(mixed);
  for (size_t col = 0; col < h.columns(); ++col) {
    batch.delta_r.push_back(exchanger_delta(delta_->delta_rb[col], noise.r_z[col], cfg_.params.q));
  }
  released_ = true;
  out.send(kOriginator, MsgType::kResponseBatch, h.id, encode(batch, wire_));
}

void Exchanger::broadcast_abort(AbortKind kind, std::string detail, const Endpoint& except, Outbox& out) {
  record_abort(kind, detail);
  const SessionId& sid = open_->header.id;
  Bytes body = encode(AbortNotice{kind, std::move(detail)});
  std::vector<Endpoint> targets{kOriginator, kBorrower};
  if (cfg_.processes.aggregation) {
    for (const auto& id : cfg_.lender_ids) targets.push_back(lender_endpoint(id));
  }
  for (const auto& to : targets) {
    if (to != except) out.send(to, MsgType::kAbort, sid, body);
  }
}

}  // namespace octopus::protocol
