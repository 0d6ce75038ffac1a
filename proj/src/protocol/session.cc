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

#include "octopus/protocol/session.hpp"

#include <chrono>
#include <stdexcept>

namespace octopus::protocol {

void Outbox::send(const Endpoint& to, MsgType type, const SessionId& session, Bytes body) {
  transport_.send(self_, to, encode_frame(Envelope{type, session, std::move(body)}));
}

void Role::record_abort(AbortKind kind, std::string detail) {
  if (abort_ != AbortKind::kNone) return;
  abort_ = kind;
  abort_detail_ = std::move(detail);
}

double QueryResult::as_double() const {
  if (kind == QueryKind::kCmpPublic) return less_than ? 1.0 : 0.0;
  return value.get_d() / denominator.get_d();
}

std::string QueryResult::str() const {
  switch (kind) {
    case QueryKind::kCmpPublic:
      return less_than ? "below-threshold" : "at-or-above-threshold";
    case QueryKind::kVariance:
      return value.get_str() + "/" + denominator.get_str();
    default:
      return value.get_str();
  }
}

namespace {

std::vector<std::string> participating(const SessionConfig& cfg) {
  if (!cfg.lender_ids.empty()) return cfg.lender_ids;
  return {cfg.registry->lenders().begin(), cfg.registry->lenders().end()};
}

}  // namespace

SessionOutcome run_session(const SessionConfig& cfg, Transport& transport) {
  if (!cfg.registry || !cfg.keys) throw std::invalid_argument("session needs a registry and a key pair");
  const auto& reg = *cfg.registry;
  if (cfg.shape.capacity() != reg.group_size()) throw std::invalid_argument("shape capacity != group size");
  const registry::UserRecord* user = reg.find_user(cfg.borrower_uid);
  if (!user) throw std::invalid_argument("borrower is not registered: " + cfg.borrower_uid);
  const std::vector<std::string> lenders = participating(cfg);
  if (cfg.kind == QueryKind::kCmpPublic && (cfg.range_bits == 0 || cfg.range_bits > zk::max_range_bits(cfg.params))) {
    throw std::invalid_argument("range_bits does not fit the Pedersen group");
  }

  Rng root(cfg.seed);
  // tau_ob: set up between originator and borrower before the session.
  Rng setup = root.fork("setup");
  crypto::PrfSeed tau_ob = crypto::PrfSeed::random(setup);

  dp::DpParams dp = cfg.dp;
  dp.d = cfg.shape.d();
  dp.m = cfg.shape.capacity();
  dp.validate();

  OriginatorConfig ocfg;
  ocfg.keys = *cfg.keys;
  ocfg.params = cfg.params;
  ocfg.borrower_uid = cfg.borrower_uid;
  ocfg.gid = user->gid;
  ocfg.pid = user->pid;
  ocfg.tau_ob = tau_ob;
  ocfg.date = cfg.date;
  ocfg.kind = cfg.kind;
  ocfg.threshold = cfg.threshold;
  ocfg.range_bits = cfg.range_bits;
  ocfg.shape = cfg.shape;
  ocfg.dp = dp;
  ocfg.lender_count = static_cast<uint32_t>(lenders.size());
  ocfg.processes = cfg.processes;
  ocfg.bad_query = cfg.adversary.bad_query;
  Originator originator(std::move(ocfg), root.fork("originator"));

  ExchangerConfig ecfg;
  ecfg.registry = &reg;
  ecfg.params = cfg.params;
  ecfg.lender_ids = lenders;
  ecfg.processes = cfg.processes;
  ecfg.forced_noise = cfg.forced_noise;
  ecfg.noise_batch = cfg.noise_batch;
  Exchanger exchanger(std::move(ecfg), root.fork("exchanger"));

  BorrowerConfig bcfg;
  bcfg.uid = cfg.borrower_uid;
  bcfg.tau_eu = user->tau_eu;
  bcfg.tau_ob = tau_ob;
  for (const auto& loan : reg.loans_of(cfg.borrower_uid)) {
    for (const auto& id : lenders) {
      if (id == loan.lender_id) bcfg.loans.push_back(BorrowerLoan{loan.lender_id, loan.amount, loan.tau_iu});
    }
  }
  bcfg.params = cfg.params;
  bcfg.processes = cfg.processes;
  bcfg.adversary = cfg.adversary;
  Borrower borrower(std::move(bcfg), root.fork("borrower"));

  std::vector<std::unique_ptr<Lender>> lender_roles;
  for (size_t i = 0; i < lenders.size(); ++i) {
    LenderConfig lcfg;
    lcfg.lender_id = lenders[i];
    lcfg.params = cfg.params;
    lcfg.loans = reg.loans_at(lenders[i]);
    lcfg.groups = reg.sync_groups(lenders[i], cfg.date);
    lcfg.corrupt_response = cfg.adversary.corrupt_response && i == 0;
    lender_roles.push_back(std::make_unique<Lender>(std::move(lcfg), root.fork("lender/" + lenders[i])));
  }

  std::vector<Role*> roles{&originator, &exchanger, &borrower};
  for (auto& l : lender_roles) roles.push_back(l.get());

  SessionOutcome outcome;
  using Clock = std::chrono::steady_clock;
  {
    auto t0 = Clock::now();
    Outbox out(transport, kOriginator);
    originator.start(out);
    outcome.step_seconds["originator:start"] = std::chrono::duration<double>(Clock::now() - t0).count();
  }
  for (bool progressed = true; progressed;) {
    progressed = false;
    for (Role* role : roles) {
      Outbox out(transport, role->endpoint());
      while (auto delivery = transport.poll(role->endpoint())) {
        progressed = true;
        Envelope env = decode_frame(delivery->frame);
        auto t0 = Clock::now();
        role->handle(delivery->from, env, out);
        std::string step = role->endpoint().substr(0, role->endpoint().find('/')) + ":" + to_string(env.type);
        outcome.step_seconds[step] += std::chrono::duration<double>(Clock::now() - t0).count();
      }
    }
  }

  for (Role* role : roles) {
    if (role->aborted()) {
      outcome.abort = role->abort();
      outcome.abort_detail = role->abort_detail();
      break;
    }
  }
  outcome.z1 = exchanger.z1();
  outcome.z2 = exchanger.z2();
  outcome.z3 = originator.z3();
  outcome.result = originator.result();
  outcome.type_counts = originator.type_counts();
  outcome.noise_counts = exchanger.noise_counts();
  outcome.responses_released = originator.responses_seen();
  for (auto& l : lender_roles) {
    if (l->last_stats()) outcome.lender_stats.push_back(*l->last_stats());
  }
  if (outcome.ok() && cfg.processes.aggregation && cfg.processes.evaluation && !outcome.result) {
    throw std::logic_error("session ended without a result or an abort");
  }
  return outcome;
}

SessionOutcome run_octopus(const SessionConfig& cfg, Transport& transport) {
  SessionConfig c = cfg;
  c.processes = Processes{true, true, true};
  return run_session(c, transport);
}

SessionOutcome run_anonymous_authorization(const SessionConfig& cfg, Transport& transport) {
  SessionConfig c = cfg;
  c.processes = Processes{true, false, false};
  return run_session(c, transport);
}

SessionOutcome run_secure_aggregation(const SessionConfig& cfg, Transport& transport) {
  SessionConfig c = cfg;
  c.processes = Processes{false, true, false};
  return run_session(c, transport);
}

SessionOutcome run_secure_evaluation(const SessionConfig& cfg, Transport& transport) {
  SessionConfig c = cfg;
  c.processes = Processes{false, true, true};
  return run_session(c, transport);
}

QueryResult plaintext_oracle(const registry::Registry& reg, const std::string& uid,
                             const std::vector<std::string>& lender_ids, QueryKind kind, const BigInt& threshold) {
  std::vector<std::string> lenders = lender_ids;
  if (lenders.empty()) lenders.assign(reg.lenders().begin(), reg.lenders().end());
  BigInt sum = 0, sum_sq = 0, count = 0;
  for (const auto& loan : reg.loans_of(uid)) {
    bool participating = false;
    for (const auto& id : lenders) participating = participating || id == loan.lender_id;
    if (!participating) continue;
    BigInt x(static_cast<unsigned long>(loan.amount));
    sum += x;
    sum_sq += x * x;
    count += 1;
  }
  QueryResult r;
  r.kind = kind;
  switch (kind) {
    case QueryKind::kSum:
      r.value = sum;
      break;
    case QueryKind::kCount:
      r.value = count;
      break;
    case QueryKind::kVariance: {
      const BigInt n = static_cast<unsigned long>(lenders.size());
      r.value = n * sum_sq - sum * sum;
      r.denominator = n * n;
      break;
    }
    case QueryKind::kCmpPublic:
      r.less_than = sum < threshold;
      break;
    case QueryKind::kCmpPrivate:
      throw std::invalid_argument("cmp_private has no oracle");
  }
  return r;
}

}  // namespace octopus::protocol
