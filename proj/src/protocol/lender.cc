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

#include <map>
#include <stdexcept>

#include "octopus/pir/respond.hpp"
#include "octopus/protocol/roles.hpp"

namespace octopus::protocol {

Lender::Lender(LenderConfig cfg, Rng rng)
    : cfg_(std::move(cfg)), endpoint_(lender_endpoint(cfg_.lender_id)), rng_(std::move(rng)) {}

pir::SparseDatabase Lender::build_database(const SessionHeader& header) const {
  const auto& params = cfg_.params;
  const size_t width = params.element_bytes();
  pir::SparseDatabase db(header.shape, static_cast<uint32_t>(header.payload_len(params)));
  const registry::GroupSnapshot* group = nullptr;
  for (const auto& g : cfg_.groups) {
    if (g.gid == header.gid) group = &g;
  }
  if (!group) return db;
  std::map<std::string, const registry::LoanRecord*> by_uid;
  for (const auto& loan : cfg_.loans) by_uid[loan.uid] = &loan;
  for (const auto& [pid, uid] : group->occupancy) {
    auto it = by_uid.find(uid);
    if (it == by_uid.end()) continue;
    const registry::LoanRecord& loan = *it->second;
    Bytes payload;
    std::vector<BigInt> values = column_values(header.kind, loan.amount);
    for (size_t col = 0; col < values.size(); ++col) {
      BigInt r = commitment_randomness(loan.tau_iu, commitment_label(uid, values[col], header.date, col), params);
      Bytes c = to_bytes_be(crypto::pedersen_commit(params, values[col], r).value, width);
      payload.insert(payload.end(), c.begin(), c.end());
    }
    db.put(pid, std::move(payload));
  }
  return db;
}

void Lender::handle(const Endpoint& from, const Envelope& env, Outbox& out) {
  if (from != kExchanger || aborted()) return;
  if (env.type == MsgType::kSessionOpen) {
    if (open_) return;
    open_ = decode_session_open(env.body);
    wire_ = WireContext{&open_->pk, &cfg_.params};
    db_ = build_database(open_->header);
    return;
  }
  if (!open_ || env.session != open_->header.id) return;
  if (env.type == MsgType::kAbort) {
    AbortNotice n = decode_abort(env.body);
    record_abort(n.kind, n.detail);
    return;
  }
  if (env.type != MsgType::kLenderQuery) return;
  const auto& h = open_->header;
  pir::PirQuery query = decode_lender_query(env.body, wire_).query;
  if (!(query.shape == h.shape)) return;
  pir::RespondStats stats;
  pir::RespondResult result = pir::sparse_respond(query, *db_, h.s, rng_, &stats);
  stats_ = stats;
  pir::PirResponse resp =
      pir::finalize_response(open_->pk, result, h.shape.d(), h.payload_len(cfg_.params), rng_);
  if (cfg_.corrupt_response && !resp.body.chunks.empty()) resp.body.chunks.pop_back();
  out.send(kExchanger, MsgType::kLenderResponse, h.id, encode(LenderResponse{resp.body}, wire_));
}

}  // namespace octopus::protocol
