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

#include "octopus/protocol/roles.hpp"

namespace octopus::protocol {

struct SessionConfig {
  const registry::Registry* registry = nullptr;
  crypto::PedersenParams params;
  const crypto::PaillierKeyPair* keys = nullptr;
  std::string borrower_uid;
  std::string date = "2026-01-01";
  // Participating lenders; every registered lender when empty.
  std::vector<std::string> lender_ids;
  pir::QueryShape shape;  // capacity must equal the registry group size
  dp::DpParams dp;        // epsilon, delta, k, s; d and m follow the shape
  QueryKind kind = QueryKind::kSum;
  BigInt threshold;
  unsigned range_bits = 32;
  Adversary adversary;
  Processes processes;
  uint64_t seed = 1;
  std::optional<std::map<pir::ResponseType, uint64_t>> forced_noise;
  const dp::NoiseBatch* noise_batch = nullptr;
};

struct SessionOutcome {
  AbortKind abort = AbortKind::kNone;
  std::string abort_detail;
  std::optional<bool> z1, z2, z3;
  std::optional<QueryResult> result;
  std::vector<uint64_t> type_counts;
  std::map<pir::ResponseType, uint64_t> noise_counts;
  size_t responses_released = 0;
  // Handling time per "role:message" step, in seconds.
  std::map<std::string, double> step_seconds;
  std::vector<pir::RespondStats> lender_stats;

  bool ok() const { return abort == AbortKind::kNone; }
};

// Runs the enabled processes to quiescence over `transport`. Roles exchange
// frames only through the transport; delivery is round-robin over endpoints
// in a fixed order, so a fixed seed replays the session exactly.
SessionOutcome run_session(const SessionConfig& cfg, Transport& transport);

// All three processes with gating and evaluation.
SessionOutcome run_octopus(const SessionConfig& cfg, Transport& transport);
// Authorization only: reports (z1, z2).
SessionOutcome run_anonymous_authorization(const SessionConfig& cfg, Transport& transport);
// Aggregation and consistency check only, no authorization gate: reports z3.
SessionOutcome run_secure_aggregation(const SessionConfig& cfg, Transport& transport);
// Aggregation followed by evaluation, no authorization gate.
SessionOutcome run_secure_evaluation(const SessionConfig& cfg, Transport& transport);

// The plaintext answer a session should produce, from the registry directly.
QueryResult plaintext_oracle(const registry::Registry& reg, const std::string& uid,
                             const std::vector<std::string>& lender_ids, QueryKind kind, const BigInt& threshold);

}  // namespace octopus::protocol
