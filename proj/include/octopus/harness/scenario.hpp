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

#include "octopus/dp/noise.hpp"
#include "octopus/harness/config.hpp"
#include "octopus/protocol/session.hpp"

namespace octopus::harness {

struct ScenarioConfig {
  unsigned lenders = 3;
  std::vector<uint32_t> shape{3, 4};
  unsigned s = 1;
  double sparsity = 0.25;  // fraction of group slots each lender has a loan in
  double epsilon = 0.7;
  double delta = 1e-4;
  unsigned k = 5;
  protocol::QueryKind kind = protocol::QueryKind::kCmpPublic;
  uint64_t threshold = 150000;
  unsigned range_bits = 32;
  uint64_t max_amount = 100000;
  size_t paillier_bits = 1024;
  size_t pedersen_p_bits = 480;
  size_t pedersen_q_bits = 256;
  protocol::Adversary adversary;
  uint64_t seed = 1;
  std::string transport = "inproc";
  std::string date = "2026-01-01";
  std::string noise_cache;  // consumed instead of online sampling when set
  size_t noise_index = 0;   // which pregenerated batch to consume

  // Unknown keys and malformed values throw ConfigError.
  void apply(const std::map<std::string, std::string>& kv);
  pir::QueryShape query_shape() const { return pir::QueryShape(shape); }
};

// Key material derived from the scenario seed, so separate invocations agree.
struct ScenarioKeys {
  crypto::PaillierKeyPair paillier;
  crypto::PedersenParams pedersen;
};
ScenarioKeys derive_keys(const ScenarioConfig& cfg);

struct DirectionBytes {
  std::string from, to;
  uint64_t frames = 0;
  uint64_t bytes = 0;
};

struct RunReport {
  std::string transport;
  uint64_t seed = 0;
  std::string borrower;
  protocol::QueryKind kind = protocol::QueryKind::kSum;
  protocol::SessionOutcome outcome;
  std::optional<protocol::QueryResult> expected;
  bool correct = false;  // result matches the plaintext oracle
  std::vector<DirectionBytes> traffic;
  uint64_t total_bytes = 0;      // independent transport counter
  std::string transcript_digest; // SHA-256 over every frame in send order
  double setup_seconds = 0;
  double session_seconds = 0;

  std::string verdict() const { return protocol::to_string(outcome.abort); }
  std::string csv() const;
  std::string summary() const;
};

RunReport run_scenario(const ScenarioConfig& cfg);

struct SizeRow {
  std::string label;
  std::vector<uint32_t> shape;
  size_t key_bits = 0;
  uint64_t predicted_query_bytes = 0;
  uint64_t measured_query_bytes = 0;  // LenderQuery frame on the wire
  uint64_t query_overhead = 0;        // framing, length prefixes and shape
  uint64_t predicted_response_bytes = 0;
  uint64_t measured_response_bytes = 0;  // LenderResponse frame on the wire
  uint64_t response_overhead = 0;
};

// Builds one real query and one real response per shape and serializes them.
std::vector<SizeRow> bench_sizes(const std::vector<std::vector<uint32_t>>& shapes, size_t key_bits, uint64_t seed);
std::string sizes_csv(const std::vector<SizeRow>& rows);

// A file of independently sampled noise batches, all bound to one key.
struct NoiseStore {
  std::vector<dp::NoiseCache> batches;

  Bytes serialize(const crypto::PaillierPublicKey& pk) const;
  static NoiseStore deserialize(ByteSpan data, const crypto::PaillierPublicKey& pk);
};

NoiseStore pregenerate_noise(const ScenarioConfig& cfg, size_t count);
void write_file(const std::string& path, ByteSpan data);
Bytes read_file(const std::string& path);

}  // namespace octopus::harness
