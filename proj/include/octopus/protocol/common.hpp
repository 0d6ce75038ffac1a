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

#include <optional>
#include <string>
#include <vector>

#include "octopus/crypto/paillier.hpp"
#include "octopus/crypto/pedersen.hpp"
#include "octopus/crypto/prf.hpp"
#include "octopus/protocol/messages.hpp"

namespace octopus::protocol {

// Values committed in each payload column for one loan of `amount`.
std::vector<BigInt> column_values(QueryKind kind, uint64_t amount);

// "rc" || uid || value || date, with a column suffix beyond column 0.
Bytes commitment_label(const std::string& uid, const BigInt& value, const std::string& date, size_t col);
// "rc" || uid || date, with the same column suffix rule.
Bytes originator_label(const std::string& uid, const std::string& date, size_t col);

BigInt commitment_randomness(const crypto::PrfSeed& seed, ByteSpan label, const crypto::PedersenParams& params);

// y_u = PRF_tau_eu("y" || r_e || date), below 2^min(256, bits - 1).
BigInt group_secret(const crypto::PrfSeed& tau_eu, const BigInt& r_e, const std::string& date,
                    const crypto::PaillierPublicKey& pk);
BigInt group_secret_range(const crypto::PaillierPublicKey& pk);
// r = PRF_tau_ob("r" || pk || b || date), mapped into Z_n^*.
BigInt auth_randomness(const crypto::PrfSeed& tau_ob, const crypto::PaillierPublicKey& pk, const std::string& uid,
                       const std::string& date);

// Delta r_b = r_b - r_o - sum r_i (mod q).
BigInt borrower_delta(const BigInt& r_b, const BigInt& r_o, const std::vector<BigInt>& r_i, const BigInt& q);
// Delta r = Delta r_b - r_z (mod q).
BigInt exchanger_delta(const BigInt& delta_rb, const BigInt& r_z, const BigInt& q);
crypto::Commitment aggregate(const crypto::PedersenParams& params, const std::vector<crypto::Commitment>& cs);
// c_b == c * h^(Delta r + r_o).
bool consistency_check(const crypto::PedersenParams& params, const crypto::Commitment& c_b,
                       const crypto::Commitment& c, const BigInt& delta_r, const BigInt& r_o);

// AES-GCM channel between borrower and originator keyed by
// PRF_tau_ob("channel" || date). The exchanger relays it without the key.
class RelayChannel {
 public:
  RelayChannel(const crypto::PrfSeed& tau_ob, const std::string& date, const SessionId& session);

  SealedRelay seal(uint8_t direction, ByteSpan plain);
  std::optional<Bytes> open(const SealedRelay& msg) const;

 private:
  Bytes key_;
  SessionId session_;
  uint64_t counters_[2] = {0, 0};
};

// Proof contexts bind every proof to its session.
Bytes proof_context(const SessionId& session, std::string_view purpose);

}  // namespace octopus::protocol
