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

#include "octopus/protocol/common.hpp"

#include <algorithm>

#include "octopus/crypto/hash.hpp"

namespace octopus::protocol {

std::vector<BigInt> column_values(QueryKind kind, uint64_t amount) {
  BigInt x(static_cast<unsigned long>(amount));
  switch (kind) {
    case QueryKind::kCount:
      return {x, BigInt(1)};
    case QueryKind::kVariance:
      return {x, x * x};
    default:
      return {x};
  }
}

Bytes commitment_label(const std::string& uid, const BigInt& value, const std::string& date, size_t col) {
  if (col == 0) return crypto::prf_label({"rc", uid, value.get_str(), date});
  return crypto::prf_label({"rc", uid, value.get_str(), date, "col" + std::to_string(col)});
}

Bytes originator_label(const std::string& uid, const std::string& date, size_t col) {
  if (col == 0) return crypto::prf_label({"rc", uid, date});
  return crypto::prf_label({"rc", uid, date, "col" + std::to_string(col)});
}

BigInt commitment_randomness(const crypto::PrfSeed& seed, ByteSpan label, const crypto::PedersenParams& params) {
  return crypto::prf_eval(seed, label, params.q);
}

BigInt group_secret_range(const crypto::PaillierPublicKey& pk) {
  return BigInt(1) << std::min<size_t>(256, pk.bits - 1);
}

BigInt group_secret(const crypto::PrfSeed& tau_eu, const BigInt& r_e, const std::string& date,
                    const crypto::PaillierPublicKey& pk) {
  return crypto::prf_eval(tau_eu, crypto::prf_label({"y", r_e.get_str(16), date}), group_secret_range(pk));
}

BigInt auth_randomness(const crypto::PrfSeed& tau_ob, const crypto::PaillierPublicKey& pk, const std::string& uid,
                       const std::string& date) {
  Bytes label = crypto::prf_label({"r", to_hex(pk.fingerprint()), uid, date});
  BigInt r = crypto::prf_eval(tau_ob, label, pk.n - 1) + 1;
  // A non-unit here would factor n; treat it as unreachable but stay total.
  return gcd(r, pk.n) == 1 ? r : BigInt(1);
}

BigInt borrower_delta(const BigInt& r_b, const BigInt& r_o, const std::vector<BigInt>& r_i, const BigInt& q) {
  BigInt acc = r_b - r_o;
  for (const auto& r : r_i) acc -= r;
  return mod(acc, q);
}

BigInt exchanger_delta(const BigInt& delta_rb, const BigInt& r_z, const BigInt& q) { return mod(delta_rb - r_z, q); }

crypto::Commitment aggregate(const crypto::PedersenParams& params, const std::vector<crypto::Commitment>& cs) {
  crypto::Commitment acc = crypto::commit_identity();
  for (const auto& c : cs) acc = crypto::commit_mul(params, acc, c);
  return acc;
}

bool consistency_check(const crypto::PedersenParams& params, const crypto::Commitment& c_b,
                       const crypto::Commitment& c, const BigInt& delta_r, const BigInt& r_o) {
  BigInt rhs = mod(c.value * powm(params.h, mod(delta_r + r_o, params.q), params.p), params.p);
  return c_b.value == rhs;
}

RelayChannel::RelayChannel(const crypto::PrfSeed& tau_ob, const std::string& date, const SessionId& session)
    : key_(crypto::prf_bytes(tau_ob, crypto::prf_label({"channel", date}), 32)), session_(session) {}

namespace {

Bytes relay_nonce(uint8_t direction, uint64_t counter) {
  ByteWriter w;
  w.put_u8(direction);
  w.put_u8(0);
  w.put_u16(0);
  w.put_u64(counter);
  return w.take();
}

}  // namespace

SealedRelay RelayChannel::seal(uint8_t direction, ByteSpan plain) {
  if (direction > 1) throw std::invalid_argument("relay direction must be 0 or 1");
  SealedRelay msg;
  msg.direction = direction;
  msg.counter = counters_[direction]++;
  msg.sealed = crypto::aes_gcm_seal(key_, relay_nonce(direction, msg.counter), plain, session_);
  return msg;
}

std::optional<Bytes> RelayChannel::open(const SealedRelay& msg) const {
  return crypto::aes_gcm_open(key_, relay_nonce(msg.direction, msg.counter), msg.sealed, session_);
}

Bytes proof_context(const SessionId& session, std::string_view purpose) {
  ByteWriter w;
  w.put_bytes(session);
  w.put_string(purpose);
  return w.take();
}

}  // namespace octopus::protocol
