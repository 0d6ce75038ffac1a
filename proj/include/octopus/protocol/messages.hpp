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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "octopus/crypto/layered.hpp"
#include "octopus/crypto/pedersen.hpp"
#include "octopus/dp/noise.hpp"
#include "octopus/pir/query.hpp"
#include "octopus/zk/paillier_proofs.hpp"
#include "octopus/zk/pedersen_proofs.hpp"
#include "octopus/zk/query_proofs.hpp"

namespace octopus::protocol {

using SessionId = std::array<uint8_t, 16>;

enum class QueryKind : uint8_t { kSum = 0, kCount = 1, kVariance = 2, kCmpPublic = 3, kCmpPrivate = 4 };

std::string to_string(QueryKind kind);
// Throws std::invalid_argument for an unknown name.
QueryKind parse_query_kind(std::string_view name);
// Commitment columns in each lender payload: [x], [x, 1] or [x, x^2].
size_t payload_columns(QueryKind kind);

enum class AbortKind : uint8_t {
  kNone = 0,
  kInvalidQuery = 1,
  kUnauthorized = 2,
  kInconsistentSum = 3,
  kMalformedResponse = 4,
  kUnsupportedQuery = 5,
  kEvaluationRejected = 6,
};

std::string to_string(AbortKind kind);

struct SessionHeader {
  SessionId id{};
  uint64_t gid = 0;
  std::string date;  // YYYY-MM-DD, part of every PRF label
  QueryKind kind = QueryKind::kSum;
  BigInt threshold;  // cmp_public only
  unsigned range_bits = 32;
  pir::QueryShape shape;
  unsigned s = 1;
  dp::DpParams dp;
  uint32_t lender_count = 0;

  size_t columns() const { return payload_columns(kind); }
  size_t payload_len(const crypto::PedersenParams& params) const { return columns() * params.element_bytes(); }

  void serialize(ByteWriter& w) const;
  static SessionHeader deserialize(ByteReader& r);
};

enum class MsgType : uint8_t {
  kSessionOpen = 1,
  kAuthNonce = 2,
  kBorrowerCipher = 3,
  kGroupSecrets = 4,
  kQuerySubmit = 5,
  kLenderQuery = 6,
  kCorrespondence = 7,
  kLenderResponse = 8,
  kBorrowerDelta = 9,
  kSealedRelay = 10,
  kResponseBatch = 11,
  kAbort = 12,
};

std::string to_string(MsgType type);

struct Envelope {
  MsgType type;
  SessionId session{};
  Bytes body;
};

// 4-byte length of the rest, 1-byte type, 16-byte session id, body.
inline constexpr size_t kFrameOverhead = 4 + 1 + 16;
Bytes encode_frame(const Envelope& env);
// Throws DecodeError on a short, oversized or inconsistent frame.
Envelope decode_frame(ByteSpan frame);

// Keys and groups needed to decode bodies with fixed-width fields.
struct WireContext {
  const crypto::PaillierPublicKey* pk = nullptr;
  const crypto::PedersenParams* params = nullptr;
};

struct SessionOpen {
  SessionHeader header;
  crypto::PaillierPublicKey pk;
};

struct AuthNonce {
  BigInt r_e;
};

struct BorrowerCipher {
  crypto::Ciphertext c;
  zk::PlaintextKnowledgeProof proof;
};

struct GroupSecrets {
  std::vector<BigInt> y;  // one per slot of the group
};

struct QuerySubmit {
  pir::PirQuery query;
  zk::ValidQueryProof proof;
};

struct LenderQuery {
  pir::PirQuery query;
};

struct Correspondence {
  zk::CorrespondenceProof proof;
};

struct LenderResponse {
  crypto::LayeredCiphertext body;
};

struct BorrowerDelta {
  std::vector<BigInt> delta_rb;  // one per payload column, mod q
};

// Borrower <-> originator traffic relayed by the exchanger under AES-GCM.
struct SealedRelay {
  uint8_t direction = 0;  // 0: borrower to originator, 1: originator to borrower
  uint64_t counter = 0;
  Bytes sealed;
};

struct ResponseBatch {
  std::vector<crypto::LayeredCiphertext> responses;
  std::vector<BigInt> delta_r;
};

struct AbortNotice {
  AbortKind kind = AbortKind::kNone;
  std::string detail;
};

Bytes encode(const SessionOpen& m);
Bytes encode(const AuthNonce& m);
Bytes encode(const BorrowerCipher& m, const WireContext& ctx);
Bytes encode(const GroupSecrets& m);
Bytes encode(const QuerySubmit& m);
Bytes encode(const LenderQuery& m);
Bytes encode(const Correspondence& m);
Bytes encode(const LenderResponse& m, const WireContext& ctx);
Bytes encode(const BorrowerDelta& m);
Bytes encode(const SealedRelay& m);
Bytes encode(const ResponseBatch& m, const WireContext& ctx);
Bytes encode(const AbortNotice& m);

SessionOpen decode_session_open(ByteSpan body);
AuthNonce decode_auth_nonce(ByteSpan body);
BorrowerCipher decode_borrower_cipher(ByteSpan body, const WireContext& ctx);
GroupSecrets decode_group_secrets(ByteSpan body);
QuerySubmit decode_query_submit(ByteSpan body, const WireContext& ctx);
LenderQuery decode_lender_query(ByteSpan body, const WireContext& ctx);
Correspondence decode_correspondence(ByteSpan body);
LenderResponse decode_lender_response(ByteSpan body, const WireContext& ctx);
BorrowerDelta decode_borrower_delta(ByteSpan body);
SealedRelay decode_sealed_relay(ByteSpan body);
ResponseBatch decode_response_batch(ByteSpan body, const WireContext& ctx);
AbortNotice decode_abort(ByteSpan body);

// Plaintexts carried inside SealedRelay.
enum class RelayKind : uint8_t { kBorrowerCommit = 1, kEvalRequest = 2, kEvalMaterial = 3 };

struct BorrowerCommit {
  std::vector<crypto::Commitment> c_b;  // one per payload column
};

struct EvalMaterial {
  // sum and count: opening of the relevant column. variance: opening of F_3.
  BigInt value;
  BigInt randomness;
  // variance only
  std::optional<crypto::Commitment> f2;
  std::optional<zk::MultiplicationProof> mul;
  // cmp_public only
  std::optional<zk::ComparisonProof> cmp;
};

struct RelayMessage {
  RelayKind kind;
  BorrowerCommit commit;
  EvalMaterial eval;
};

Bytes encode(const RelayMessage& m, const WireContext& ctx);
RelayMessage decode_relay(ByteSpan plain, const WireContext& ctx);

}  // namespace octopus::protocol
