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

#include "octopus/protocol/messages.hpp"

#include <stdexcept>

namespace octopus::protocol {
namespace {

constexpr uint32_t kMaxFrame = 1u << 30;
constexpr uint32_t kMaxItems = 1u << 24;

const crypto::PaillierPublicKey& need_pk(const WireContext& ctx) {
  if (!ctx.pk) throw std::logic_error("wire context lacks a Paillier key");
  return *ctx.pk;
}

const crypto::PedersenParams& need_params(const WireContext& ctx) {
  if (!ctx.params) throw std::logic_error("wire context lacks Pedersen parameters");
  return *ctx.params;
}

uint32_t count(ByteReader& r) {
  uint32_t n = r.u32();
  if (n > kMaxItems || n > r.remaining()) throw DecodeError("item count exceeds message");
  return n;
}

void write_ints(ByteWriter& w, const std::vector<BigInt>& v) {
  w.put_u32(static_cast<uint32_t>(v.size()));
  for (const auto& x : v) write_int(w, x);
}

std::vector<BigInt> read_ints(ByteReader& r) {
  std::vector<BigInt> out(count(r));
  for (auto& x : out) x = read_int(r);
  return out;
}

template <typename T, typename F>
T parse(ByteSpan body, F&& f) {
  ByteReader r(body);
  T out = f(r);
  r.expect_done();
  return out;
}

}  // namespace

std::string to_string(QueryKind kind) {
  switch (kind) {
    case QueryKind::kSum:
      return "sum";
    case QueryKind::kCount:
      return "count";
    case QueryKind::kVariance:
      return "variance";
    case QueryKind::kCmpPublic:
      return "cmp_public";
    case QueryKind::kCmpPrivate:
      return "cmp_private";
  }
  return "?";
}

QueryKind parse_query_kind(std::string_view name) {
  for (auto k : {QueryKind::kSum, QueryKind::kCount, QueryKind::kVariance, QueryKind::kCmpPublic,
                 QueryKind::kCmpPrivate}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown query kind: " + std::string(name));
}

size_t payload_columns(QueryKind kind) {
  return kind == QueryKind::kCount || kind == QueryKind::kVariance ? 2 : 1;
}

std::string to_string(AbortKind kind) {
  switch (kind) {
    case AbortKind::kNone:
      return "None";
    case AbortKind::kInvalidQuery:
      return "InvalidQuery";
    case AbortKind::kUnauthorized:
      return "Unauthorized";
    case AbortKind::kInconsistentSum:
      return "InconsistentSum";
    case AbortKind::kMalformedResponse:
      return "MalformedResponse";
    case AbortKind::kUnsupportedQuery:
      return "UnsupportedQuery";
    case AbortKind::kEvaluationRejected:
      return "EvaluationRejected";
  }
  return "?";
}

std::string to_string(MsgType type) {
  switch (type) {
    case MsgType::kSessionOpen:
      return "SessionOpen";
    case MsgType::kAuthNonce:
      return "AuthNonce";
    case MsgType::kBorrowerCipher:
      return "BorrowerCipher";
    case MsgType::kGroupSecrets:
      return "GroupSecrets";
    case MsgType::kQuerySubmit:
      return "QuerySubmit";
    case MsgType::kLenderQuery:
      return "LenderQuery";
    case MsgType::kCorrespondence:
      return "Correspondence";
    case MsgType::kLenderResponse:
      return "LenderResponse";
    case MsgType::kBorrowerDelta:
      return "BorrowerDelta";
    case MsgType::kSealedRelay:
      return "SealedRelay";
    case MsgType::kResponseBatch:
      return "ResponseBatch";
    case MsgType::kAbort:
      return "Abort";
  }
  return "?";
}

void SessionHeader::serialize(ByteWriter& w) const {
  w.put_bytes(id);
  w.put_u64(gid);
  w.put_string(date);
  w.put_u8(static_cast<uint8_t>(kind));
  write_int(w, threshold);
  w.put_u16(static_cast<uint16_t>(range_bits));
  shape.serialize(w);
  w.put_u8(static_cast<uint8_t>(s));
  w.put_f64(dp.epsilon);
  w.put_f64(dp.delta);
  w.put_u32(dp.k);
  w.put_u8(static_cast<uint8_t>(dp.s));
  w.put_u8(static_cast<uint8_t>(dp.d));
  w.put_u64(dp.m);
  w.put_u32(lender_count);
}

SessionHeader SessionHeader::deserialize(ByteReader& r) {
  SessionHeader h;
  ByteSpan id = r.bytes(h.id.size());
  std::copy(id.begin(), id.end(), h.id.begin());
  h.gid = r.u64();
  h.date = r.string();
  uint8_t kind = r.u8();
  if (kind > static_cast<uint8_t>(QueryKind::kCmpPrivate)) throw DecodeError("unknown query kind");
  h.kind = static_cast<QueryKind>(kind);
  h.threshold = read_int(r);
  h.range_bits = r.u16();
  h.shape = pir::QueryShape::deserialize(r);
  h.s = r.u8();
  h.dp.epsilon = r.f64();
  h.dp.delta = r.f64();
  h.dp.k = r.u32();
  h.dp.s = r.u8();
  h.dp.d = r.u8();
  h.dp.m = r.u64();
  h.lender_count = r.u32();
  return h;
}

Bytes encode_frame(const Envelope& env) {
  const size_t rest = 1 + env.session.size() + env.body.size();
  if (rest > kMaxFrame) throw std::length_error("frame too large");
  ByteWriter w;
  w.put_u32(static_cast<uint32_t>(rest));
  w.put_u8(static_cast<uint8_t>(env.type));
  w.put_bytes(env.session);
  w.put_bytes(env.body);
  return w.take();
}

Envelope decode_frame(ByteSpan frame) {
  ByteReader r(frame);
  const uint32_t rest = r.u32();
  if (rest != r.remaining() || rest < 1 + 16) throw DecodeError("frame length mismatch");
  Envelope env;
  const uint8_t type = r.u8();
  if (type < 1 || type > static_cast<uint8_t>(MsgType::kAbort)) throw DecodeError("unknown message type");
  env.type = static_cast<MsgType>(type);
  ByteSpan sid = r.bytes(env.session.size());
  std::copy(sid.begin(), sid.end(), env.session.begin());
  ByteSpan body = r.bytes(r.remaining());
  env.body.assign(body.begin(), body.end());
  return env;
}

Bytes encode(const SessionOpen& m) {
  ByteWriter w;
  m.header.serialize(w);
  m.pk.serialize(w);
  return w.take();
}

SessionOpen decode_session_open(ByteSpan body) {
  return parse<SessionOpen>(body, [](ByteReader& r) {
    SessionOpen m;
    m.header = SessionHeader::deserialize(r);
    m.pk = crypto::PaillierPublicKey::deserialize(r);
    return m;
  });
}

Bytes encode(const AuthNonce& m) {
  ByteWriter w;
  write_int(w, m.r_e);
  return w.take();
}

AuthNonce decode_auth_nonce(ByteSpan body) {
  return parse<AuthNonce>(body, [](ByteReader& r) { return AuthNonce{read_int(r)}; });
}

Bytes encode(const BorrowerCipher& m, const WireContext& ctx) {
  ByteWriter w;
  crypto::write_ciphertext(w, need_pk(ctx), m.c);
  m.proof.serialize(w);
  return w.take();
}

BorrowerCipher decode_borrower_cipher(ByteSpan body, const WireContext& ctx) {
  return parse<BorrowerCipher>(body, [&](ByteReader& r) {
    BorrowerCipher m;
    m.c = crypto::read_ciphertext(r, need_pk(ctx));
    m.proof = zk::PlaintextKnowledgeProof::deserialize(r);
    return m;
  });
}

Bytes encode(const GroupSecrets& m) {
  ByteWriter w;
  write_ints(w, m.y);
  return w.take();
}

GroupSecrets decode_group_secrets(ByteSpan body) {
  return parse<GroupSecrets>(body, [](ByteReader& r) { return GroupSecrets{read_ints(r)}; });
}

Bytes encode(const QuerySubmit& m) {
  ByteWriter w;
  pir::write_query(w, m.query);
  m.proof.serialize(w);
  return w.take();
}

QuerySubmit decode_query_submit(ByteSpan body, const WireContext& ctx) {
  return parse<QuerySubmit>(body, [&](ByteReader& r) {
    QuerySubmit m;
    m.query = pir::read_query(r, need_pk(ctx));
    m.proof = zk::ValidQueryProof::deserialize(r);
    return m;
  });
}

Bytes encode(const LenderQuery& m) {
  ByteWriter w;
  pir::write_query(w, m.query);
  return w.take();
}

LenderQuery decode_lender_query(ByteSpan body, const WireContext& ctx) {
  return parse<LenderQuery>(body, [&](ByteReader& r) { return LenderQuery{pir::read_query(r, need_pk(ctx))}; });
}

Bytes encode(const Correspondence& m) {
  ByteWriter w;
  m.proof.serialize(w);
  return w.take();
}

Correspondence decode_correspondence(ByteSpan body) {
  return parse<Correspondence>(body, [](ByteReader& r) {
    return Correspondence{zk::CorrespondenceProof::deserialize(r)};
  });
}

Bytes encode(const LenderResponse& m, const WireContext& ctx) {
  ByteWriter w;
  crypto::write_layered(w, need_pk(ctx), m.body);
  return w.take();
}

LenderResponse decode_lender_response(ByteSpan body, const WireContext& ctx) {
  return parse<LenderResponse>(body, [&](ByteReader& r) {
    return LenderResponse{crypto::read_layered(r, need_pk(ctx))};
  });
}

Bytes encode(const BorrowerDelta& m) {
  ByteWriter w;
  write_ints(w, m.delta_rb);
  return w.take();
}

BorrowerDelta decode_borrower_delta(ByteSpan body) {
  return parse<BorrowerDelta>(body, [](ByteReader& r) { return BorrowerDelta{read_ints(r)}; });
}

Bytes encode(const SealedRelay& m) {
  ByteWriter w;
  w.put_u8(m.direction);
  w.put_u64(m.counter);
  w.put_blob(m.sealed);
  return w.take();
}

SealedRelay decode_sealed_relay(ByteSpan body) {
  return parse<SealedRelay>(body, [](ByteReader& r) {
    SealedRelay m;
    m.direction = r.u8();
    if (m.direction > 1) throw DecodeError("bad relay direction");
    m.counter = r.u64();
    m.sealed = r.blob();
    return m;
  });
}

Bytes encode(const ResponseBatch& m, const WireContext& ctx) {
  ByteWriter w;
  w.put_u32(static_cast<uint32_t>(m.responses.size()));
  for (const auto& resp : m.responses) crypto::write_layered(w, need_pk(ctx), resp);
  write_ints(w, m.delta_r);
  return w.take();
}

ResponseBatch decode_response_batch(ByteSpan body, const WireContext& ctx) {
  return parse<ResponseBatch>(body, [&](ByteReader& r) {
    ResponseBatch m;
    for (uint32_t n = count(r); n > 0; --n) m.responses.push_back(crypto::read_layered(r, need_pk(ctx)));
    m.delta_r = read_ints(r);
    return m;
  });
}

Bytes encode(const AbortNotice& m) {
  ByteWriter w;
  w.put_u8(static_cast<uint8_t>(m.kind));
  w.put_string(m.detail);
  return w.take();
}

AbortNotice decode_abort(ByteSpan body) {
  return parse<AbortNotice>(body, [](ByteReader& r) {
    AbortNotice m;
    uint8_t kind = r.u8();
    if (kind > static_cast<uint8_t>(AbortKind::kEvaluationRejected)) throw DecodeError("unknown abort kind");
    m.kind = static_cast<AbortKind>(kind);
    m.detail = r.string();
    return m;
  });
}

Bytes encode(const RelayMessage& m, const WireContext& ctx) {
  const auto& params = need_params(ctx);
  ByteWriter w;
  w.put_u8(static_cast<uint8_t>(m.kind));
  switch (m.kind) {
    case RelayKind::kBorrowerCommit:
      w.put_u32(static_cast<uint32_t>(m.commit.c_b.size()));
      for (const auto& c : m.commit.c_b) crypto::write_commitment(w, params, c);
      break;
    case RelayKind::kEvalRequest:
      break;
    case RelayKind::kEvalMaterial: {
      const auto& e = m.eval;
      write_int(w, e.value);
      write_int(w, e.randomness);
      w.put_u8(e.f2 ? 1 : 0);
      if (e.f2) crypto::write_commitment(w, params, *e.f2);
      w.put_u8(e.mul ? 1 : 0);
      if (e.mul) e.mul->serialize(w);
      w.put_u8(e.cmp ? 1 : 0);
      if (e.cmp) e.cmp->serialize(w, params);
      break;
    }
  }
  return w.take();
}

RelayMessage decode_relay(ByteSpan plain, const WireContext& ctx) {
  const auto& params = need_params(ctx);
  return parse<RelayMessage>(plain, [&](ByteReader& r) {
    RelayMessage m;
    const uint8_t kind = r.u8();
    switch (kind) {
      case static_cast<uint8_t>(RelayKind::kBorrowerCommit):
        m.kind = RelayKind::kBorrowerCommit;
        for (uint32_t n = count(r); n > 0; --n) m.commit.c_b.push_back(crypto::read_commitment(r, params));
        break;
      case static_cast<uint8_t>(RelayKind::kEvalRequest):
        m.kind = RelayKind::kEvalRequest;
        break;
      case static_cast<uint8_t>(RelayKind::kEvalMaterial): {
        m.kind = RelayKind::kEvalMaterial;
        auto& e = m.eval;
        e.value = read_int(r);
        e.randomness = read_int(r);
        if (r.u8()) e.f2 = crypto::read_commitment(r, params);
        if (r.u8()) e.mul = zk::MultiplicationProof::deserialize(r);
        if (r.u8()) e.cmp = zk::ComparisonProof::deserialize(r, params);
        break;
      }
      default:
        throw DecodeError("unknown relay message");
    }
    return m;
  });
}

}  // namespace octopus::protocol
