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

#include "octopus/harness/scenario.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "octopus/crypto/hash.hpp"
#include "octopus/pir/respond.hpp"
#include "octopus/pir/sizes.hpp"
#include "octopus/protocol/messages.hpp"
#include "octopus/protocol/transport.hpp"
#include "octopus/registry/registry.hpp"

namespace octopus::harness {

namespace {

constexpr std::string_view kStoreMagic = "octopus-noise-store-v1";

uint64_t to_u64(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    if (!v.empty() && v[0] == '-') throw std::invalid_argument(v);
    unsigned long long out = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an unsigned integer, got '" + v + "'");
  }
}

double to_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    double out = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a number, got '" + v + "'");
  }
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "no") return false;
  throw ConfigError(key + ": expected a boolean, got '" + v + "'");
}

std::vector<uint32_t> to_dims(const std::string& key, const std::string& v) {
  std::vector<uint32_t> dims;
  std::string tok;
  std::istringstream in(v);
  while (std::getline(in, tok, 'x')) dims.push_back(static_cast<uint32_t>(to_u64(key, tok)));
  if (dims.empty()) throw ConfigError(key + ": expected dimensions like 3x4");
  return dims;
}

std::string seconds(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << s;
  return out.str();
}

}  // namespace

void ScenarioConfig::apply(const std::map<std::string, std::string>& kv) {
  for (const auto& [key, v] : kv) {
    if (key == "lenders") lenders = static_cast<unsigned>(to_u64(key, v));
    else if (key == "shape") shape = to_dims(key, v);
    else if (key == "s") s = static_cast<unsigned>(to_u64(key, v));
    else if (key == "sparsity") sparsity = to_double(key, v);
    else if (key == "epsilon") epsilon = to_double(key, v);
    else if (key == "delta") delta = to_double(key, v);
    else if (key == "k") k = static_cast<unsigned>(to_u64(key, v));
    else if (key == "query") {
      try {
        kind = protocol::parse_query_kind(v);
      } catch (const std::exception& e) {
        throw ConfigError(key + ": " + e.what());
      }
    }
    else if (key == "threshold") threshold = to_u64(key, v);
    else if (key == "range_bits") range_bits = static_cast<unsigned>(to_u64(key, v));
    else if (key == "max_amount") max_amount = to_u64(key, v);
    else if (key == "key_bits") paillier_bits = to_u64(key, v);
    else if (key == "pedersen_p_bits") pedersen_p_bits = to_u64(key, v);
    else if (key == "pedersen_q_bits") pedersen_q_bits = to_u64(key, v);
    else if (key == "lie_sum") adversary.lie_sum = to_bool(key, v);
    else if (key == "bad_query") adversary.bad_query = to_bool(key, v);
    else if (key == "impostor") adversary.impostor = to_bool(key, v);
    else if (key == "replay_proof") adversary.replay_proof = to_bool(key, v);
    else if (key == "corrupt_response") adversary.corrupt_response = to_bool(key, v);
    else if (key == "seed") seed = to_u64(key, v);
    else if (key == "transport") transport = v;
    else if (key == "date") date = v;
    else if (key == "noise_cache") noise_cache = v;
    else if (key == "noise_index") noise_index = to_u64(key, v);
    else throw ConfigError("unknown key: " + key);
  }
}

ScenarioKeys derive_keys(const ScenarioConfig& cfg) {
  Rng root(cfg.seed);
  Rng prng = root.fork("paillier-key");
  Rng grng = root.fork("pedersen-group");
  return ScenarioKeys{crypto::paillier_keygen(cfg.paillier_bits, prng),
                      crypto::PedersenParams::generate(cfg.pedersen_p_bits, cfg.pedersen_q_bits, grng)};
}

std::string RunReport::csv() const {
  std::ostringstream out;
  out << "section,key,value\n";
  out << "run,transport," << transport << "\n";
  out << "run,seed," << seed << "\n";
  out << "run,query," << protocol::to_string(kind) << "\n";
  out << "run,setup_seconds," << seconds(setup_seconds) << "\n";
  out << "run,session_seconds," << seconds(session_seconds) << "\n";
  for (const auto& [step, t] : outcome.step_seconds) out << "step," << step << "," << seconds(t) << "\n";
  for (const auto& d : traffic) {
    out << "bytes," << d.from << "->" << d.to << "," << d.bytes << "\n";
    out << "frames," << d.from << "->" << d.to << "," << d.frames << "\n";
  }
  out << "bytes,total," << total_bytes << "\n";
  for (const auto& [type, n] : outcome.noise_counts) out << "noise," << type.name() << "," << n << "\n";
  for (size_t i = 0; i < outcome.type_counts.size(); ++i) {
    out << "type_count,n" << i << "," << outcome.type_counts[i] << "\n";
  }
  auto flag = [](const std::optional<bool>& z) { return z ? (*z ? "1" : "0") : "-"; };
  out << "verdict,z1," << flag(outcome.z1) << "\n";
  out << "verdict,z2," << flag(outcome.z2) << "\n";
  out << "verdict,z3," << flag(outcome.z3) << "\n";
  out << "verdict,abort," << verdict() << "\n";
  out << "result,value," << (outcome.result ? outcome.result->str() : "-") << "\n";
  out << "result,expected," << (expected ? expected->str() : "-") << "\n";
  out << "result,correct," << (correct ? 1 : 0) << "\n";
  out << "run,transcript_sha256," << transcript_digest << "\n";
  return out.str();
}

std::string RunReport::summary() const {
  std::ostringstream out;
  out << "query " << protocol::to_string(kind) << " for " << borrower << " over " << transport << " (seed " << seed
      << ")\n";
  out << "  verdict: " << verdict();
  if (!outcome.abort_detail.empty()) out << " (" << outcome.abort_detail << ")";
  out << "\n";
  if (outcome.result) {
    out << "  result: " << outcome.result->str() << (correct ? " [matches plaintext]" : " [MISMATCH]") << "\n";
  }
  uint64_t noise = 0;
  for (const auto& [type, n] : outcome.noise_counts) noise += n;
  out << "  responses released: " << outcome.responses_released << " (noise " << noise << ")\n";
  out << "  traffic: " << total_bytes << " bytes in " << traffic.size() << " directions\n";
  out << "  time: setup " << seconds(setup_seconds) << " s, session " << seconds(session_seconds) << " s\n";
  return out.str();
}

RunReport run_scenario(const ScenarioConfig& cfg) {
  using Clock = std::chrono::steady_clock;
  auto t0 = Clock::now();
  if (cfg.lenders == 0) throw ConfigError("lenders must be positive");
  if (!(cfg.sparsity >= 0 && cfg.sparsity <= 1)) throw ConfigError("sparsity must lie in [0, 1]");
  if (cfg.max_amount == 0) throw ConfigError("max_amount must be positive");
  const pir::QueryShape shape = cfg.query_shape();
  if (cfg.kind == protocol::QueryKind::kCmpPublic &&
      (cfg.range_bits >= 64 || BigInt(static_cast<unsigned long>(cfg.lenders)) * cfg.max_amount >=
                                   BigInt(1) << cfg.range_bits)) {
    throw ConfigError("range_bits cannot cover lenders * max_amount");
  }

  ScenarioKeys keys = derive_keys(cfg);
  Rng root(cfg.seed);
  Rng rng = root.fork("scenario");

  registry::Registry reg(shape.capacity(), cfg.max_amount + 1);
  std::vector<std::string> uids;
  for (uint64_t i = 0; i < shape.capacity(); ++i) {
    std::ostringstream uid;
    uid << "user-" << std::setw(5) << std::setfill('0') << i;
    uids.push_back(uid.str());
    reg.register_user(uids.back(), rng);
  }
  std::vector<std::string> lenders;
  for (unsigned i = 0; i < cfg.lenders; ++i) {
    lenders.push_back("L" + std::to_string(i + 1));
    reg.register_lender(lenders.back());
  }
  for (const auto& lender : lenders) {
    for (const auto& uid : uids) {
      if (rng.uniform01() < cfg.sparsity) reg.record_loan(uid, lender, 1 + rng.below(cfg.max_amount), rng);
    }
  }

  protocol::SessionConfig sc;
  sc.registry = &reg;
  sc.params = keys.pedersen;
  sc.keys = &keys.paillier;
  sc.borrower_uid = uids[rng.below(uids.size())];
  sc.date = cfg.date;
  sc.lender_ids = lenders;
  sc.shape = shape;
  sc.dp.epsilon = cfg.epsilon;
  sc.dp.delta = cfg.delta;
  sc.dp.k = cfg.k;
  sc.dp.s = cfg.s;
  sc.kind = cfg.kind;
  sc.threshold = BigInt(static_cast<unsigned long>(cfg.threshold));
  sc.range_bits = cfg.range_bits;
  sc.adversary = cfg.adversary;
  sc.seed = cfg.seed;

  NoiseStore store;
  if (!cfg.noise_cache.empty()) {
    store = NoiseStore::deserialize(read_file(cfg.noise_cache), keys.paillier.pk);
    if (cfg.noise_index >= store.batches.size()) throw ConfigError("noise_index beyond the cache");
    const dp::NoiseCache& nc = store.batches[cfg.noise_index];
    size_t payload_len = protocol::payload_columns(cfg.kind) * keys.pedersen.element_bytes();
    if (nc.d != shape.d() || nc.payload_len != payload_len) {
      throw ConfigError("noise cache was generated for a different shape or query kind");
    }
    sc.noise_batch = &nc.batch;
  }

  RunReport report;
  report.transport = cfg.transport;
  report.seed = cfg.seed;
  report.borrower = sc.borrower_uid;
  report.kind = cfg.kind;
  auto t1 = Clock::now();
  report.setup_seconds = std::chrono::duration<double>(t1 - t0).count();

  auto transport = protocol::make_transport(cfg.transport);
  report.outcome = protocol::run_octopus(sc, *transport);
  report.session_seconds = std::chrono::duration<double>(Clock::now() - t1).count();

  if (cfg.kind != protocol::QueryKind::kCmpPrivate) {
    report.expected = protocol::plaintext_oracle(reg, sc.borrower_uid, lenders, cfg.kind, sc.threshold);
    if (report.outcome.result) {
      const auto& got = *report.outcome.result;
      report.correct = cfg.kind == protocol::QueryKind::kCmpPublic
                           ? got.less_than == report.expected->less_than
                           : got.value == report.expected->value && got.denominator == report.expected->denominator;
    }
  }

  std::map<std::pair<std::string, std::string>, DirectionBytes> dirs;
  ByteWriter all;
  for (const auto& rec : transport->log()) {
    auto& d = dirs[{rec.from, rec.to}];
    d.from = rec.from;
    d.to = rec.to;
    d.frames += 1;
    d.bytes += rec.frame.size();
    all.put_string(rec.from);
    all.put_string(rec.to);
    all.put_blob(rec.frame);
  }
  for (auto& [key, d] : dirs) report.traffic.push_back(d);
  report.total_bytes = transport->bytes_sent();
  report.transcript_digest = to_hex(crypto::sha256(all.view()));
  return report;
}

std::vector<SizeRow> bench_sizes(const std::vector<std::vector<uint32_t>>& shapes, size_t key_bits, uint64_t seed) {
  Rng root(seed);
  Rng krng = root.fork("bench-key");
  crypto::PaillierKeyPair keys = crypto::paillier_keygen(key_bits, krng);
  const auto& pk = keys.pk;
  const size_t l = pk.bits;
  protocol::WireContext ctx{&pk, nullptr};
  protocol::SessionId sid{};

  std::vector<SizeRow> rows;
  for (const auto& dims : shapes) {
    pir::QueryShape shape(dims);
    Rng rng = root.fork("bench-shape-" + std::to_string(rows.size()));
    SizeRow row;
    row.shape = dims;
    std::ostringstream label;
    label << "Q_" << dims[0] << "^" << dims.size();
    for (uint32_t m : dims) {
      if (m != dims[0]) {
        label.str("");
        label << "Q_";
        for (size_t i = 0; i < dims.size(); ++i) label << (i ? "x" : "") << dims[i];
        break;
      }
    }
    row.label = label.str();
    row.key_bits = l;

    auto [query, witness] = pir::gen_query(pk, shape, 0, rng);
    Bytes qframe = protocol::encode_frame({protocol::MsgType::kLenderQuery, sid, protocol::encode(protocol::LenderQuery{query})});
    row.predicted_query_bytes = pir::predicted_query_bits(shape, 2, static_cast<unsigned>(l)) / 8;
    row.measured_query_bytes = qframe.size();
    row.query_overhead = protocol::kFrameOverhead + shape.encoded_size() + 4 * shape.total_slots();

    // A single payload that fits one base plaintext, so the response is l * f^d bits.
    const uint32_t width = static_cast<uint32_t>(std::min<size_t>(32, (l - 1) / 8));
    pir::SparseDatabase db(shape, width);
    db.put(0, rng.bytes(width));
    pir::PirResponse resp =
        pir::finalize_response(pk, pir::sparse_respond(query, db, shape.d(), rng), shape.d(), width, rng);
    Bytes rframe = protocol::encode_frame(
        {protocol::MsgType::kLenderResponse, sid, protocol::encode(protocol::LenderResponse{resp.body}, ctx)});
    row.predicted_response_bytes = pir::predicted_response_bits(shape.d(), 2, static_cast<unsigned>(l)) / 8;
    row.measured_response_bytes = rframe.size();
    row.response_overhead = protocol::kFrameOverhead + 3 + 4 * resp.body.chunks.size();
    rows.push_back(row);
  }
  return rows;
}

std::string sizes_csv(const std::vector<SizeRow>& rows) {
  std::ostringstream out;
  out << "shape,key_bits,query_predicted,query_measured,query_overhead,response_predicted,response_measured,"
         "response_overhead\n";
  for (const auto& r : rows) {
    out << r.label << "," << r.key_bits << "," << r.predicted_query_bytes << "," << r.measured_query_bytes << ","
        << r.query_overhead << "," << r.predicted_response_bytes << "," << r.measured_response_bytes << ","
        << r.response_overhead << "\n";
  }
  return out.str();
}

Bytes NoiseStore::serialize(const crypto::PaillierPublicKey& pk) const {
  ByteWriter w;
  w.put_string(kStoreMagic);
  w.put_u32(static_cast<uint32_t>(batches.size()));
  for (const auto& b : batches) w.put_blob(b.serialize(pk));
  return w.take();
}

NoiseStore NoiseStore::deserialize(ByteSpan data, const crypto::PaillierPublicKey& pk) {
  ByteReader r(data);
  if (r.string() != kStoreMagic) throw DecodeError("not a noise store");
  NoiseStore store;
  uint32_t n = r.u32();
  for (uint32_t i = 0; i < n; ++i) {
    Bytes blob = r.blob();
    store.batches.push_back(dp::NoiseCache::deserialize(blob, pk));
  }
  r.expect_done();
  return store;
}

NoiseStore pregenerate_noise(const ScenarioConfig& cfg, size_t count) {
  ScenarioKeys keys = derive_keys(cfg);
  const pir::QueryShape shape = cfg.query_shape();
  dp::DpParams dp;
  dp.epsilon = cfg.epsilon;
  dp.delta = cfg.delta;
  dp.k = cfg.k;
  dp.s = cfg.s;
  dp.d = shape.d();
  dp.m = shape.capacity();
  dp.validate();
  const size_t payload_len = protocol::payload_columns(cfg.kind) * keys.pedersen.element_bytes();

  Rng rng = Rng(cfg.seed).fork("noise-pregen");
  NoiseStore store;
  for (size_t i = 0; i < count; ++i) {
    dp::NoiseCache nc;
    nc.pk_fingerprint = keys.paillier.pk.fingerprint();
    nc.d = shape.d();
    nc.payload_len = payload_len;
    nc.plan = dp::plan_noise(dp, rng);
    nc.batch = dp::gen_noise_batch(keys.paillier.pk, keys.pedersen, nc.plan, shape.d(), payload_len, rng);
    store.batches.push_back(std::move(nc));
  }
  return store;
}

void write_file(const std::string& path, ByteSpan data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("short write to " + path);
}

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace octopus::harness
