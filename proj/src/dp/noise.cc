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

#include "octopus/dp/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "octopus/crypto/laplace.hpp"

namespace octopus::dp {

void DpParams::validate() const {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must lie in (0, 1)");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (d < 1 || s < 1 || s > d) throw std::invalid_argument("replace iteration must be in [1, d]");
  if (m < 2) throw std::invalid_argument("group capacity must be >= 2");
}

LaplaceParams derive_laplace_params(double epsilon, double delta) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must lie in (0, 1)");
  const double lambda = 2.0 / epsilon;
  // 2(1 - sqrt(1 - delta)) written as 2 delta / (1 + sqrt(1 - delta)) to keep
  // precision for tiny delta.
  double t = delta >= 0.75 ? 1.0 : 2.0 * delta / (1.0 + std::sqrt(1.0 - delta));
  if (t > 1.0) t = 1.0;
  return LaplaceParams{1.0 - lambda * std::log(t), lambda};
}

Budget laplace_guarantee(double mu, double lambda) {
  const double t = std::exp((1.0 - mu) / lambda);
  return Budget{2.0 / lambda, t * (1.0 - t / 4.0)};
}

Budget split_budget(double epsilon, double delta, unsigned k, uint64_t l_affect) {
  if (k < 1 || l_affect < 1) throw std::invalid_argument("k and l_affect must be >= 1");
  const double parts = static_cast<double>(k) * static_cast<double>(l_affect);
  return Budget{epsilon / parts, delta / parts};
}

uint64_t affected_bound(uint64_t m, unsigned d, unsigned s) {
  if (d < 1 || s < 1 || s > d) throw std::invalid_argument("replace iteration must be in [1, d]");
  // Smallest l with l^d >= m^(s-1).
  BigInt target;
  mpz_pow_ui(target.get_mpz_t(), BigInt(static_cast<unsigned long>(m)).get_mpz_t(), s - 1);
  BigInt l;
  mpz_root(l.get_mpz_t(), target.get_mpz_t(), d);
  BigInt p;
  mpz_pow_ui(p.get_mpz_t(), l.get_mpz_t(), d);
  if (p < target) ++l;
  return l.get_ui();
}

uint64_t LaplacePlan::total() const {
  uint64_t sum = 0;
  for (const auto& [tag, n] : counts) sum += n;
  return sum;
}

LaplacePlan plan_noise(const DpParams& params, Rng& rng) {
  params.validate();
  LaplacePlan plan;
  plan.l_affect = affected_bound(params.m, params.d, params.s);
  plan.per_query = split_budget(params.epsilon, params.delta, params.k, plan.l_affect);
  LaplaceParams lp = derive_laplace_params(plan.per_query.epsilon, plan.per_query.delta);
  plan.mu = lp.mu;
  plan.lambda = lp.lambda;
  for (const auto& tag : pir::reachable_types(params.d, params.s)) {
    plan.counts[tag] = crypto::sample_truncated_laplace(plan.mu, plan.lambda, rng);
  }
  return plan;
}

double expected_noise_total(const DpParams& params) {
  params.validate();
  const uint64_t l = affected_bound(params.m, params.d, params.s);
  Budget b = split_budget(params.epsilon, params.delta, params.k, l);
  LaplaceParams lp = derive_laplace_params(b.epsilon, b.delta);
  return static_cast<double>(pir::reachable_types(params.d, params.s).size()) *
         crypto::truncated_laplace_mean(lp.mu, lp.lambda);
}

NoiseBatch gen_noise_batch(const crypto::PaillierPublicKey& pk, const crypto::PedersenParams& params,
                           const LaplacePlan& plan, unsigned d, size_t payload_len, Rng& rng) {
  const size_t width = params.element_bytes();
  if (payload_len == 0 || payload_len % width != 0) {
    throw std::invalid_argument("payload length is not a whole number of commitments");
  }
  const size_t columns = payload_len / width;
  NoiseBatch batch;
  batch.r_z.assign(columns, BigInt(0));
  for (const auto& [tag, count] : plan.counts) {
    for (uint64_t j = 0; j < count; ++j) {
      NoiseResponse resp{tag, {}};
      switch (tag.kind()) {
        case pir::ResponseType::Kind::kCommitment: {
          Bytes payload;
          for (size_t col = 0; col < columns; ++col) {
            BigInt r = rng.below(params.q);
            batch.r_z[col] = mod(batch.r_z[col] + r, params.q);
            Bytes c = to_bytes_be(crypto::pedersen_commit(params, 0, r).value, width);
            payload.insert(payload.end(), c.begin(), c.end());
          }
          resp.body = crypto::layered_encrypt(pk, payload, d, rng);
          break;
        }
        case pir::ResponseType::Kind::kZeroString:
          resp.body = crypto::layered_encrypt_zero(pk, payload_len, tag.layer(), d, rng);
          break;
        case pir::ResponseType::Kind::kFullZero:
          resp.body = crypto::layered_encrypt_zero(pk, payload_len, 0, d, rng);
          break;
      }
      batch.responses.push_back(std::move(resp));
    }
  }
  return batch;
}

Bytes NoiseCache::serialize(const crypto::PaillierPublicKey& pk) const {
  ByteWriter w;
  w.put_string("octopus-noise-v1");
  w.put_blob(pk_fingerprint);
  w.put_u8(static_cast<uint8_t>(d));
  w.put_u32(static_cast<uint32_t>(payload_len));
  w.put_f64(plan.mu);
  w.put_f64(plan.lambda);
  w.put_u64(plan.l_affect);
  w.put_f64(plan.per_query.epsilon);
  w.put_f64(plan.per_query.delta);
  w.put_u32(static_cast<uint32_t>(plan.counts.size()));
  for (const auto& [tag, n] : plan.counts) {
    tag.serialize(w);
    w.put_u64(n);
  }
  w.put_u32(static_cast<uint32_t>(batch.r_z.size()));
  for (const auto& r : batch.r_z) write_int(w, r);
  w.put_u32(static_cast<uint32_t>(batch.responses.size()));
  for (const auto& resp : batch.responses) {
    resp.type.serialize(w);
    crypto::write_layered(w, pk, resp.body);
  }
  return w.take();
}

NoiseCache NoiseCache::deserialize(ByteSpan data, const crypto::PaillierPublicKey& pk) {
  ByteReader r(data);
  if (r.string() != "octopus-noise-v1") throw DecodeError("not a noise cache file");
  NoiseCache out;
  out.pk_fingerprint = r.blob();
  if (out.pk_fingerprint != pk.fingerprint()) throw DecodeError("noise cache was made for another key");
  out.d = r.u8();
  out.payload_len = r.u32();
  out.plan.mu = r.f64();
  out.plan.lambda = r.f64();
  out.plan.l_affect = r.u64();
  out.plan.per_query.epsilon = r.f64();
  out.plan.per_query.delta = r.f64();
  for (uint32_t n = r.u32(); n > 0; --n) {
    auto tag = pir::ResponseType::deserialize(r);
    out.plan.counts[tag] = r.u64();
  }
  for (uint32_t n = r.u32(); n > 0; --n) out.batch.r_z.push_back(read_int(r));
  for (uint32_t n = r.u32(); n > 0; --n) {
    auto tag = pir::ResponseType::deserialize(r);
    out.batch.responses.push_back({tag, crypto::read_layered(r, pk)});
  }
  r.expect_done();
  return out;
}

}  // namespace octopus::dp
