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

#include <cstdint>
#include <map>
#include <vector>

#include "octopus/crypto/layered.hpp"
#include "octopus/crypto/pedersen.hpp"
#include "octopus/pir/classify.hpp"

namespace octopus::dp {

struct DpParams {
  double epsilon = 0.7;
  double delta = 1e-4;
  unsigned k = 5;  // max repeated queries per borrower
  unsigned s = 1;  // replace iteration
  unsigned d = 2;
  uint64_t m = 10000;  // group capacity

  // Throws std::invalid_argument when out of range.
  void validate() const;
};

struct LaplaceParams {
  double mu;
  double lambda;
};

struct Budget {
  double epsilon;
  double delta;
};

// Inverts epsilon = 2/lambda and delta = t(1 - t/4) with t = exp((1 - mu)/lambda).
LaplaceParams derive_laplace_params(double epsilon, double delta);
// The forward direction: the (epsilon, delta) guaranteed by a Laplace(mu, lambda) count.
Budget laplace_guarantee(double mu, double lambda);
Budget split_budget(double epsilon, double delta, unsigned k, uint64_t l_affect);
// ceil(m^((s-1)/d)), computed exactly in integers.
uint64_t affected_bound(uint64_t m, unsigned d, unsigned s);

struct LaplacePlan {
  double mu = 0;
  double lambda = 0;
  uint64_t l_affect = 1;
  Budget per_query{0, 0};
  std::map<pir::ResponseType, uint64_t> counts;

  uint64_t total() const;
};

// Noise tags are reachable_types(d, s); TypeD is always among them.
LaplacePlan plan_noise(const DpParams& params, Rng& rng);
// Closed form of the expected total noise count of a plan.
double expected_noise_total(const DpParams& params);

struct NoiseResponse {
  pir::ResponseType type;
  crypto::LayeredCiphertext body;
};

struct NoiseBatch {
  std::vector<NoiseResponse> responses;
  // Sum of the Pedersen randomness of the Type0 noise, one entry per payload
  // column, mod q.
  std::vector<BigInt> r_z;
};

// payload_len must be a multiple of the Pedersen element width; each Type0
// noise payload commits to 0 in every column.
NoiseBatch gen_noise_batch(const crypto::PaillierPublicKey& pk, const crypto::PedersenParams& params,
                           const LaplacePlan& plan, unsigned d, size_t payload_len, Rng& rng);

// Offline batch bound to one originator key.
struct NoiseCache {
  Bytes pk_fingerprint;
  unsigned d = 0;
  size_t payload_len = 0;
  LaplacePlan plan;
  NoiseBatch batch;

  Bytes serialize(const crypto::PaillierPublicKey& pk) const;
  // Throws DecodeError when the fingerprint does not match pk.
  static NoiseCache deserialize(ByteSpan data, const crypto::PaillierPublicKey& pk);
};

}  // namespace octopus::dp
