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

#include "octopus/crypto/laplace.hpp"

#include <cmath>
#include <stdexcept>

namespace octopus::crypto {

double sample_laplace(double mu, double lambda, Rng& rng) {
  if (!(lambda > 0)) throw std::invalid_argument("Laplace scale must be positive");
  double u;
  do {
    u = rng.uniform01() - 0.5;
  } while (u == -0.5);
  double magnitude = -lambda * std::log1p(-2.0 * std::fabs(u));
  return u < 0 ? mu - magnitude : mu + magnitude;
}

uint64_t sample_truncated_laplace(double mu, double lambda, Rng& rng) {
  double x = sample_laplace(mu, lambda, rng);
  if (x <= 0) return 0;
  return static_cast<uint64_t>(std::ceil(x));
}

double laplace_cdf(double x, double mu, double lambda) {
  if (x < mu) return 0.5 * std::exp((x - mu) / lambda);
  return 1.0 - 0.5 * std::exp(-(x - mu) / lambda);
}

double truncated_laplace_mean(double mu, double lambda) {
  if (!(lambda > 0)) throw std::invalid_argument("Laplace scale must be positive");
  double sum = 0;
  for (uint64_t k = 0;; ++k) {
    double x = static_cast<double>(k);
    double tail = x >= mu ? 0.5 * std::exp(-(x - mu) / lambda) : 1.0 - 0.5 * std::exp((x - mu) / lambda);
    sum += tail;
    if (static_cast<double>(k) > mu && tail < 1e-16) break;
  }
  return sum;
}

}  // namespace octopus::crypto
