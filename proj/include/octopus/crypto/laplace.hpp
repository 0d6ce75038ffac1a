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

#include "octopus/rng.hpp"

namespace octopus::crypto {

double sample_laplace(double mu, double lambda, Rng& rng);
// One draw of ceil(max(0, X)) with X ~ Laplace(mu, lambda). lambda > 0.
uint64_t sample_truncated_laplace(double mu, double lambda, Rng& rng);

double laplace_cdf(double x, double mu, double lambda);
// E[ceil(max(0, X))] = sum_{k >= 0} P(X > k), summed until the tail is negligible.
double truncated_laplace_mean(double mu, double lambda);

}  // namespace octopus::crypto
