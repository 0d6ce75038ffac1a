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

#include <string>
#include <vector>

#include "octopus/crypto/paillier.hpp"
#include "octopus/crypto/pedersen.hpp"
#include "octopus/protocol/session.hpp"
#include "octopus/registry/registry.hpp"

namespace octopus::testing {

// Keys are generated once per process from fixed seeds.
const crypto::PaillierKeyPair& paillier_keys(size_t bits);
// 256-bit p, 80-bit q: large enough for 32-bit range proofs, fast to use.
const crypto::PedersenParams& small_pedersen();

Bytes hex_bytes(const std::string& hex);

// A registry with `capacity` users and the given lenders; loans[i][u] > 0
// records a loan of that amount from lender i to user u.
registry::Registry make_registry(uint64_t capacity, const std::vector<std::string>& lenders,
                                 const std::vector<std::vector<uint64_t>>& loans, Rng& rng);
std::string user_name(uint64_t i);

// Session config over a registry with a loose privacy budget so sessions stay small.
protocol::SessionConfig small_session(const registry::Registry& reg, const std::string& uid,
                                      const pir::QueryShape& shape, protocol::QueryKind kind, uint64_t seed);

}  // namespace octopus::testing
