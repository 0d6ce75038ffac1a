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

#include "octopus/pir/shape.hpp"

namespace octopus::pir {

// (sum m_i) * f * l: every query slot is one base ciphertext of f*l bits.
uint64_t predicted_query_bits(const QueryShape& shape, unsigned f, unsigned l);
// f^d * l: the response after d layers of expansion.
uint64_t predicted_response_bits(unsigned d, unsigned f, unsigned l);

}  // namespace octopus::pir
