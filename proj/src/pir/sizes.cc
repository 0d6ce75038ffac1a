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

#include "octopus/pir/sizes.hpp"

#include <stdexcept>

namespace octopus::pir {

uint64_t predicted_query_bits(const QueryShape& shape, unsigned f, unsigned l) {
  if (f < 2) throw std::invalid_argument("expansion factor must be >= 2");
  return shape.total_slots() * f * l;
}

uint64_t predicted_response_bits(unsigned d, unsigned f, unsigned l) {
  if (f < 2) throw std::invalid_argument("expansion factor must be >= 2");
  uint64_t bits = l;
  for (unsigned i = 0; i < d; ++i) bits *= f;
  return bits;
}

}  // namespace octopus::pir
