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
#include <vector>

#include "octopus/bytes.hpp"

namespace octopus::pir {

// m_1 x ... x m_d view of a group of capacity prod(m_i). Dimension 1 is the
// most significant digit of a pid; all indices are 0-based.
class QueryShape {
 public:
  QueryShape() = default;
  // Throws std::invalid_argument unless d >= 1 and every m_i >= 2.
  explicit QueryShape(std::vector<uint32_t> dims);

  const std::vector<uint32_t>& dims() const { return dims_; }
  unsigned d() const { return static_cast<unsigned>(dims_.size()); }
  uint32_t dim(unsigned i) const { return dims_.at(i); }
  uint64_t capacity() const;
  uint64_t total_slots() const;  // sum of m_i, the query length

  void serialize(ByteWriter& w) const;
  static QueryShape deserialize(ByteReader& r);
  size_t encoded_size() const { return 1 + 4 * dims_.size(); }

  friend bool operator==(const QueryShape&, const QueryShape&) = default;

 private:
  std::vector<uint32_t> dims_;
};

// Throws std::out_of_range when pid >= capacity.
std::vector<uint32_t> pid_to_coords(const QueryShape& shape, uint64_t pid);
uint64_t coords_to_pid(const QueryShape& shape, const std::vector<uint32_t>& coords);

}  // namespace octopus::pir
