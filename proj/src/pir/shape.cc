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

#include "octopus/pir/shape.hpp"

#include <stdexcept>

namespace octopus::pir {

QueryShape::QueryShape(std::vector<uint32_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("query shape needs at least one dimension");
  if (dims_.size() > 32) throw std::invalid_argument("too many dimensions");
  for (uint32_t m : dims_) {
    if (m < 2) throw std::invalid_argument("every dimension must have size >= 2");
  }
  (void)capacity();
}

uint64_t QueryShape::capacity() const {
  uint64_t cap = 1;
  for (uint32_t m : dims_) {
    if (cap > UINT32_MAX / m) throw std::invalid_argument("group capacity exceeds 32 bits");
    cap *= m;
  }
  return cap;
}

uint64_t QueryShape::total_slots() const {
  uint64_t total = 0;
  for (uint32_t m : dims_) total += m;
  return total;
}

void QueryShape::serialize(ByteWriter& w) const {
  w.put_u8(static_cast<uint8_t>(dims_.size()));
  for (uint32_t m : dims_) w.put_u32(m);
}

QueryShape QueryShape::deserialize(ByteReader& r) {
  uint8_t d = r.u8();
  std::vector<uint32_t> dims(d);
  for (auto& m : dims) m = r.u32();
  try {
    return QueryShape(std::move(dims));
  } catch (const std::invalid_argument& e) {
    throw DecodeError(e.what());
  }
}

std::vector<uint32_t> pid_to_coords(const QueryShape& shape, uint64_t pid) {
  uint64_t cap = shape.capacity();
  if (pid >= cap) throw std::out_of_range("pid outside group capacity");
  std::vector<uint32_t> coords(shape.d());
  uint64_t rest = pid;
  uint64_t stride = cap;
  for (unsigned i = 0; i < shape.d(); ++i) {
    stride /= shape.dim(i);
    coords[i] = static_cast<uint32_t>(rest / stride);
    rest %= stride;
  }
  return coords;
}

uint64_t coords_to_pid(const QueryShape& shape, const std::vector<uint32_t>& coords) {
  if (coords.size() != shape.d()) throw std::invalid_argument("coordinate count mismatch");
  uint64_t pid = 0;
  for (unsigned i = 0; i < shape.d(); ++i) {
    if (coords[i] >= shape.dim(i)) throw std::out_of_range("coordinate out of range");
    pid = pid * shape.dim(i) + coords[i];
  }
  return pid;
}

}  // namespace octopus::pir
