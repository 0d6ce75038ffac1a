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

#include "octopus/pir/database.hpp"

#include <stdexcept>

namespace octopus::pir {

SparseDatabase::SparseDatabase(QueryShape shape, uint32_t payload_width)
    : shape_(std::move(shape)), payload_width_(payload_width) {
  if (payload_width_ == 0) throw std::invalid_argument("payload width must be positive");
}

void SparseDatabase::put(uint64_t pid, Bytes payload) {
  if (pid >= capacity()) throw std::out_of_range("pid outside database capacity");
  if (payload.size() != payload_width_) throw std::invalid_argument("payload width mismatch");
  entries_[pid] = std::move(payload);
}

const Bytes* SparseDatabase::find(uint64_t pid) const {
  auto it = entries_.find(pid);
  return it == entries_.end() ? nullptr : &it->second;
}

Bytes SparseDatabase::serialize() const {
  ByteWriter w;
  w.put_u32(static_cast<uint32_t>(capacity()));
  w.put_u32(payload_width_);
  shape_.serialize(w);
  for (const auto& [pid, payload] : entries_) {
    w.put_u32(static_cast<uint32_t>(pid));
    w.put_bytes(payload);
  }
  return w.take();
}

SparseDatabase SparseDatabase::deserialize(ByteSpan data) {
  ByteReader r(data);
  uint32_t capacity = r.u32();
  uint32_t width = r.u32();
  QueryShape shape = QueryShape::deserialize(r);
  if (shape.capacity() != capacity) throw DecodeError("database capacity does not match shape");
  if (width == 0) throw DecodeError("zero payload width");
  SparseDatabase db(std::move(shape), width);
  int64_t last = -1;
  while (!r.done()) {
    uint32_t pid = r.u32();
    if (static_cast<int64_t>(pid) <= last) throw DecodeError("database records not sorted by pid");
    if (pid >= capacity) throw DecodeError("record pid outside capacity");
    ByteSpan payload = r.bytes(width);
    db.entries_[pid] = Bytes(payload.begin(), payload.end());
    last = pid;
  }
  return db;
}

DenseDatabase to_dense(const SparseDatabase& db) {
  DenseDatabase dense(db.capacity());
  for (const auto& [pid, payload] : db.entries()) dense[pid] = payload;
  return dense;
}

}  // namespace octopus::pir
