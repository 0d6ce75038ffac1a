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
#include <optional>
#include <vector>

#include "octopus/bytes.hpp"
#include "octopus/pir/shape.hpp"

namespace octopus::pir {

// One lender's records for one group: pid -> fixed-width payload. Absent pids
// are empty slots.
class SparseDatabase {
 public:
  SparseDatabase(QueryShape shape, uint32_t payload_width);

  const QueryShape& shape() const { return shape_; }
  uint64_t capacity() const { return shape_.capacity(); }
  uint32_t payload_width() const { return payload_width_; }
  const std::map<uint64_t, Bytes>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

  // Throws std::out_of_range for a pid outside the group and
  // std::invalid_argument for a payload of the wrong width. Upserts.
  void put(uint64_t pid, Bytes payload);
  void erase(uint64_t pid) { entries_.erase(pid); }
  const Bytes* find(uint64_t pid) const;

  // File form: u32 capacity, u32 payload width, shape, then
  // (u32 pid, payload) records sorted by pid until end of input.
  Bytes serialize() const;
  static SparseDatabase deserialize(ByteSpan data);

 private:
  QueryShape shape_;
  uint32_t payload_width_;
  std::map<uint64_t, Bytes> entries_;
};

// Every slot spelled out; nullopt marks an empty slot.
using DenseDatabase = std::vector<std::optional<Bytes>>;

DenseDatabase to_dense(const SparseDatabase& db);

}  // namespace octopus::pir
