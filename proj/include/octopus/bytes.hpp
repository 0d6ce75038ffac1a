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
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace octopus {

using Bytes = std::vector<uint8_t>;
using ByteSpan = std::span<const uint8_t>;

// Raised when a wire or file encoding cannot be parsed.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Bytes to_bytes(std::string_view s);
std::string to_hex(ByteSpan data);
Bytes concat(std::initializer_list<ByteSpan> parts);

// Big-endian writer used by every wire format in the library.
class ByteWriter {
 public:
  void put_u8(uint8_t v) { out_.push_back(v); }
  void put_u16(uint16_t v);
  void put_u32(uint32_t v);
  void put_u64(uint64_t v);
  void put_f64(double v);
  void put_bytes(ByteSpan data) { out_.insert(out_.end(), data.begin(), data.end()); }
  // u32 length prefix followed by the raw bytes.
  void put_blob(ByteSpan data);
  void put_string(std::string_view s);

  size_t size() const { return out_.size(); }
  const Bytes& view() const { return out_; }
  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

class ByteReader {
 public:
  explicit ByteReader(ByteSpan data) : data_(data) {}

  uint8_t u8();
  uint16_t u16();
  uint32_t u32();
  uint64_t u64();
  double f64();
  ByteSpan bytes(size_t n);
  Bytes blob();
  std::string string();

  size_t remaining() const { return data_.size() - pos_; }
  bool done() const { return pos_ == data_.size(); }
  // Throws unless every byte has been consumed.
  void expect_done() const;

 private:
  void need(size_t n) const;

  ByteSpan data_;
  size_t pos_ = 0;
};

}  // namespace octopus
