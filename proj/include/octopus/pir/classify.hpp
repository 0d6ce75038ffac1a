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

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "octopus/crypto/layered.hpp"
#include "octopus/crypto/pedersen.hpp"
#include "octopus/pir/respond.hpp"

namespace octopus::pir {

// What a decrypted response turned out to be. Type0 carries commitments,
// TypeI(i) is E^(d-i)(0_i) for 1 <= i <= d-1, TypeD is E^d(0).
class ResponseType {
 public:
  enum class Kind : uint8_t { kCommitment = 0, kZeroString = 1, kFullZero = 2 };

  ResponseType() : ResponseType(Kind::kCommitment, 0) {}

  static ResponseType type0() { return ResponseType(Kind::kCommitment, 0); }
  static ResponseType type_i(unsigned layer);
  static ResponseType type_d() { return ResponseType(Kind::kFullZero, 0); }

  Kind kind() const { return kind_; }
  unsigned layer() const { return layer_; }
  // Position in the type-count vector: 0, i, or d respectively.
  unsigned index(unsigned d) const;
  std::string name() const;

  void serialize(ByteWriter& w) const;
  static ResponseType deserialize(ByteReader& r);

  friend auto operator<=>(const ResponseType&, const ResponseType&) = default;

 private:
  ResponseType(Kind kind, unsigned layer) : kind_(kind), layer_(layer) {}

  Kind kind_;
  unsigned layer_;
};

class MalformedResponse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PeeledResponse {
  ResponseType type;
  // Innermost payload bytes, present only for Type0.
  std::optional<Bytes> payload;
};

// Peels layers until a zero string or the innermost payload appears. Does not
// interpret the payload. Throws MalformedResponse on structural errors.
PeeledResponse peel_response(const crypto::PaillierSecretKey& sk, const PirResponse& resp, unsigned d,
                             size_t payload_len);

struct Classification {
  ResponseType type;
  std::vector<crypto::Commitment> commitments;  // Type0 only
};

// As peel_response, then parses the payload as payload_len / |p| commitments.
// Throws MalformedResponse when a payload element is not a group element.
Classification classify_response(const crypto::PaillierSecretKey& sk, const PirResponse& resp,
                                 unsigned d, size_t payload_len,
                                 const crypto::PedersenParams& params);

// {Type0, TypeD} plus TypeI(i) for 1 <= i <= s-1, or up to d-1 without
// replacement.
std::set<ResponseType> reachable_types(unsigned d, unsigned s);

}  // namespace octopus::pir
