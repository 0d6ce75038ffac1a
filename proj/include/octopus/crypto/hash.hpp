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

#include <array>
#include <optional>

#include "octopus/bytes.hpp"

namespace octopus::crypto {

using Digest = std::array<uint8_t, 32>;

Digest sha256(ByteSpan data);
Digest hmac_sha256(ByteSpan key, ByteSpan data);

// AES-256-GCM with a 12-byte nonce; the 16-byte tag is appended to the output.
Bytes aes_gcm_seal(ByteSpan key, ByteSpan nonce, ByteSpan plaintext, ByteSpan aad);
std::optional<Bytes> aes_gcm_open(ByteSpan key, ByteSpan nonce, ByteSpan sealed, ByteSpan aad);

}  // namespace octopus::crypto
