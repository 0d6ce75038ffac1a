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

#include <variant>
#include <vector>

#include "octopus/crypto/layered.hpp"
#include "octopus/pir/database.hpp"
#include "octopus/pir/query.hpp"

namespace octopus::pir {

struct PirResponse {
  crypto::LayeredCiphertext body;

  friend bool operator==(const PirResponse&, const PirResponse&) = default;
};

// Returned when every slot vanished, which can only happen when s = d and the
// database is empty. The lender sends a fresh E^d(0) instead.
struct EmptySentinel {
  friend bool operator==(const EmptySentinel&, const EmptySentinel&) = default;
};

using RespondResult = std::variant<PirResponse, EmptySentinel>;

struct RespondStats {
  // Homomorphic item selections (one per present item) in each iteration.
  std::vector<size_t> scale_ops;
  // Present slots left after each iteration, before any replacement.
  std::vector<size_t> present_slots;
};

// Replace iteration that disables replacement: empty columns are skipped
// all the way down and an empty database yields EmptySentinel.
inline constexpr unsigned kNoReplacement = 0;

// Sparsity-aware recursive PIR. Each iteration folds only the present items
// into their output column and rerandomizes every present column. After
// iteration s every absent column is filled with a fresh E(0_(s-1)), the
// value a column of present-but-unselected items would have had, so no slot
// outside the target's first s-1 folds can change the response type. Requires
// s <= d and a database whose shape matches the query.
RespondResult sparse_respond(const PirQuery& query, const SparseDatabase& db, unsigned s, Rng& rng,
                             RespondStats* stats = nullptr);

// Dense reference: every column of every iteration is computed as
// prod_r q_ir^item(r, c) over all rows, with empty items contributing zero
// digits. Empty-column tracking and the replacement after iteration s follow
// the same rule as sparse_respond, so both decrypt to identical bytes.
RespondResult naive_respond(const PirQuery& query, const DenseDatabase& db, uint32_t payload_width,
                            unsigned s, Rng& rng);

// Converts an EmptySentinel into E^d(0); passes responses through.
PirResponse finalize_response(const crypto::PaillierPublicKey& pk, const RespondResult& result,
                              unsigned d, size_t payload_len, Rng& rng);

}  // namespace octopus::pir
