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

#include "octopus/pir/respond.hpp"

#include <map>
#include <stdexcept>

namespace octopus::pir {
namespace {

using crypto::Ciphertext;
using crypto::Digits;

void check_inputs(const PirQuery& query, const QueryShape& db_shape, unsigned s) {
  if (!(query.shape == db_shape)) throw std::invalid_argument("query shape does not match database");
  if (s > query.shape.d()) throw std::invalid_argument("replace iteration must be in [0, d]");
  for (unsigned i = 0; i < query.shape.d(); ++i) {
    if (query.subqueries.size() != query.shape.d() || query.subqueries[i].size() != query.shape.dim(i)) {
      throw std::invalid_argument("sub-query length does not match shape");
    }
  }
}

std::vector<Ciphertext> select(const crypto::PaillierPublicKey& pk, const Ciphertext& q,
                               const Digits& digits) {
  std::vector<Ciphertext> out;
  out.reserve(digits.size());
  for (const BigInt& d : digits) out.push_back(crypto::hom_scale(pk, q, d));
  return out;
}

void accumulate(const crypto::PaillierPublicKey& pk, std::vector<Ciphertext>& acc,
                const std::vector<Ciphertext>& term) {
  for (size_t k = 0; k < acc.size(); ++k) acc[k] = crypto::hom_add(pk, acc[k], term[k]);
}

void mask(const crypto::PaillierPublicKey& pk, std::vector<Ciphertext>& chunks, Rng& rng) {
  for (auto& c : chunks) c = crypto::rerandomize(pk, c, rng);
}

// E(0_(s-1)) at layer s: one fresh encryption of zero per chunk.
std::vector<Ciphertext> fresh_zero(const crypto::PaillierPublicKey& pk, size_t count, Rng& rng) {
  std::vector<Ciphertext> out;
  out.reserve(count);
  for (size_t k = 0; k < count; ++k) out.push_back(crypto::paillier_encrypt(pk, 0, rng));
  return out;
}

RespondResult to_result(unsigned d, std::map<uint64_t, std::vector<Ciphertext>>&& final_slots) {
  if (final_slots.empty()) return EmptySentinel{};
  return PirResponse{crypto::LayeredCiphertext{static_cast<uint8_t>(d), std::move(final_slots.begin()->second)}};
}

}  // namespace

RespondResult sparse_respond(const PirQuery& query, const SparseDatabase& db, unsigned s, Rng& rng,
                             RespondStats* stats) {
  check_inputs(query, db.shape(), s);
  const auto& pk = query.pk;
  const unsigned d = query.shape.d();

  std::map<uint64_t, Digits> items;
  for (const auto& [pid, payload] : db.entries()) items.emplace(pid, crypto::payload_to_digits(pk, payload));
  const size_t item_digits0 = crypto::payload_digit_count(pk, db.payload_width());

  uint64_t span = db.capacity();
  std::map<uint64_t, std::vector<Ciphertext>> columns;
  for (unsigned i = 1; i <= d; ++i) {
    const uint64_t row_len = span / query.shape.dim(i - 1);
    const auto& subquery = query.subqueries[i - 1];
    columns.clear();
    size_t ops = 0;
    for (const auto& [ind, digits] : items) {
      const uint64_t r = ind / row_len;
      const uint64_t c = ind % row_len;
      std::vector<Ciphertext> term = select(pk, subquery[r], digits);
      ++ops;
      auto it = columns.find(c);
      if (it == columns.end()) {
        columns.emplace(c, std::move(term));
      } else {
        accumulate(pk, it->second, term);
      }
    }
    for (auto& [c, chunks] : columns) mask(pk, chunks, rng);
    if (stats) {
      stats->scale_ops.push_back(ops);
      stats->present_slots.push_back(columns.size());
    }
    span = row_len;

    if (i == s) {
      const size_t width = item_digits0 << (i - 1);
      for (uint64_t c = 0; c < span; ++c) {
        if (!columns.contains(c)) columns.emplace(c, fresh_zero(pk, width, rng));
      }
    }
    if (i < d) {
      items.clear();
      for (const auto& [c, chunks] : columns) items.emplace(c, crypto::chunks_to_digits(pk, chunks));
    }
  }
  return to_result(d, std::move(columns));
}

RespondResult naive_respond(const PirQuery& query, const DenseDatabase& db, uint32_t payload_width,
                            unsigned s, Rng& rng) {
  check_inputs(query, query.shape, s);
  if (db.size() != query.shape.capacity()) throw std::invalid_argument("dense database size != capacity");
  const auto& pk = query.pk;
  const unsigned d = query.shape.d();
  const size_t digits0 = crypto::payload_digit_count(pk, payload_width);

  // level[k] is the digit vector of slot k, or nullopt when the slot is empty.
  std::vector<std::optional<Digits>> level(db.size());
  for (size_t k = 0; k < db.size(); ++k) {
    if (!db[k]) continue;
    if (db[k]->size() != payload_width) throw std::invalid_argument("payload width mismatch");
    level[k] = crypto::payload_to_digits(pk, *db[k]);
  }
  size_t width = digits0;

  std::vector<std::optional<std::vector<Ciphertext>>> out;
  for (unsigned i = 1; i <= d; ++i) {
    const uint32_t rows = query.shape.dim(i - 1);
    const size_t row_len = level.size() / rows;
    out.assign(row_len, std::nullopt);
    const Digits zeros(width, BigInt(0));
    for (size_t c = 0; c < row_len; ++c) {
      bool any = false;
      for (uint32_t r = 0; r < rows; ++r) any = any || level[r * row_len + c].has_value();
      if (!any) continue;
      std::vector<Ciphertext> acc(width, Ciphertext{1});
      for (uint32_t r = 0; r < rows; ++r) {
        const auto& item = level[r * row_len + c];
        accumulate(pk, acc, select(pk, query.subqueries[i - 1][r], item ? *item : zeros));
      }
      mask(pk, acc, rng);
      out[c] = std::move(acc);
    }
    if (i == s) {
      for (auto& slot : out) {
        if (!slot) slot = fresh_zero(pk, width, rng);
      }
    }
    if (i < d) {
      level.assign(row_len, std::nullopt);
      for (size_t c = 0; c < row_len; ++c) {
        if (out[c]) level[c] = crypto::chunks_to_digits(pk, *out[c]);
      }
      width *= crypto::kExpansionFactor;
    }
  }
  if (!out[0]) return EmptySentinel{};
  return PirResponse{crypto::LayeredCiphertext{static_cast<uint8_t>(d), std::move(*out[0])}};
}

PirResponse finalize_response(const crypto::PaillierPublicKey& pk, const RespondResult& result,
                              unsigned d, size_t payload_len, Rng& rng) {
  if (const auto* resp = std::get_if<PirResponse>(&result)) return *resp;
  return PirResponse{crypto::layered_encrypt_zero(pk, payload_len, 0, d, rng)};
}

}  // namespace octopus::pir
