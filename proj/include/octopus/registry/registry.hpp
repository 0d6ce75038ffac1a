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
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "octopus/crypto/prf.hpp"

namespace octopus::registry {

struct UserRecord {
  std::string uid;
  uint64_t gid = 0;
  uint64_t pid = 0;
  crypto::PrfSeed tau_eu;  // shared with the exchanger
};

struct LoanRecord {
  std::string uid;
  std::string lender_id;
  uint64_t amount = 0;
  crypto::PrfSeed tau_iu;  // shared between borrower and lender
};

struct GroupSnapshot {
  uint64_t gid = 0;
  std::vector<std::pair<uint64_t, std::string>> occupancy;  // (pid, uid), pid increasing
  std::string as_of_date;

  friend bool operator==(const GroupSnapshot&, const GroupSnapshot&) = default;
};

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Users are placed into equal-size groups in registration order. All
// mutations are appended to a record log from which save/load rebuild state.
class Registry {
 public:
  explicit Registry(uint64_t group_size, uint64_t amount_limit = UINT64_MAX);

  uint64_t group_size() const { return group_size_; }
  uint64_t amount_limit() const { return amount_limit_; }
  uint64_t group_count() const;
  size_t user_count() const { return users_.size(); }

  // Throws RegistryError on a duplicate uid.
  const UserRecord& register_user(const std::string& uid, Rng& rng);
  void register_lender(const std::string& lender_id);
  // Upserts the (uid, lender) balance with a fresh seed. Throws RegistryError
  // for an unknown lender or an amount at or above the limit. The borrower
  // need not be registered; such loans never get a query slot.
  const LoanRecord& record_loan(const std::string& uid, const std::string& lender_id, uint64_t amount,
                                Rng& rng);

  const UserRecord* find_user(const std::string& uid) const;
  const UserRecord* user_at(uint64_t gid, uint64_t pid) const;
  const std::set<std::string>& lenders() const { return lenders_; }
  std::vector<LoanRecord> loans_of(const std::string& uid) const;
  std::vector<LoanRecord> loans_at(const std::string& lender_id) const;

  // Layout of every group as of `date`. Throws RegistryError for an unknown lender.
  std::vector<GroupSnapshot> sync_groups(const std::string& lender_id, const std::string& date) const;

  Bytes save() const;
  static Registry load(ByteSpan data);

 private:
  void apply_user(UserRecord rec);
  void apply_loan(LoanRecord rec);

  uint64_t group_size_;
  uint64_t amount_limit_;
  std::vector<UserRecord> users_;  // registration order == fill order
  std::map<std::string, size_t> user_index_;
  std::set<std::string> lenders_;
  std::map<std::pair<std::string, std::string>, LoanRecord> loans_;  // (uid, lender)
  ByteWriter log_;
};

}  // namespace octopus::registry
