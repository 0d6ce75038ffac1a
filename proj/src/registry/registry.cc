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

#include "octopus/registry/registry.hpp"

namespace octopus::registry {
namespace {

constexpr uint8_t kUser = 1;
constexpr uint8_t kLender = 2;
constexpr uint8_t kLoan = 3;

}  // namespace

Registry::Registry(uint64_t group_size, uint64_t amount_limit)
    : group_size_(group_size), amount_limit_(amount_limit) {
  if (group_size < 2) throw std::invalid_argument("group size must be >= 2");
}

uint64_t Registry::group_count() const { return (users_.size() + group_size_ - 1) / group_size_; }

const UserRecord& Registry::register_user(const std::string& uid, Rng& rng) {
  if (user_index_.contains(uid)) throw RegistryError("user already registered: " + uid);
  const uint64_t slot = users_.size();
  apply_user(UserRecord{uid, slot / group_size_, slot % group_size_, crypto::PrfSeed::random(rng)});
  return users_.back();
}

void Registry::register_lender(const std::string& lender_id) {
  if (lender_id.empty()) throw RegistryError("empty lender id");
  if (!lenders_.insert(lender_id).second) return;
  log_.put_u8(kLender);
  log_.put_string(lender_id);
}

const LoanRecord& Registry::record_loan(const std::string& uid, const std::string& lender_id, uint64_t amount,
                                        Rng& rng) {
  if (!lenders_.contains(lender_id)) throw RegistryError("unknown lender: " + lender_id);
  if (amount >= amount_limit_) throw RegistryError("loan amount exceeds the aggregate-safe limit");
  apply_loan(LoanRecord{uid, lender_id, amount, crypto::PrfSeed::random(rng)});
  return loans_.at({uid, lender_id});
}

void Registry::apply_user(UserRecord rec) {
  log_.put_u8(kUser);
  log_.put_string(rec.uid);
  log_.put_u64(rec.gid);
  log_.put_u64(rec.pid);
  log_.put_bytes(rec.tau_eu.secret());
  user_index_[rec.uid] = users_.size();
  users_.push_back(std::move(rec));
}

void Registry::apply_loan(LoanRecord rec) {
  log_.put_u8(kLoan);
  log_.put_string(rec.uid);
  log_.put_string(rec.lender_id);
  log_.put_u64(rec.amount);
  log_.put_bytes(rec.tau_iu.secret());
  auto key = std::make_pair(rec.uid, rec.lender_id);
  loans_.insert_or_assign(std::move(key), std::move(rec));
}

const UserRecord* Registry::find_user(const std::string& uid) const {
  auto it = user_index_.find(uid);
  return it == user_index_.end() ? nullptr : &users_[it->second];
}

const UserRecord* Registry::user_at(uint64_t gid, uint64_t pid) const {
  if (pid >= group_size_) return nullptr;
  const uint64_t slot = gid * group_size_ + pid;
  return slot < users_.size() ? &users_[slot] : nullptr;
}

std::vector<LoanRecord> Registry::loans_of(const std::string& uid) const {
  std::vector<LoanRecord> out;
  for (auto it = loans_.lower_bound({uid, ""}); it != loans_.end() && it->first.first == uid; ++it) {
    out.push_back(it->second);
  }
  return out;
}

std::vector<LoanRecord> Registry::loans_at(const std::string& lender_id) const {
  std::vector<LoanRecord> out;
  for (const auto& [key, rec] : loans_) {
    if (key.second == lender_id) out.push_back(rec);
  }
  return out;
}

std::vector<GroupSnapshot> Registry::sync_groups(const std::string& lender_id, const std::string& date) const {
  if (!lenders_.contains(lender_id)) throw RegistryError("unknown lender: " + lender_id);
  std::vector<GroupSnapshot> out(group_count());
  for (uint64_t g = 0; g < out.size(); ++g) {
    out[g].gid = g;
    out[g].as_of_date = date;
  }
  for (const auto& u : users_) out[u.gid].occupancy.emplace_back(u.pid, u.uid);
  return out;
}

Bytes Registry::save() const {
  ByteWriter w;
  w.put_string("octopus-registry-v1");
  w.put_u64(group_size_);
  w.put_u64(amount_limit_);
  w.put_bytes(log_.view());
  return w.take();
}

Registry Registry::load(ByteSpan data) {
  ByteReader r(data);
  if (r.string() != "octopus-registry-v1") throw DecodeError("not a registry log");
  const uint64_t group_size = r.u64();
  Registry reg(group_size, r.u64());
  while (!r.done()) {
    switch (r.u8()) {
      case kUser: {
        UserRecord rec;
        rec.uid = r.string();
        rec.gid = r.u64();
        rec.pid = r.u64();
        rec.tau_eu = crypto::PrfSeed::from_bytes(r.bytes(32));
        if (reg.user_index_.contains(rec.uid) || rec.gid * group_size + rec.pid != reg.users_.size()) {
          throw DecodeError("registry log out of fill order");
        }
        reg.apply_user(std::move(rec));
        break;
      }
      case kLender:
        reg.register_lender(r.string());
        break;
      case kLoan: {
        LoanRecord rec;
        rec.uid = r.string();
        rec.lender_id = r.string();
        rec.amount = r.u64();
        rec.tau_iu = crypto::PrfSeed::from_bytes(r.bytes(32));
        if (!reg.lenders_.contains(rec.lender_id)) throw DecodeError("loan for unknown lender in log");
        reg.apply_loan(std::move(rec));
        break;
      }
      default:
        throw DecodeError("unknown registry record");
    }
  }
  return reg;
}

}  // namespace octopus::registry
