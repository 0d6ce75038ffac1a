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

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "octopus/protocol/messages.hpp"

namespace octopus::protocol {

using Endpoint = std::string;

inline const Endpoint kOriginator = "originator";
inline const Endpoint kExchanger = "exchanger";
inline const Endpoint kBorrower = "borrower";  // anonymous address behind the exchanger
Endpoint lender_endpoint(const std::string& lender_id);

struct TrafficRecord {
  Endpoint from;
  Endpoint to;
  MsgType type;
  Bytes frame;
};

struct Delivery {
  Endpoint from;
  Bytes frame;
};

// Point-to-point frame delivery. Frames to one endpoint arrive in send order.
class Transport {
 public:
  virtual ~Transport() = default;

  void send(const Endpoint& from, const Endpoint& to, Bytes frame);
  // Next frame for `to`, or nullopt when none is pending.
  virtual std::optional<Delivery> poll(const Endpoint& to) = 0;
  virtual std::string name() const = 0;

  const std::vector<TrafficRecord>& log() const { return log_; }
  // Counted separately from the log.
  uint64_t bytes_sent() const { return bytes_sent_; }
  // Frames sent to or by `endpoint`, in order.
  std::vector<const TrafficRecord*> transcript(const Endpoint& endpoint) const;
  uint64_t bytes_between(const Endpoint& from, const Endpoint& to) const;

 protected:
  virtual void deliver(const Endpoint& from, const Endpoint& to, Bytes frame) = 0;

 private:
  std::vector<TrafficRecord> log_;
  uint64_t bytes_sent_ = 0;
};

class InProcTransport : public Transport {
 public:
  std::optional<Delivery> poll(const Endpoint& to) override;
  std::string name() const override { return "inproc"; }

 protected:
  void deliver(const Endpoint& from, const Endpoint& to, Bytes frame) override;

 private:
  std::map<Endpoint, std::deque<Delivery>> queues_;
};

// Every endpoint gets its own loopback TCP connection; a reader thread per
// connection drains frames so senders never block on a full socket buffer.
class TcpTransport : public Transport {
 public:
  TcpTransport();
  ~TcpTransport() override;
  TcpTransport(const TcpTransport&) = delete;
  TcpTransport& operator=(const TcpTransport&) = delete;

  std::optional<Delivery> poll(const Endpoint& to) override;
  std::string name() const override { return "tcp"; }
  uint16_t port() const;

 protected:
  void deliver(const Endpoint& from, const Endpoint& to, Bytes frame) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::unique_ptr<Transport> make_transport(std::string_view kind);

}  // namespace octopus::protocol
