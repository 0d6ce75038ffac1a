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

#include "octopus/protocol/transport.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <condition_variable>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <system_error>
#include <thread>

namespace octopus::protocol {

Endpoint lender_endpoint(const std::string& lender_id) { return "lender/" + lender_id; }

void Transport::send(const Endpoint& from, const Endpoint& to, Bytes frame) {
  Envelope env = decode_frame(frame);
  bytes_sent_ += frame.size();
  log_.push_back(TrafficRecord{from, to, env.type, frame});
  deliver(from, to, std::move(frame));
}

std::vector<const TrafficRecord*> Transport::transcript(const Endpoint& endpoint) const {
  std::vector<const TrafficRecord*> out;
  for (const auto& rec : log_) {
    if (rec.from == endpoint || rec.to == endpoint) out.push_back(&rec);
  }
  return out;
}

uint64_t Transport::bytes_between(const Endpoint& from, const Endpoint& to) const {
  uint64_t total = 0;
  for (const auto& rec : log_) {
    if (rec.from == from && rec.to == to) total += rec.frame.size();
  }
  return total;
}

void InProcTransport::deliver(const Endpoint& from, const Endpoint& to, Bytes frame) {
  queues_[to].push_back(Delivery{from, std::move(frame)});
}

std::optional<Delivery> InProcTransport::poll(const Endpoint& to) {
  auto it = queues_.find(to);
  if (it == queues_.end() || it->second.empty()) return std::nullopt;
  Delivery d = std::move(it->second.front());
  it->second.pop_front();
  return d;
}

namespace {

[[noreturn]] void sys_fail(const char* what) { throw std::system_error(errno, std::generic_category(), what); }

void write_all(int fd, const uint8_t* data, size_t n) {
  while (n > 0) {
    ssize_t k = ::send(fd, data, n, MSG_NOSIGNAL);
    if (k < 0) {
      if (errno == EINTR) continue;
      sys_fail("send");
    }
    data += k;
    n -= static_cast<size_t>(k);
  }
}

bool read_all(int fd, uint8_t* data, size_t n) {
  while (n > 0) {
    ssize_t k = ::recv(fd, data, n, 0);
    if (k == 0) return false;
    if (k < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    data += k;
    n -= static_cast<size_t>(k);
  }
  return true;
}

}  // namespace

struct TcpTransport::Impl {
  struct Link {
    int writer = -1;
    int reader = -1;
    std::thread thread;
    std::mutex mu;
    std::condition_variable cv;
    std::deque<Delivery> inbox;
    size_t expected = 0;  // frames written but not yet polled
    bool closed = false;
  };

  int listener = -1;
  uint16_t port = 0;
  std::map<Endpoint, std::unique_ptr<Link>> links;

  Impl() {
    listener = ::socket(AF_INET, SOCK_STREAM, 0);
    if (listener < 0) sys_fail("socket");
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    addr.sin_port = 0;
    if (::bind(listener, reinterpret_cast<sockaddr*>(&addr), sizeof addr) < 0) sys_fail("bind");
    if (::listen(listener, 16) < 0) sys_fail("listen");
    socklen_t len = sizeof addr;
    if (::getsockname(listener, reinterpret_cast<sockaddr*>(&addr), &len) < 0) sys_fail("getsockname");
    port = ntohs(addr.sin_port);
  }

  ~Impl() {
    for (auto& [name, link] : links) {
      ::shutdown(link->writer, SHUT_RDWR);
      ::close(link->writer);
      if (link->thread.joinable()) link->thread.join();
      ::close(link->reader);
    }
    if (listener >= 0) ::close(listener);
  }

  Link& link_for(const Endpoint& to) {
    auto it = links.find(to);
    if (it != links.end()) return *it->second;
    auto link = std::make_unique<Link>();
    link->writer = ::socket(AF_INET, SOCK_STREAM, 0);
    if (link->writer < 0) sys_fail("socket");
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    addr.sin_port = htons(port);
    if (::connect(link->writer, reinterpret_cast<sockaddr*>(&addr), sizeof addr) < 0) sys_fail("connect");
    link->reader = ::accept(listener, nullptr, nullptr);
    if (link->reader < 0) sys_fail("accept");
    int one = 1;
    ::setsockopt(link->writer, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
    Link* raw = link.get();
    link->thread = std::thread([raw] { reader_loop(*raw); });
    return *links.emplace(to, std::move(link)).first->second;
  }

  // Stream framing: u16 sender length, sender, then the protocol frame whose
  // own 4-byte length prefix delimits it.
  static void reader_loop(Link& link) {
    for (;;) {
      uint8_t hdr[2];
      if (!read_all(link.reader, hdr, 2)) break;
      std::string from(static_cast<size_t>(hdr[0]) << 8 | hdr[1], '\0');
      if (!read_all(link.reader, reinterpret_cast<uint8_t*>(from.data()), from.size())) break;
      uint8_t len_bytes[4];
      if (!read_all(link.reader, len_bytes, 4)) break;
      uint32_t len = static_cast<uint32_t>(len_bytes[0]) << 24 | static_cast<uint32_t>(len_bytes[1]) << 16 |
                     static_cast<uint32_t>(len_bytes[2]) << 8 | len_bytes[3];
      Bytes frame(4 + static_cast<size_t>(len));
      std::memcpy(frame.data(), len_bytes, 4);
      if (!read_all(link.reader, frame.data() + 4, len)) break;
      std::lock_guard lock(link.mu);
      link.inbox.push_back(Delivery{std::move(from), std::move(frame)});
      link.cv.notify_all();
    }
    std::lock_guard lock(link.mu);
    link.closed = true;
    link.cv.notify_all();
  }
};

TcpTransport::TcpTransport() : impl_(std::make_unique<Impl>()) {}

TcpTransport::~TcpTransport() = default;

uint16_t TcpTransport::port() const { return impl_->port; }

void TcpTransport::deliver(const Endpoint& from, const Endpoint& to, Bytes frame) {
  auto& link = impl_->link_for(to);
  if (from.size() > 0xffff) throw std::length_error("endpoint name too long");
  Bytes out;
  out.reserve(2 + from.size() + frame.size());
  out.push_back(static_cast<uint8_t>(from.size() >> 8));
  out.push_back(static_cast<uint8_t>(from.size()));
  out.insert(out.end(), from.begin(), from.end());
  out.insert(out.end(), frame.begin(), frame.end());
  {
    std::lock_guard lock(link.mu);
    ++link.expected;
  }
  write_all(link.writer, out.data(), out.size());
}

std::optional<Delivery> TcpTransport::poll(const Endpoint& to) {
  auto it = impl_->links.find(to);
  if (it == impl_->links.end()) return std::nullopt;
  auto& link = *it->second;
  std::unique_lock lock(link.mu);
  if (link.expected == 0) return std::nullopt;
  link.cv.wait(lock, [&] { return !link.inbox.empty() || link.closed; });
  if (link.inbox.empty()) throw std::runtime_error("tcp link closed with frames in flight");
  Delivery d = std::move(link.inbox.front());
  link.inbox.pop_front();
  --link.expected;
  return d;
}

std::unique_ptr<Transport> make_transport(std::string_view kind) {
  if (kind == "inproc") return std::make_unique<InProcTransport>();
  if (kind == "tcp") return std::make_unique<TcpTransport>();
  throw std::invalid_argument("unknown transport: " + std::string(kind));
}

}  // namespace octopus::protocol
