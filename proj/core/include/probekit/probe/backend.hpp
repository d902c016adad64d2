/*
 *
 * Copyright 2026 Probekit authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#ifndef PROBEKIT_PROBE_BACKEND_HPP
#define PROBEKIT_PROBE_BACKEND_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "probekit/ipv4.hpp"
#include "probekit/probe/types.hpp"

namespace probekit {

struct ProbeRequest {
    Ipv4Addr target;
    int ttl = 1;
    int attempt = 1;  // 1-based attempt index at this TTL
    ProbeMethod method = ProbeMethod::kIcmpEcho;
    std::uint16_t flow_id = 0;
};

struct ProbeReply {
    Ipv4Addr responder;
    ReplyKind kind = ReplyKind::kTimeExceeded;
    micros_t rtt_us = 0;
    std::uint8_t reply_ip_ttl = 0;
    /// Raw ICMP extension region, if the reply carried one.
    std::vector<std::uint8_t> extension;
};

/// Where probes go. probe() blocks until a reply arrives or the backend's
/// receive timeout elapses (the simulated backend advances its clock
/// instead), and returns nullopt on timeout. Throws BackendError when the
/// transport itself fails.
class NetworkBackend {
public:
    virtual ~NetworkBackend() = default;
    virtual std::optional<ProbeReply> probe(const ProbeRequest& req) = 0;
};

}  // namespace probekit

#endif  // PROBEKIT_PROBE_BACKEND_HPP
