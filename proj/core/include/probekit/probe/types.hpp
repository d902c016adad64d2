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

#ifndef PROBEKIT_PROBE_TYPES_HPP
#define PROBEKIT_PROBE_TYPES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "probekit/ipv4.hpp"
#include "probekit/probe/mpls.hpp"
#include "probekit/time.hpp"

namespace probekit {

enum class ProbeMethod { kIcmpEcho, kUdp };

enum class ReplyKind { kTimeExceeded, kEchoReply, kDestUnreachable, kTimeout };

/// Initial TTL a router put on its reply packets, snapped to the classes
/// real stacks use. The class is the hardware/OS fingerprint we expose.
enum class InitialTtlClass : std::uint16_t { k32 = 32, k64 = 64, k128 = 128, k255 = 255 };

/// One traceroute-style measurement request.
struct ProbeSpec {
    Ipv4Addr target;
    ProbeMethod method = ProbeMethod::kIcmpEcho;
    int max_ttl = 30;           // 1..=64
    int attempts_per_hop = 3;   // 1..=5
    double pps = 100.0;         // > 0
    int gap_limit = 5;          // >= 1 consecutive unresponsive hops before abort
    std::uint16_t flow_id = 0;  // held constant across the whole trace

    /// Throws std::invalid_argument when a field is out of its range.
    void validate() const;
};

/// Evidence collected for one TTL.
struct HopRecord {
    int ttl_sent = 0;
    std::optional<Ipv4Addr> responder;
    ReplyKind reply_kind = ReplyKind::kTimeout;
    std::optional<micros_t> rtt_us;
    std::optional<std::uint8_t> reply_ip_ttl;
    std::vector<MplsLabelEntry> labels;
    std::optional<InitialTtlClass> fingerprint;

    bool operator==(const HopRecord&) const = default;
};

/// Full outcome of one trace. Hops are strictly increasing in ttl_sent and
/// never extend past the first destination reply.
struct TraceResult {
    ProbeSpec spec;
    std::vector<HopRecord> hops;
    bool destination_reached = false;
    micros_t started_at = 0;
    micros_t finished_at = 0;
    /// Set when the backend failed mid-trace and hops are partial.
    std::optional<std::string> error;
};

bool operator==(const ProbeSpec& a, const ProbeSpec& b);
bool operator==(const TraceResult& a, const TraceResult& b);

const char* to_string(ProbeMethod m);
const char* to_string(ReplyKind k);
ProbeMethod probe_method_from_string(const std::string& s);   // throws ParseError
ReplyKind reply_kind_from_string(const std::string& s);       // throws ParseError

/// Smallest class in {32, 64, 128, 255} at or above the TTL the reply must
/// have started with, i.e. reply_ip_ttl corrected by the forward distance.
/// Throws std::out_of_range when the corrected TTL exceeds 255.
InitialTtlClass infer_initial_ttl(std::uint8_t reply_ip_ttl, int hop_distance);

}  // namespace probekit

#endif  // PROBEKIT_PROBE_TYPES_HPP
