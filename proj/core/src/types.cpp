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

#include "probekit/probe/types.hpp"

#include <stdexcept>

#include "probekit/errors.hpp"

namespace probekit {

void ProbeSpec::validate() const {
    if (max_ttl < 1 || max_ttl > 64) throw std::invalid_argument("max_ttl must be in 1..=64");
    if (attempts_per_hop < 1 || attempts_per_hop > 5)
        throw std::invalid_argument("attempts_per_hop must be in 1..=5");
    if (!(pps > 0)) throw std::invalid_argument("pps must be positive");
    if (gap_limit < 1) throw std::invalid_argument("gap_limit must be >= 1");
}

bool operator==(const ProbeSpec& a, const ProbeSpec& b) {
    return a.target == b.target && a.method == b.method && a.max_ttl == b.max_ttl &&
           a.attempts_per_hop == b.attempts_per_hop && a.pps == b.pps &&
           a.gap_limit == b.gap_limit && a.flow_id == b.flow_id;
}

bool operator==(const TraceResult& a, const TraceResult& b) {
    return a.spec == b.spec && a.hops == b.hops &&
           a.destination_reached == b.destination_reached && a.started_at == b.started_at &&
           a.finished_at == b.finished_at && a.error == b.error;
}

const char* to_string(ProbeMethod m) {
    return m == ProbeMethod::kIcmpEcho ? "icmp-echo" : "udp";
}

const char* to_string(ReplyKind k) {
    switch (k) {
        case ReplyKind::kTimeExceeded: return "time-exceeded";
        case ReplyKind::kEchoReply: return "echo-reply";
        case ReplyKind::kDestUnreachable: return "dest-unreachable";
        case ReplyKind::kTimeout: return "timeout";
    }
    return "timeout";
}

ProbeMethod probe_method_from_string(const std::string& s) {
    if (s == "icmp-echo") return ProbeMethod::kIcmpEcho;
    if (s == "udp") return ProbeMethod::kUdp;
    throw ParseError("unknown probe method: " + s);
}

ReplyKind reply_kind_from_string(const std::string& s) {
    if (s == "time-exceeded") return ReplyKind::kTimeExceeded;
    if (s == "echo-reply") return ReplyKind::kEchoReply;
    if (s == "dest-unreachable") return ReplyKind::kDestUnreachable;
    if (s == "timeout") return ReplyKind::kTimeout;
    throw ParseError("unknown reply kind: " + s);
}

InitialTtlClass infer_initial_ttl(std::uint8_t reply_ip_ttl, int hop_distance) {
    if (hop_distance < 1) throw std::out_of_range("hop_distance must be >= 1");
    const int corrected = int(reply_ip_ttl) + hop_distance - 1;
    if (corrected > 255) throw std::out_of_range("corrected TTL exceeds 255");
    if (corrected <= 32) return InitialTtlClass::k32;
    if (corrected <= 64) return InitialTtlClass::k64;
    if (corrected <= 128) return InitialTtlClass::k128;
    return InitialTtlClass::k255;
}

}  // namespace probekit
