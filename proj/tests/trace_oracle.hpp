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

// Straight-line replay oracle for traces over a SimTopology. Written
// independently of the probing engine: no RateLimiter, no SimBackend, no
// run_trace; it re-derives every timestamp and field from first principles
// so engine regressions cannot hide. Only the topology's published respond
// hash contract is duplicated here (verbatim splitmix64).

#ifndef PROBEKIT_TESTS_TRACE_ORACLE_HPP
#define PROBEKIT_TESTS_TRACE_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "probekit/probe/sim_network.hpp"
#include "probekit/probe/types.hpp"

namespace probekit::testing {

inline std::uint64_t oracle_respond_hash(std::uint64_t seed, int ttl, int attempt) {
    std::uint64_t x = seed ^ (std::uint64_t(std::uint32_t(ttl)) << 32) ^ std::uint32_t(attempt);
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline TraceResult trace_replay_oracle(const ProbeSpec& spec, const SimTopology& topo,
                                       std::uint64_t seed, micros_t timeout_us,
                                       micros_t start_time = 0) {
    const micros_t interval = std::max<micros_t>(1, micros_t(std::ceil(1e6 / spec.pps)));

    TraceResult expected;
    expected.spec = spec;
    expected.started_at = start_time;

    micros_t clock = start_time;
    micros_t next_free = 0;
    bool first_acquire = true;
    int consecutive_timeouts = 0;

    for (int ttl = 1; ttl <= spec.max_ttl; ++ttl) {
        const int d = std::min<int>(ttl, int(topo.hops.size()));
        const SimHop& hop = topo.hops[std::size_t(d) - 1];

        bool answered = false;
        for (int attempt = 1; attempt <= spec.attempts_per_hop; ++attempt) {
            const micros_t permit = first_acquire ? clock : std::max(clock, next_free);
            first_acquire = false;
            next_free = permit + interval;
            clock = permit;

            const bool responds =
                hop.respond_probability >= 1.0 ||
                (hop.respond_probability > 0.0 &&
                 double(oracle_respond_hash(seed, ttl, attempt)) / 18446744073709551616.0 <
                     hop.respond_probability);
            if (responds) {
                clock += 2 * hop.latency_us;
                answered = true;
                break;
            }
            clock += timeout_us;
        }

        HopRecord rec;
        rec.ttl_sent = ttl;
        if (answered) {
            rec.responder = hop.address;
            rec.rtt_us = 2 * hop.latency_us;
            rec.reply_ip_ttl =
                static_cast<std::uint8_t>(std::max<int>(1, int(hop.initial_ttl) - (d - 1)));
            rec.labels = hop.labels;
            const bool at_destination = hop.address == topo.destination;
            rec.reply_kind = at_destination
                                 ? (spec.method == ProbeMethod::kUdp ? ReplyKind::kDestUnreachable
                                                                     : ReplyKind::kEchoReply)
                                 : ReplyKind::kTimeExceeded;
            const int corrected = int(*rec.reply_ip_ttl) + ttl - 1;
            if (corrected <= 255) {
                const std::uint16_t cls = corrected <= 32    ? 32
                                          : corrected <= 64  ? 64
                                          : corrected <= 128 ? 128
                                                             : 255;
                rec.fingerprint = static_cast<InitialTtlClass>(cls);
            }
            expected.hops.push_back(std::move(rec));
            consecutive_timeouts = 0;
            if (at_destination) {
                expected.destination_reached = true;
                break;
            }
        } else {
            expected.hops.push_back(std::move(rec));
            if (++consecutive_timeouts >= spec.gap_limit) break;
        }
    }

    expected.finished_at = clock;
    return expected;
}

}  // namespace probekit::testing

#endif  // PROBEKIT_TESTS_TRACE_ORACLE_HPP
