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

#ifndef PROBEKIT_PROBE_SIM_NETWORK_HPP
#define PROBEKIT_PROBE_SIM_NETWORK_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "probekit/probe/backend.hpp"
#include "probekit/probe/mpls.hpp"
#include "probekit/time.hpp"

namespace probekit {

/// One router position in a simulated path. Hop k (1-based TTL k) is
/// entries[k-1]; the last entry is the destination host.
struct SimHop {
    Ipv4Addr address;
    micros_t latency_us = 0;  // one-way; replies take 2x
    std::vector<MplsLabelEntry> labels;
    double respond_probability = 1.0;
    std::uint8_t initial_ttl = 255;  // TTL this router stamps on replies
};

/// Deterministic fake network shared by all probing tests.
///
/// Text format, one directive per line ('#' starts a comment):
///   hop <address> latency_us=<n> [respond=<p>] [initial_ttl=<n>]
///       [labels=<label>:<tc>:<bos>:<ttl>,<...>]
///   destination <address>          (optional; defaults to the last hop)
struct SimTopology {
    std::vector<SimHop> hops;
    Ipv4Addr destination;

    static SimTopology parse(std::istream& in);             // throws ConfigError
    static SimTopology parse_text(const std::string& text); // throws ConfigError
    static SimTopology load_file(const std::string& path);  // throws ConfigError

    std::string to_text() const;

    /// Throws ConfigError unless there is at least one hop and every
    /// latency is nonnegative.
    void validate() const;
};

/// Deterministic respond decision for (seed, ttl, attempt): the probe at
/// this position is answered iff the hash, mapped to [0,1), is below the
/// hop's respond probability. Splitmix64 over the packed inputs; part of
/// the topology's replay contract, so oracles can re-derive decisions
/// without sharing limiter or clock state.
std::uint64_t sim_respond_hash(std::uint64_t seed, int ttl, int attempt);

/// Network backend replaying a SimTopology on a (virtual or wall) clock.
/// probe() advances the clock by the round-trip time, or by timeout_us for
/// an unanswered probe. Thread-safe: decisions are pure functions of
/// (seed, ttl, attempt).
class SimBackend final : public NetworkBackend {
public:
    SimBackend(SimTopology topology, Clock& clock, std::uint64_t seed,
               micros_t timeout_us = 1'000'000);

    std::optional<ProbeReply> probe(const ProbeRequest& req) override;

    const SimTopology& topology() const { return topology_; }
    micros_t timeout_us() const { return timeout_us_; }

private:
    SimTopology topology_;
    Clock& clock_;
    std::uint64_t seed_;
    micros_t timeout_us_;
};

}  // namespace probekit

#endif  // PROBEKIT_PROBE_SIM_NETWORK_HPP
