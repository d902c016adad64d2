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

#ifndef PROBEKIT_PROBE_TRACE_HPP
#define PROBEKIT_PROBE_TRACE_HPP

#include <functional>

#include "probekit/probe/backend.hpp"
#include "probekit/probe/rate_limiter.hpp"
#include "probekit/probe/types.hpp"
#include "probekit/time.hpp"

namespace probekit {

using HopCallback = std::function<void(const HopRecord&)>;

/// Runs one trace: probes TTL 1..max_ttl in order, up to attempts_per_hop
/// tries each, pacing every send through the limiter. Stops early on the
/// first destination reply or after gap_limit consecutive unresponsive
/// hops. Every responsive hop carries responder, rtt, reply TTL, parsed
/// MPLS labels and the initial-TTL fingerprint.
///
/// When `shared_limiter` is null a private limiter is built from spec.pps;
/// an agent passes its global limiter instead so the merged send timeline
/// of all its jobs honors one pps cap.
///
/// A BackendError aborts the trace; the partial result carries the hops
/// collected so far and an error note.
TraceResult run_trace(const ProbeSpec& spec, NetworkBackend& net, Clock& clock,
                      RateLimiter* shared_limiter = nullptr, const HopCallback& on_hop = {});

}  // namespace probekit

#endif  // PROBEKIT_PROBE_TRACE_HPP
