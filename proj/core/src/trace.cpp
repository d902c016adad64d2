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

#include "probekit/probe/trace.hpp"

#include <optional>

#include "probekit/errors.hpp"

namespace probekit {

namespace {

HopRecord make_hop(int ttl, const std::optional<ProbeReply>& reply) {
    HopRecord hop;
    hop.ttl_sent = ttl;
    if (!reply) return hop;  // timeout: responder/rtt/fingerprint stay empty

    hop.responder = reply->responder;
    hop.reply_kind = reply->kind;
    hop.rtt_us = reply->rtt_us;
    hop.reply_ip_ttl = reply->reply_ip_ttl;
    try {
        hop.labels = parse_icmp_extensions(reply->extension);
    } catch (const MalformedExtension&) {
        hop.labels.clear();  // untrustworthy stack; keep the hop
    }
    try {
        hop.fingerprint = infer_initial_ttl(reply->reply_ip_ttl, ttl);
    } catch (const std::out_of_range&) {
        hop.fingerprint.reset();
    }
    return hop;
}

}  // namespace

TraceResult run_trace(const ProbeSpec& spec, NetworkBackend& net, Clock& clock,
                      RateLimiter* shared_limiter, const HopCallback& on_hop) {
    spec.validate();

    RateLimiter local(spec.pps);
    RateLimiter& limiter = shared_limiter ? *shared_limiter : local;

    TraceResult result;
    result.spec = spec;
    result.started_at = clock.now();

    int consecutive_timeouts = 0;
    for (int ttl = 1; ttl <= spec.max_ttl; ++ttl) {
        std::optional<ProbeReply> reply;
        try {
            for (int attempt = 1; attempt <= spec.attempts_per_hop && !reply; ++attempt) {
                clock.sleep_until(limiter.acquire(clock.now()));
                reply = net.probe({spec.target, ttl, attempt, spec.method, spec.flow_id});
            }
        } catch (const BackendError& e) {
            result.error = e.what();
            break;
        }

        HopRecord hop = make_hop(ttl, reply);
        if (on_hop) on_hop(hop);
        const ReplyKind kind = hop.reply_kind;
        result.hops.push_back(std::move(hop));

        if (!reply) {
            if (++consecutive_timeouts >= spec.gap_limit) break;
            continue;
        }
        consecutive_timeouts = 0;
        if (kind == ReplyKind::kEchoReply || kind == ReplyKind::kDestUnreachable) {
            result.destination_reached = true;
            break;
        }
    }

    result.finished_at = clock.now();
    return result;
}

}  // namespace probekit
