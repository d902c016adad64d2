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

#include "probekit/probe/serialize.hpp"

#include "json_codec.hpp"
#include "probekit/errors.hpp"

namespace probekit {

using nlohmann::json;

namespace {

json parse_or_throw(std::string_view line) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw ParseError("not valid JSON: " + std::string(line));
    return j;
}

template <typename T>
T require(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field: ") + key);
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ParseError(std::string("bad field: ") + key);
    }
}

Ipv4Addr require_addr(const json& j, const char* key) {
    return Ipv4Addr::parse(require<std::string>(j, key));
}

}  // namespace

json spec_to_json(const ProbeSpec& spec) {
    return json{{"target", spec.target.to_string()},
                {"method", to_string(spec.method)},
                {"max_ttl", spec.max_ttl},
                {"attempts_per_hop", spec.attempts_per_hop},
                {"pps", spec.pps},
                {"gap_limit", spec.gap_limit},
                {"flow_id", spec.flow_id}};
}

ProbeSpec spec_from_json(const json& j) {
    ProbeSpec spec;
    spec.target = require_addr(j, "target");
    spec.method = probe_method_from_string(require<std::string>(j, "method"));
    spec.max_ttl = require<int>(j, "max_ttl");
    spec.attempts_per_hop = require<int>(j, "attempts_per_hop");
    spec.pps = require<double>(j, "pps");
    spec.gap_limit = require<int>(j, "gap_limit");
    spec.flow_id = require<std::uint16_t>(j, "flow_id");
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return spec;
}

json hop_to_json(const HopRecord& hop) {
    json j{{"ttl_sent", hop.ttl_sent}, {"reply_kind", to_string(hop.reply_kind)}};
    if (hop.responder) j["responder"] = hop.responder->to_string();
    if (hop.rtt_us) j["rtt_us"] = *hop.rtt_us;
    if (hop.reply_ip_ttl) j["reply_ip_ttl"] = *hop.reply_ip_ttl;
    if (hop.fingerprint) j["fingerprint"] = static_cast<std::uint16_t>(*hop.fingerprint);
    json labels = json::array();
    for (const auto& e : hop.labels)
        labels.push_back(json{{"label", e.label},
                              {"tc", e.tc},
                              {"bottom_of_stack", e.bottom_of_stack},
                              {"ttl", e.ttl}});
    j["labels"] = std::move(labels);
    return j;
}

HopRecord hop_from_json(const json& j) {
    HopRecord hop;
    hop.ttl_sent = require<int>(j, "ttl_sent");
    hop.reply_kind = reply_kind_from_string(require<std::string>(j, "reply_kind"));
    if (j.contains("responder")) hop.responder = require_addr(j, "responder");
    if (j.contains("rtt_us")) hop.rtt_us = require<micros_t>(j, "rtt_us");
    if (j.contains("reply_ip_ttl")) hop.reply_ip_ttl = require<std::uint8_t>(j, "reply_ip_ttl");
    if (j.contains("fingerprint")) {
        const auto v = require<std::uint16_t>(j, "fingerprint");
        if (v != 32 && v != 64 && v != 128 && v != 255)
            throw ParseError("bad fingerprint class");
        hop.fingerprint = static_cast<InitialTtlClass>(v);
    }
    if (!j.contains("labels") || !j.at("labels").is_array())
        throw ParseError("missing field: labels");
    for (const auto& je : j.at("labels")) {
        try {
            hop.labels.push_back(MplsLabelEntry::make(
                require<std::uint32_t>(je, "label"), require<std::uint8_t>(je, "tc"),
                require<bool>(je, "bottom_of_stack"), require<std::uint8_t>(je, "ttl")));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    // timeout <=> no responder <=> no rtt
    const bool timed_out = hop.reply_kind == ReplyKind::kTimeout;
    if (timed_out != !hop.responder.has_value() || timed_out != !hop.rtt_us.has_value())
        throw ParseError("inconsistent timeout fields");
    return hop;
}

json result_to_json(const TraceResult& r) {
    json j{{"type", "trace_result"},
           {"spec", spec_to_json(r.spec)},
           {"destination_reached", r.destination_reached},
           {"started_at", r.started_at},
           {"finished_at", r.finished_at}};
    json hops = json::array();
    for (const auto& hop : r.hops) hops.push_back(hop_to_json(hop));
    j["hops"] = std::move(hops);
    if (r.error) j["error"] = *r.error;
    return j;
}

TraceResult result_from_json(const json& j) {
    TraceResult r;
    if (!j.contains("spec")) throw ParseError("missing field: spec");
    r.spec = spec_from_json(j.at("spec"));
    r.destination_reached = require<bool>(j, "destination_reached");
    r.started_at = require<micros_t>(j, "started_at");
    r.finished_at = require<micros_t>(j, "finished_at");
    if (!j.contains("hops") || !j.at("hops").is_array()) throw ParseError("missing field: hops");
    for (const auto& jh : j.at("hops")) r.hops.push_back(hop_from_json(jh));
    if (j.contains("error")) r.error = require<std::string>(j, "error");

    int prev_ttl = 0;
    for (const auto& hop : r.hops) {
        if (hop.ttl_sent <= prev_ttl) throw ParseError("hops not strictly increasing in ttl_sent");
        prev_ttl = hop.ttl_sent;
    }
    return r;
}

std::string serialize_result(const TraceResult& r) { return result_to_json(r).dump(); }

TraceResult deserialize_result(std::string_view line) {
    return result_from_json(parse_or_throw(line));
}

std::string serialize_hop(const HopRecord& hop) { return hop_to_json(hop).dump(); }

HopRecord deserialize_hop(std::string_view line) { return hop_from_json(parse_or_throw(line)); }

}  // namespace probekit
