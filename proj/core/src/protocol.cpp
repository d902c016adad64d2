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

#include "probekit/agent/protocol.hpp"

#include "json_codec.hpp"
#include "probekit/errors.hpp"

namespace probekit {

using nlohmann::json;

Command parse_command(std::string_view line) {
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw BadCommand("not a JSON object");

    Command cmd;
    if (!j.contains("request_id") || !j.at("request_id").is_string())
        throw BadCommand("missing request_id");
    cmd.request_id = j.at("request_id").get<std::string>();
    if (cmd.request_id.empty()) throw BadCommand("empty request_id");

    if (!j.contains("kind") || !j.at("kind").is_string()) throw BadCommand("missing kind");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "trace") {
        cmd.kind = CommandKind::kTrace;
        if (!j.contains("spec")) throw BadCommand("trace needs a spec");
        try {
            cmd.payload = spec_from_json(j.at("spec"));
        } catch (const std::exception& e) {
            throw BadCommand(std::string("bad spec: ") + e.what());
        }
    } else if (kind == "status") {
        cmd.kind = CommandKind::kStatus;
    } else if (kind == "quit") {
        cmd.kind = CommandKind::kQuit;
    } else {
        throw BadCommand("unknown kind: " + kind);
    }
    return cmd;
}

std::string progress_record(const std::string& request_id, const HopRecord& hop) {
    return json{{"type", "progress"}, {"request_id", request_id}, {"hop", hop_to_json(hop)}}
        .dump();
}

std::string result_record(const std::string& request_id, const TraceResult& result) {
    return json{{"type", "result"}, {"request_id", request_id}, {"result", result_to_json(result)}}
        .dump();
}

std::string status_record(const std::string& request_id, int queued, int active,
                          micros_t uptime_us) {
    return json{{"type", "status"},
                {"request_id", request_id},
                {"queued", queued},
                {"active", active},
                {"uptime_us", uptime_us}}
        .dump();
}

std::string error_record(const std::string& request_id, const std::string& message) {
    return json{{"type", "error"}, {"request_id", request_id}, {"message", message}}.dump();
}

std::string bye_record(const std::string& request_id) {
    return json{{"type", "bye"}, {"request_id", request_id}}.dump();
}

std::string extract_request_id(std::string_view line) {
    const json j = json::parse(line, nullptr, false);
    if (!j.is_discarded() && j.is_object() && j.contains("request_id") &&
        j.at("request_id").is_string())
        return j.at("request_id").get<std::string>();
    return {};
}

}  // namespace probekit
