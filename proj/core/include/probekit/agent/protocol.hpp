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

#ifndef PROBEKIT_AGENT_PROTOCOL_HPP
#define PROBEKIT_AGENT_PROTOCOL_HPP

#include <optional>
#include <string>
#include <string_view>

#include "probekit/probe/types.hpp"
#include "probekit/time.hpp"

namespace probekit {

// Control channel: UTF-8 lines, one JSON object per line.
// Requests:  {"kind":"trace"|"status"|"quit", "request_id":"...", "spec":{...}}
// Responses: {"type":"progress"|"result"|"status"|"error"|"bye",
//             "request_id":"...", ...}

enum class CommandKind { kTrace, kStatus, kQuit };

struct Command {
    CommandKind kind = CommandKind::kStatus;
    std::optional<ProbeSpec> payload;  // present iff kind == kTrace
    std::string request_id;
};

/// Parses one command line. Throws BadCommand on anything else: invalid
/// JSON, unknown kind, missing request_id, trace without a valid spec.
Command parse_command(std::string_view line);

std::string progress_record(const std::string& request_id, const HopRecord& hop);
std::string result_record(const std::string& request_id, const TraceResult& result);
std::string status_record(const std::string& request_id, int queued, int active,
                          micros_t uptime_us);
std::string error_record(const std::string& request_id, const std::string& message);
std::string bye_record(const std::string& request_id);

/// Best-effort request_id extraction from any request or response line;
/// empty string when absent. Never throws.
std::string extract_request_id(std::string_view line);

}  // namespace probekit

#endif  // PROBEKIT_AGENT_PROTOCOL_HPP
