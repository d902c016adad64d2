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

#ifndef PROBEKIT_PROBE_SERIALIZE_HPP
#define PROBEKIT_PROBE_SERIALIZE_HPP

#include <string>
#include <string_view>

#include "probekit/probe/types.hpp"

namespace probekit {

/// One self-describing JSON object, no newline. Integers in base 10,
/// addresses dotted-quad, optional fields omitted when absent. Suitable
/// for one-record-per-line streaming.
std::string serialize_result(const TraceResult& r);

/// Inverse of serialize_result. Throws ParseError on malformed input.
TraceResult deserialize_result(std::string_view line);

/// Hop rendering used for progress records and hop lines.
std::string serialize_hop(const HopRecord& hop);
HopRecord deserialize_hop(std::string_view line);  // throws ParseError

}  // namespace probekit

#endif  // PROBEKIT_PROBE_SERIALIZE_HPP
