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

// Internal JSON bindings for the wire and file formats. Not installed;
// the public surface stays std-only.

#ifndef PROBEKIT_SRC_JSON_CODEC_HPP
#define PROBEKIT_SRC_JSON_CODEC_HPP

#include <json.hpp>

#include "probekit/probe/types.hpp"

namespace probekit {

nlohmann::json spec_to_json(const ProbeSpec& spec);
ProbeSpec spec_from_json(const nlohmann::json& j);  // throws ParseError

nlohmann::json hop_to_json(const HopRecord& hop);
HopRecord hop_from_json(const nlohmann::json& j);  // throws ParseError

nlohmann::json result_to_json(const TraceResult& r);
TraceResult result_from_json(const nlohmann::json& j);  // throws ParseError

}  // namespace probekit

#endif  // PROBEKIT_SRC_JSON_CODEC_HPP
