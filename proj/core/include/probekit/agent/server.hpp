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

#ifndef PROBEKIT_AGENT_SERVER_HPP
#define PROBEKIT_AGENT_SERVER_HPP

#include <functional>
#include <string>

#include "probekit/agent/agent.hpp"

namespace probekit {

struct ServeOptions {
    std::string listen = "127.0.0.1:0";  // host:port, port 0 picks one
    /// Called once listening, with the bound port. Test hook.
    std::function<void(int port)> on_listening;
};

/// Runs the line-delimited control channel in front of an agent: binds,
/// accepts one client at a time (sequential connections), feeds lines to
/// the agent and writes its response records back. Records for requests
/// submitted on a dropped connection are discarded, not replayed.
///
/// Returns 0 after a clean quit (actives drained), 1 when the endpoint
/// cannot be bound or the listener fails.
int serve_tcp(Agent& agent, const ServeOptions& options);

}  // namespace probekit

#endif  // PROBEKIT_AGENT_SERVER_HPP
