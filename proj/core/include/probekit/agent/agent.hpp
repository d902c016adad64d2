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

#ifndef PROBEKIT_AGENT_AGENT_HPP
#define PROBEKIT_AGENT_AGENT_HPP

#include <condition_variable>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "probekit/agent/protocol.hpp"
#include "probekit/probe/backend.hpp"
#include "probekit/probe/rate_limiter.hpp"
#include "probekit/time.hpp"

namespace probekit {

/// Receives one serialized response record per call. Calls are serialized
/// by the agent; a sink may drop lines (e.g. after a client disconnect).
using ResponseSink = std::function<void(const std::string& line)>;

struct AgentConfig {
    double pps = 100.0;    // global cap shared by every job
    int max_parallel = 1;  // worker pool size
};

/// Measurement server core: a FIFO command queue drained by a bounded
/// worker pool, every send paced through one shared limiter so the merged
/// probe timeline of all jobs honors the configured pps. Transport-free;
/// serve_tcp() puts a line-delimited socket in front of it.
///
/// Every accepted command produces exactly one final record (result,
/// status, error or bye) carrying its request_id. Malformed input never
/// terminates the agent.
class Agent {
public:
    Agent(AgentConfig config, Clock& clock, NetworkBackend& backend);
    ~Agent();

    Agent(const Agent&) = delete;
    Agent& operator=(const Agent&) = delete;

    void set_sink(ResponseSink sink);

    void start();

    /// Parses and dispatches one control line; parse failures emit an
    /// error record (request_id "?" when unknown) and keep the agent up.
    void submit_line(const std::string& line);

    void submit(const Command& cmd);

    /// Finishes active jobs, emits an error record for each job still
    /// queued, then stops the workers. Idempotent.
    void drain_and_stop();

    bool quit_requested() const;
    int queued() const;
    int active() const;

    RateLimiter& limiter() { return limiter_; }

private:
    struct Job {
        std::string request_id;
        ProbeSpec spec;
    };

    void worker_loop();
    void emit(const std::string& line);
    void run_job(const Job& job);

    AgentConfig config_;
    Clock& clock_;
    NetworkBackend& backend_;
    RateLimiter limiter_;
    micros_t started_at_;

    mutable std::mutex mu_;
    std::condition_variable cv_;
    std::deque<Job> queue_;
    int active_ = 0;
    bool stopping_ = false;
    bool quit_requested_ = false;
    std::vector<std::thread> workers_;

    std::mutex sink_mu_;
    ResponseSink sink_;
};

}  // namespace probekit

#endif  // PROBEKIT_AGENT_AGENT_HPP
