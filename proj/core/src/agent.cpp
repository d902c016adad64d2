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

#include "probekit/agent/agent.hpp"

#include <json.hpp>

#include "probekit/errors.hpp"
#include "probekit/probe/trace.hpp"

namespace probekit {


Agent::Agent(AgentConfig config, Clock& clock, NetworkBackend& backend)
    : config_(config),
      clock_(clock),
      backend_(backend),
      limiter_(config.pps),
      started_at_(clock.now()) {
    if (config_.max_parallel < 1) config_.max_parallel = 1;
}

Agent::~Agent() { drain_and_stop(); }

void Agent::set_sink(ResponseSink sink) {
    std::lock_guard lock(sink_mu_);
    sink_ = std::move(sink);
}

void Agent::start() {
    std::lock_guard lock(mu_);
    if (!workers_.empty()) return;
    stopping_ = false;
    for (int i = 0; i < config_.max_parallel; ++i)
        workers_.emplace_back([this] { worker_loop(); });
}

void Agent::emit(const std::string& line) {
    std::lock_guard lock(sink_mu_);
    if (sink_) sink_(line);
}

void Agent::submit_line(const std::string& line) {
    Command cmd;
    try {
        cmd = parse_command(line);
    } catch (const BadCommand& e) {
        const std::string id = extract_request_id(line);
        emit(error_record(id.empty() ? "?" : id, e.what()));
        return;
    } catch (const std::exception& e) {
        emit(error_record("?", e.what()));
        return;
    }
    submit(cmd);
}

void Agent::submit(const Command& cmd) {
    switch (cmd.kind) {
        case CommandKind::kStatus:
            emit(status_record(cmd.request_id, queued(), active(), clock_.now() - started_at_));
            return;
        case CommandKind::kQuit: {
            emit(bye_record(cmd.request_id));
            std::lock_guard lock(mu_);
            quit_requested_ = true;
            return;
        }
        case CommandKind::kTrace: {
            {
                std::lock_guard lock(mu_);
                if (stopping_ || quit_requested_) {
                    // Final record still owed to the caller.
                    emit(error_record(cmd.request_id, "agent is shutting down"));
                    return;
                }
                queue_.push_back(Job{cmd.request_id, *cmd.payload});
            }
            cv_.notify_one();
            return;
        }
    }
}

void Agent::worker_loop() {
    for (;;) {
        Job job;
        {
            std::unique_lock lock(mu_);
            cv_.wait(lock, [this] { return stopping_ || !queue_.empty(); });
            if (queue_.empty()) return;  // stopping, nothing left to run
            job = std::move(queue_.front());
            queue_.pop_front();
            ++active_;
        }
        run_job(job);
        {
            std::lock_guard lock(mu_);
            --active_;
        }
        cv_.notify_all();
    }
}

void Agent::run_job(const Job& job) {
    try {
        const TraceResult result =
            run_trace(job.spec, backend_, clock_, &limiter_,
                      [&](const HopRecord& hop) { emit(progress_record(job.request_id, hop)); });
        if (result.error)
            emit(error_record(job.request_id, *result.error));
        else
            emit(result_record(job.request_id, result));
    } catch (const std::exception& e) {
        emit(error_record(job.request_id, e.what()));
    }
}

void Agent::drain_and_stop() {
    std::vector<Job> dropped;
    {
        std::unique_lock lock(mu_);
        if (stopping_ && workers_.empty()) return;
        // Queued-but-unstarted jobs are dropped, with a final record each.
        for (auto& job : queue_) dropped.push_back(std::move(job));
        queue_.clear();
        stopping_ = true;
        cv_.wait(lock, [this] { return active_ == 0; });
    }
    cv_.notify_all();
    for (auto& worker : workers_) worker.join();
    workers_.clear();
    for (const auto& job : dropped)
        emit(error_record(job.request_id, "dropped at shutdown"));
}

bool Agent::quit_requested() const {
    std::lock_guard lock(mu_);
    return quit_requested_;
}

int Agent::queued() const {
    std::lock_guard lock(mu_);
    return static_cast<int>(queue_.size());
}

int Agent::active() const {
    std::lock_guard lock(mu_);
    return active_;
}

}  // namespace probekit
