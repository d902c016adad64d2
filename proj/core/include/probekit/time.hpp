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

#ifndef PROBEKIT_TIME_HPP
#define PROBEKIT_TIME_HPP

#include <chrono>
#include <cstdint>
#include <mutex>
#include <thread>

namespace probekit {

/// Microseconds since an arbitrary monotonic epoch (clock construction).
using micros_t = std::int64_t;

/// Monotonic clock used by every time-dependent component. Probing,
/// campaigns and simulations are written against this interface so tests
/// run on a virtual clock with exact, reproducible timing.
class Clock {
public:
    virtual ~Clock() = default;

    virtual micros_t now() = 0;

    /// Blocks (or jumps, for a virtual clock) until now() >= t.
    virtual void sleep_until(micros_t t) = 0;

    void sleep_for(micros_t d) { sleep_until(now() + d); }

    /// True when time is simulated; some engines pick a deterministic
    /// inline execution path in that case.
    virtual bool is_virtual() const = 0;
};

/// Simulated clock: sleep_until() jumps forward instantly. Thread-safe;
/// time never moves backwards.
class VirtualClock final : public Clock {
public:
    explicit VirtualClock(micros_t start = 0) : now_(start) {}

    micros_t now() override {
        std::lock_guard lock(mu_);
        return now_;
    }

    void sleep_until(micros_t t) override {
        std::lock_guard lock(mu_);
        if (t > now_) now_ = t;
    }

    bool is_virtual() const override { return true; }

private:
    std::mutex mu_;
    micros_t now_;
};

/// Wall clock backed by std::chrono::steady_clock, zeroed at construction.
class SystemClock final : public Clock {
public:
    SystemClock() : epoch_(std::chrono::steady_clock::now()) {}

    micros_t now() override {
        auto d = std::chrono::steady_clock::now() - epoch_;
        return std::chrono::duration_cast<std::chrono::microseconds>(d).count();
    }

    void sleep_until(micros_t t) override {
        std::this_thread::sleep_until(epoch_ + std::chrono::microseconds(t));
    }

    bool is_virtual() const override { return false; }

private:
    std::chrono::steady_clock::time_point epoch_;
};

constexpr micros_t seconds_to_micros(double s) {
    return static_cast<micros_t>(s * 1e6 + (s >= 0 ? 0.5 : -0.5));
}

constexpr double micros_to_seconds(micros_t us) {
    return static_cast<double>(us) / 1e6;
}

}  // namespace probekit

#endif  // PROBEKIT_TIME_HPP
