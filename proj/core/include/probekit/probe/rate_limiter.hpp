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

#ifndef PROBEKIT_PROBE_RATE_LIMITER_HPP
#define PROBEKIT_PROBE_RATE_LIMITER_HPP

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "probekit/time.hpp"

namespace probekit {

/// Packets-per-second limiter: a token bucket with burst size 1, so
/// consecutive permits are spaced at least 1/pps apart. Shareable across
/// concurrent traces; the permit sequence then caps the merged timeline.
class RateLimiter {
public:
    explicit RateLimiter(double pps) {
        if (!(pps > 0)) throw std::invalid_argument("pps must be positive");
        // ceil keeps the spacing guarantee for rates that do not divide 1e6.
        interval_us_ = static_cast<micros_t>(std::ceil(1e6 / pps));
        if (interval_us_ < 1) interval_us_ = 1;
    }

    /// Earliest timestamp >= now at which the caller may send. Never in the
    /// past, never closer than interval() to the previous permit.
    micros_t acquire(micros_t now) {
        std::lock_guard lock(mu_);
        const micros_t permit = has_permit_ ? std::max(now, next_free_) : now;
        next_free_ = permit + interval_us_;
        has_permit_ = true;
        return permit;
    }

    micros_t interval() const { return interval_us_; }

private:
    std::mutex mu_;
    micros_t interval_us_ = 0;
    micros_t next_free_ = 0;
    bool has_permit_ = false;
};

}  // namespace probekit

#endif  // PROBEKIT_PROBE_RATE_LIMITER_HPP
