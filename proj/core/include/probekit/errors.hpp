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

#ifndef PROBEKIT_ERRORS_HPP
#define PROBEKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace probekit {

/// Bad configuration input (node file, schedule, profile, topology).
/// Carries the 1-based line number when the source is a line-oriented file.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Malformed serialized record (trace result, report line).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// ICMP extension region that cannot be trusted: truncated object, bad
/// version, bad checksum. The hop is recorded without labels; the trace
/// continues.
class MalformedExtension : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Control-channel line that is not a valid command.
class BadCommand : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Network backend failure (socket creation, permissions, send/recv).
class BackendError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace probekit

#endif  // PROBEKIT_ERRORS_HPP
