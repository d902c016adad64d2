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

#ifndef PROBEKIT_IPV4_HPP
#define PROBEKIT_IPV4_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace probekit {

/// IPv4 address, host byte order internally, dotted-quad on the wire.
class Ipv4Addr {
public:
    constexpr Ipv4Addr() : value_(0) {}
    constexpr explicit Ipv4Addr(std::uint32_t host_order) : value_(host_order) {}

    /// Throws ParseError on anything that is not a strict dotted quad.
    static Ipv4Addr parse(std::string_view text);

    std::string to_string() const;

    constexpr std::uint32_t value() const { return value_; }
    constexpr std::uint8_t octet(int i) const {
        return static_cast<std::uint8_t>(value_ >> (8 * (3 - i)));
    }

    auto operator<=>(const Ipv4Addr&) const = default;

private:
    std::uint32_t value_;
};

}  // namespace probekit

#endif  // PROBEKIT_IPV4_HPP
