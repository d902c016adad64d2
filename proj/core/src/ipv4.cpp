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

#include "probekit/ipv4.hpp"

#include <charconv>

#include "probekit/errors.hpp"

namespace probekit {

Ipv4Addr Ipv4Addr::parse(std::string_view text) {
    std::uint32_t value = 0;
    const char* p = text.data();
    const char* end = text.data() + text.size();
    for (int i = 0; i < 4; ++i) {
        unsigned octet = 0;
        auto [next, ec] = std::from_chars(p, end, octet);
        if (ec != std::errc() || next == p || octet > 255)
            throw ParseError("bad IPv4 address: " + std::string(text));
        value = (value << 8) | octet;
        p = next;
        if (i < 3) {
            if (p == end || *p != '.')
                throw ParseError("bad IPv4 address: " + std::string(text));
            ++p;
        }
    }
    if (p != end) throw ParseError("bad IPv4 address: " + std::string(text));
    return Ipv4Addr(value);
}

std::string Ipv4Addr::to_string() const {
    std::string out;
    out.reserve(15);
    for (int i = 0; i < 4; ++i) {
        if (i) out.push_back('.');
        out += std::to_string(static_cast<unsigned>(octet(i)));
    }
    return out;
}

}  // namespace probekit
