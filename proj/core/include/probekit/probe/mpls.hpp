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

#ifndef PROBEKIT_PROBE_MPLS_HPP
#define PROBEKIT_PROBE_MPLS_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace probekit {

/// One MPLS label stack entry as carried in ICMP extensions.
/// Wire layout is a 4-byte word (from MSb to LSb):
///   20-bit label, 3-bit traffic class, 1-bit bottom-of-stack, 8-bit TTL.
struct MplsLabelEntry {
    std::uint32_t label = 0;  // < 2^20
    std::uint8_t tc = 0;      // < 8
    bool bottom_of_stack = false;
    std::uint8_t ttl = 0;

    /// Validating constructor; throws std::invalid_argument on out-of-range
    /// label or tc so every live entry satisfies the field invariants.
    static MplsLabelEntry make(std::uint32_t label, std::uint8_t tc, bool bottom_of_stack,
                               std::uint8_t ttl);

    std::uint32_t to_word() const {
        return (label << 12) | (std::uint32_t(tc) << 9) | (std::uint32_t(bottom_of_stack) << 8) |
               std::uint32_t(ttl);
    }

    static MplsLabelEntry from_word(std::uint32_t word) {
        MplsLabelEntry e;
        e.label = word >> 12;
        e.tc = static_cast<std::uint8_t>((word >> 9) & 0x7);
        e.bottom_of_stack = (word >> 8) & 0x1;
        e.ttl = static_cast<std::uint8_t>(word & 0xFF);
        return e;
    }

    bool operator==(const MplsLabelEntry&) const = default;
};

/// 4-byte big-endian encoding of one entry.
std::array<std::uint8_t, 4> encode_mpls_entry(const MplsLabelEntry& e);

/// Inverse of encode_mpls_entry.
MplsLabelEntry decode_mpls_entry(std::span<const std::uint8_t, 4> bytes);

/// Ones-complement Internet checksum over an arbitrary region.
std::uint16_t inet_checksum(std::span<const std::uint8_t> data);

/// Parses the extension region of an ICMP time-exceeded / unreachable
/// message and returns every MPLS label stack entry in stack order
/// (top first). The region is a version-2 multi-part extension structure;
/// label stacks live in objects of class 1 / c-type 1. Non-MPLS objects
/// are skipped. An empty region yields an empty stack.
///
/// Throws MalformedExtension on a bad version, a failed checksum (when the
/// checksum field is nonzero), a truncated or misaligned object, or a label
/// stack whose bottom-of-stack bit is not exactly on the last entry.
std::vector<MplsLabelEntry> parse_icmp_extensions(std::span<const std::uint8_t> raw);

/// Builds an extension region carrying `stack` as a single MPLS label
/// stack object, with a valid checksum. Inverse of parse_icmp_extensions
/// for nonempty stacks; an empty stack yields an empty region.
std::vector<std::uint8_t> build_icmp_extension(std::span<const MplsLabelEntry> stack);

}  // namespace probekit

#endif  // PROBEKIT_PROBE_MPLS_HPP
