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

#include "probekit/probe/mpls.hpp"

#include <stdexcept>

#include "probekit/errors.hpp"

namespace probekit {

namespace {

constexpr std::size_t kExtHeaderLen = 4;
constexpr std::size_t kObjHeaderLen = 4;
constexpr std::uint8_t kExtVersion = 2;
constexpr std::uint8_t kClassMplsStack = 1;
constexpr std::uint8_t kCtypeIncoming = 1;

std::uint16_t read_u16(const std::uint8_t* p) {
    return static_cast<std::uint16_t>((p[0] << 8) | p[1]);
}

std::uint32_t read_u32(const std::uint8_t* p) {
    return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) | (std::uint32_t(p[2]) << 8) |
           std::uint32_t(p[3]);
}

}  // namespace

MplsLabelEntry MplsLabelEntry::make(std::uint32_t label, std::uint8_t tc, bool bottom_of_stack,
                                    std::uint8_t ttl) {
    if (label >= (1u << 20)) throw std::invalid_argument("mpls label exceeds 20 bits");
    if (tc >= 8) throw std::invalid_argument("mpls tc exceeds 3 bits");
    return MplsLabelEntry{label, tc, bottom_of_stack, ttl};
}

std::array<std::uint8_t, 4> encode_mpls_entry(const MplsLabelEntry& e) {
    const std::uint32_t w = e.to_word();
    return {static_cast<std::uint8_t>(w >> 24), static_cast<std::uint8_t>(w >> 16),
            static_cast<std::uint8_t>(w >> 8), static_cast<std::uint8_t>(w)};
}

MplsLabelEntry decode_mpls_entry(std::span<const std::uint8_t, 4> bytes) {
    return MplsLabelEntry::from_word(read_u32(bytes.data()));
}

std::uint16_t inet_checksum(std::span<const std::uint8_t> data) {
    std::uint32_t sum = 0;
    std::size_t i = 0;
    for (; i + 1 < data.size(); i += 2) sum += read_u16(data.data() + i);
    if (i < data.size()) sum += std::uint32_t(data[i]) << 8;
    while (sum >> 16) sum = (sum & 0xFFFF) + (sum >> 16);
    return static_cast<std::uint16_t>(~sum);
}

std::vector<MplsLabelEntry> parse_icmp_extensions(std::span<const std::uint8_t> raw) {
    std::vector<MplsLabelEntry> stack;
    if (raw.empty()) return stack;
    if (raw.size() < kExtHeaderLen) throw MalformedExtension("extension region shorter than header");

    const std::uint8_t version = raw[0] >> 4;
    if (version != kExtVersion)
        throw MalformedExtension("unsupported extension version " + std::to_string(version));

    // Zero checksum means the sender did not compute one.
    if (read_u16(raw.data() + 2) != 0 && inet_checksum(raw) != 0)
        throw MalformedExtension("extension checksum mismatch");

    std::size_t off = kExtHeaderLen;
    while (off < raw.size()) {
        if (raw.size() - off < kObjHeaderLen)
            throw MalformedExtension("truncated object header");
        const std::uint16_t obj_len = read_u16(raw.data() + off);
        const std::uint8_t class_num = raw[off + 2];
        const std::uint8_t c_type = raw[off + 3];
        if (obj_len < kObjHeaderLen || obj_len > raw.size() - off)
            throw MalformedExtension("object length out of bounds");

        if (class_num == kClassMplsStack && c_type == kCtypeIncoming) {
            const std::size_t payload = obj_len - kObjHeaderLen;
            if (payload == 0 || payload % 4 != 0)
                throw MalformedExtension("label stack payload not a multiple of 4");
            for (std::size_t i = 0; i < payload; i += 4)
                stack.push_back(
                    MplsLabelEntry::from_word(read_u32(raw.data() + off + kObjHeaderLen + i)));
        }
        off += obj_len;
    }

    for (std::size_t i = 0; i < stack.size(); ++i) {
        const bool expect_bos = (i + 1 == stack.size());
        if (stack[i].bottom_of_stack != expect_bos)
            throw MalformedExtension("bottom-of-stack bit not on last entry");
    }
    return stack;
}

std::vector<std::uint8_t> build_icmp_extension(std::span<const MplsLabelEntry> stack) {
    std::vector<std::uint8_t> out;
    if (stack.empty()) return out;

    const std::uint16_t obj_len = static_cast<std::uint16_t>(kObjHeaderLen + 4 * stack.size());
    out.reserve(kExtHeaderLen + obj_len);
    out.push_back(kExtVersion << 4);
    out.push_back(0);
    out.push_back(0);  // checksum, filled below
    out.push_back(0);
    out.push_back(static_cast<std::uint8_t>(obj_len >> 8));
    out.push_back(static_cast<std::uint8_t>(obj_len & 0xFF));
    out.push_back(kClassMplsStack);
    out.push_back(kCtypeIncoming);
    for (const auto& e : stack) {
        const auto bytes = encode_mpls_entry(e);
        out.insert(out.end(), bytes.begin(), bytes.end());
    }

    const std::uint16_t sum = inet_checksum(out);
    out[2] = static_cast<std::uint8_t>(sum >> 8);
    out[3] = static_cast<std::uint8_t>(sum & 0xFF);
    return out;
}

}  // namespace probekit
