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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "probekit/errors.hpp"
#include "probekit/probe/mpls.hpp"
#include "probekit/probe/rate_limiter.hpp"
#include "probekit/probe/serialize.hpp"
#include "probekit/probe/sim_network.hpp"
#include "probekit/probe/trace.hpp"
#include "probekit/probe/types.hpp"
#include "trace_oracle.hpp"

using namespace probekit;

namespace {

// Independent bit-level composition of the 4-byte word.
std::array<std::uint8_t, 4> compose_word(std::uint32_t label, unsigned tc, bool bos,
                                         unsigned ttl) {
    const std::uint32_t w = (label << 12) | (tc << 9) | (unsigned(bos) << 8) | ttl;
    return {std::uint8_t(w >> 24), std::uint8_t(w >> 16), std::uint8_t(w >> 8), std::uint8_t(w)};
}

SimTopology three_hop_topology() {
    return SimTopology::parse_text(
        "hop 10.0.0.1 latency_us=500\n"
        "hop 10.0.0.2 latency_us=800 labels=16:0:1:1\n"
        "hop 10.0.0.3 latency_us=1200\n");
}

}  // namespace

TEST_CASE("mpls entry encodes to the documented bit layout") {
    CHECK(encode_mpls_entry(MplsLabelEntry::make(0, 0, false, 0)) ==
          std::array<std::uint8_t, 4>{0x00, 0x00, 0x00, 0x00});
    CHECK(encode_mpls_entry(MplsLabelEntry::make(0xFFFFF, 7, true, 255)) ==
          std::array<std::uint8_t, 4>{0xFF, 0xFF, 0xFF, 0xFF});
    // (16<<12) | (1<<8) | 1 == 0x00010101
    CHECK(encode_mpls_entry(MplsLabelEntry::make(16, 0, true, 1)) ==
          std::array<std::uint8_t, 4>{0x00, 0x01, 0x01, 0x01});
    CHECK(encode_mpls_entry(MplsLabelEntry::make(16, 0, true, 1)) == compose_word(16, 0, true, 1));
}

TEST_CASE("mpls entry construction rejects out-of-range fields") {
    CHECK_THROWS_AS(MplsLabelEntry::make(1u << 20, 0, false, 0), std::invalid_argument);
    CHECK_THROWS_AS(MplsLabelEntry::make(0, 8, false, 0), std::invalid_argument);
}

TEST_CASE("mpls codec round-trips randomized entries") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const auto e = MplsLabelEntry::make(std::uint32_t(rng() & 0xFFFFF),
                                            std::uint8_t(rng() & 0x7), (rng() & 1) != 0,
                                            std::uint8_t(rng() & 0xFF));
        const auto bytes = encode_mpls_entry(e);
        CHECK(decode_mpls_entry(bytes) == e);
        CHECK(bytes == compose_word(e.label, e.tc, e.bottom_of_stack, e.ttl));
    }
}

TEST_CASE("icmp extension parsing") {
    SUBCASE("empty region yields empty stack") {
        CHECK(parse_icmp_extensions({}).empty());
    }

    SUBCASE("single-entry object built from the byte oracle") {
        // header(version=2, checksum=0) + object(len=8, class=1, ctype=1) + word for label 16
        const auto word = compose_word(16, 0, true, 1);
        std::vector<std::uint8_t> raw{0x20, 0x00, 0x00, 0x00, 0x00, 0x08, 0x01, 0x01};
        raw.insert(raw.end(), word.begin(), word.end());
        const auto stack = parse_icmp_extensions(raw);
        REQUIRE(stack.size() == 1);
        CHECK(stack[0] == MplsLabelEntry::make(16, 0, true, 1));
    }

    SUBCASE("version guard") {
        const std::vector<std::uint8_t> raw{0x30, 0x00, 0x00, 0x00};
        CHECK_THROWS_AS(parse_icmp_extensions(raw), MalformedExtension);
    }

    SUBCASE("builder output round-trips with a valid checksum") {
        const std::vector<MplsLabelEntry> stack{MplsLabelEntry::make(16, 0, false, 1),
                                                MplsLabelEntry::make(17, 3, true, 9)};
        const auto raw = build_icmp_extension(stack);
        CHECK(parse_icmp_extensions(raw) == stack);
        CHECK((raw[2] != 0 || raw[3] != 0));
    }

    SUBCASE("corrupted checksum is rejected") {
        auto raw = build_icmp_extension(std::vector{MplsLabelEntry::make(16, 0, true, 1)});
        raw.back() ^= 0xFF;
        CHECK_THROWS_AS(parse_icmp_extensions(raw), MalformedExtension);
    }

    SUBCASE("truncated object is rejected") {
        auto raw = build_icmp_extension(std::vector{MplsLabelEntry::make(16, 0, true, 1)});
        raw.resize(raw.size() - 2);
        CHECK_THROWS_AS(parse_icmp_extensions(raw), MalformedExtension);
    }

    SUBCASE("bottom-of-stack must be exactly the last entry") {
        std::vector<std::uint8_t> raw{0x20, 0x00, 0x00, 0x00, 0x00, 0x0C, 0x01, 0x01};
        const auto w1 = compose_word(16, 0, true, 1);   // bos too early
        const auto w2 = compose_word(17, 0, true, 1);
        raw.insert(raw.end(), w1.begin(), w1.end());
        raw.insert(raw.end(), w2.begin(), w2.end());
        CHECK_THROWS_AS(parse_icmp_extensions(raw), MalformedExtension);
    }

    SUBCASE("non-mpls objects are skipped") {
        // interface-info-style object (class 2) followed by an MPLS stack
        const auto word = compose_word(42, 1, true, 7);
        std::vector<std::uint8_t> raw{0x20, 0x00, 0x00, 0x00};
        raw.insert(raw.end(), {0x00, 0x08, 0x02, 0x01, 0xAA, 0xBB, 0xCC, 0xDD});
        raw.insert(raw.end(), {0x00, 0x08, 0x01, 0x01});
        raw.insert(raw.end(), word.begin(), word.end());
        const auto stack = parse_icmp_extensions(raw);
        REQUIRE(stack.size() == 1);
        CHECK(stack[0].label == 42);
    }
}

TEST_CASE("initial ttl inference") {
    CHECK(infer_initial_ttl(253, 3) == InitialTtlClass::k255);  // 253+3-1 = 255
    CHECK(infer_initial_ttl(64, 1) == InitialTtlClass::k64);
    CHECK(infer_initial_ttl(120, 5) == InitialTtlClass::k128);  // 124 -> 128
    CHECK_THROWS_AS(infer_initial_ttl(255, 3), std::out_of_range);

    // idempotence at the class boundaries
    for (std::uint8_t c : {32, 64, 128, 255})
        CHECK(infer_initial_ttl(c, 1) == static_cast<InitialTtlClass>(c));
}

TEST_CASE("rate limiter spaces permits at 1/pps") {
    SUBCASE("11 sequential acquires at pps=100 end at 0.1s") {
        RateLimiter limiter(100);
        micros_t t = 0;
        for (int i = 0; i < 11; ++i) t = limiter.acquire(t);
        CHECK(t == 100'000);
    }

    SUBCASE("second acquire at pps=1 lands 1s later") {
        RateLimiter limiter(1);
        CHECK(limiter.acquire(0) == 0);
        CHECK(limiter.acquire(0) == 1'000'000);
    }

    SUBCASE("under-rate callers are never delayed") {
        // token bucket with burst 1: 40ms gaps at pps=50 (20ms interval)
        RateLimiter limiter(50);
        for (int i = 0; i < 20; ++i) {
            const micros_t now = i * 40'000;
            CHECK(limiter.acquire(now) == now);
        }
    }

    SUBCASE("permit is never in the past") {
        RateLimiter limiter(1000);
        CHECK(limiter.acquire(5'000'000) == 5'000'000);
        CHECK(limiter.acquire(0) == 5'001'000);
    }
}

TEST_CASE("topology text format round-trips") {
    const auto topo = three_hop_topology();
    REQUIRE(topo.hops.size() == 3);
    CHECK(topo.destination == Ipv4Addr::parse("10.0.0.3"));
    CHECK(topo.hops[1].labels.size() == 1);

    const auto again = SimTopology::parse_text(topo.to_text());
    CHECK(again.to_text() == topo.to_text());

    CHECK_THROWS_AS(SimTopology::parse_text(""), ConfigError);
    CHECK_THROWS_AS(SimTopology::parse_text("hop nonsense latency_us=1\n"), ConfigError);
    CHECK_THROWS_AS(SimTopology::parse_text("hop 1.2.3.4 respond=1.5\n"), ConfigError);
}

TEST_CASE("run_trace walks a responsive topology") {
    const auto topo = three_hop_topology();
    ProbeSpec spec;
    spec.target = topo.destination;
    spec.max_ttl = 8;

    SUBCASE("destination reached at hop 3") {
        VirtualClock clock;
        SimBackend net(topo, clock, 1);
        const auto result = run_trace(spec, net, clock);
        REQUIRE(result.hops.size() == 3);
        CHECK(result.destination_reached);
        CHECK(result.hops[0].reply_kind == ReplyKind::kTimeExceeded);
        CHECK(result.hops[2].reply_kind == ReplyKind::kEchoReply);
        CHECK(result.hops[2].responder == topo.destination);
    }

    SUBCASE("max_ttl=1 stops short") {
        VirtualClock clock;
        SimBackend net(topo, clock, 1);
        spec.max_ttl = 1;
        const auto result = run_trace(spec, net, clock);
        CHECK(result.hops.size() == 1);
        CHECK_FALSE(result.destination_reached);
    }

    SUBCASE("labels surface only at the labeled hop") {
        VirtualClock clock;
        SimBackend net(topo, clock, 1);
        const auto result = run_trace(spec, net, clock);
        REQUIRE(result.hops.size() == 3);
        CHECK(result.hops[0].labels.empty());
        CHECK(result.hops[1].labels == std::vector{MplsLabelEntry::make(16, 0, true, 1)});
        CHECK(result.hops[2].labels.empty());
    }

    SUBCASE("udp destination reply is dest-unreachable") {
        VirtualClock clock;
        SimBackend net(topo, clock, 1);
        spec.method = ProbeMethod::kUdp;
        const auto result = run_trace(spec, net, clock);
        REQUIRE(result.destination_reached);
        CHECK(result.hops.back().reply_kind == ReplyKind::kDestUnreachable);
    }
}

TEST_CASE("run_trace aborts after gap_limit consecutive silent hops") {
    auto topo = three_hop_topology();
    topo.hops[0].respond_probability = 0.0;
    topo.hops[1].respond_probability = 0.0;
    topo.hops[2].respond_probability = 0.0;
    ProbeSpec spec;
    spec.target = topo.destination;
    spec.max_ttl = 30;
    spec.gap_limit = 2;
    spec.attempts_per_hop = 1;

    VirtualClock clock;
    SimBackend net(topo, clock, 99);
    const auto result = run_trace(spec, net, clock);
    CHECK(result.hops.size() == 2);
    CHECK_FALSE(result.destination_reached);
    for (const auto& hop : result.hops) {
        CHECK(hop.reply_kind == ReplyKind::kTimeout);
        CHECK_FALSE(hop.responder.has_value());
        CHECK_FALSE(hop.rtt_us.has_value());
    }
}

TEST_CASE("run_trace matches the straight-line replay oracle") {
    std::mt19937_64 rng(20260811);
    for (int iteration = 0; iteration < 25; ++iteration) {
        SimTopology topo;
        const int hop_count = 1 + int(rng() % 12);
        for (int h = 0; h < hop_count; ++h) {
            SimHop hop;
            hop.address = Ipv4Addr(0x0A000000u + std::uint32_t(h) + 1);
            hop.latency_us = micros_t(rng() % 5000);
            hop.respond_probability = (rng() % 4 == 0) ? 0.5 : 1.0;
            hop.initial_ttl = (rng() % 2 == 0) ? 255 : 64;
            if (rng() % 3 == 0)
                hop.labels = {MplsLabelEntry::make(std::uint32_t(rng() & 0xFFFFF), 0, true,
                                                   std::uint8_t(1 + h))};
            topo.hops.push_back(std::move(hop));
        }
        topo.destination = topo.hops.back().address;

        ProbeSpec spec;
        spec.target = topo.destination;
        spec.max_ttl = 1 + int(rng() % 20);
        spec.attempts_per_hop = 1 + int(rng() % 3);
        spec.pps = 100;
        spec.gap_limit = 1 + int(rng() % 4);
        spec.flow_id = std::uint16_t(rng());

        const std::uint64_t seed = rng();
        VirtualClock clock;
        SimBackend net(topo, clock, seed, 250'000);
        const auto actual = run_trace(spec, net, clock);
        const auto expected = testing::trace_replay_oracle(spec, topo, seed, 250'000);
        CHECK(actual == expected);
    }
}

TEST_CASE("identical inputs give bit-identical traces") {
    const auto topo = three_hop_topology();
    ProbeSpec spec;
    spec.target = topo.destination;

    VirtualClock c1, c2;
    SimBackend n1(topo, c1, 42), n2(topo, c2, 42);
    CHECK(run_trace(spec, n1, c1) == run_trace(spec, n2, c2));
}

TEST_CASE("trace results round-trip through the line format") {
    const auto topo = three_hop_topology();
    ProbeSpec spec;
    spec.target = topo.destination;

    SUBCASE("empty-hops result") {
        TraceResult r;
        r.spec = spec;
        CHECK(deserialize_result(serialize_result(r)) == r);
    }

    SUBCASE("full trace with labels") {
        VirtualClock clock;
        SimBackend net(topo, clock, 3);
        const auto r = run_trace(spec, net, clock);
        const auto line = serialize_result(r);
        CHECK(line.find('\n') == std::string::npos);
        CHECK(deserialize_result(line) == r);
    }

    SUBCASE("truncated record fails to parse") {
        VirtualClock clock;
        SimBackend net(topo, clock, 3);
        const auto line = serialize_result(run_trace(spec, net, clock));
        CHECK_THROWS_AS(deserialize_result(line.substr(0, line.size() / 2)), ParseError);
        CHECK_THROWS_AS(deserialize_result("{}"), ParseError);
    }
}

TEST_CASE("probe spec validation bounds") {
    ProbeSpec spec;
    spec.target = Ipv4Addr::parse("10.0.0.1");
    CHECK_NOTHROW(spec.validate());
    auto bad = spec;
    bad.max_ttl = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = spec;
    bad.max_ttl = 65;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = spec;
    bad.attempts_per_hop = 6;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = spec;
    bad.pps = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = spec;
    bad.gap_limit = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("ipv4 parsing") {
    CHECK(Ipv4Addr::parse("1.1.1.1").to_string() == "1.1.1.1");
    CHECK(Ipv4Addr::parse("255.255.255.255").value() == 0xFFFFFFFFu);
    CHECK_THROWS_AS(Ipv4Addr::parse("1.2.3"), ParseError);
    CHECK_THROWS_AS(Ipv4Addr::parse("1.2.3.256"), ParseError);
    CHECK_THROWS_AS(Ipv4Addr::parse("1.2.3.4.5"), ParseError);
    CHECK_THROWS_AS(Ipv4Addr::parse("a.b.c.d"), ParseError);
}
