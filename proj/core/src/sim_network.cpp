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

#include "probekit/probe/sim_network.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "probekit/errors.hpp"

namespace probekit {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

long long parse_int(const std::string& s, int line) {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ConfigError("bad integer '" + s + "'", line);
    return v;
}

double parse_double(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad number '" + s + "'", line);
    }
}

std::vector<MplsLabelEntry> parse_label_list(const std::string& s, int line) {
    std::vector<MplsLabelEntry> stack;
    for (const auto& item : split(s, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() != 4) throw ConfigError("label entry needs label:tc:bos:ttl", line);
        try {
            stack.push_back(MplsLabelEntry::make(
                static_cast<std::uint32_t>(parse_int(parts[0], line)),
                static_cast<std::uint8_t>(parse_int(parts[1], line)),
                parse_int(parts[2], line) != 0,
                static_cast<std::uint8_t>(parse_int(parts[3], line))));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what(), line);
        }
    }
    return stack;
}

}  // namespace

SimTopology SimTopology::parse(std::istream& in) {
    SimTopology topo;
    bool explicit_destination = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;

        if (word == "destination") {
            std::string addr;
            if (!(ls >> addr)) throw ConfigError("destination needs an address", lineno);
            try {
                topo.destination = Ipv4Addr::parse(addr);
            } catch (const ParseError& e) {
                throw ConfigError(e.what(), lineno);
            }
            explicit_destination = true;
            continue;
        }
        if (word != "hop") throw ConfigError("unknown directive '" + word + "'", lineno);

        SimHop hop;
        std::string addr;
        if (!(ls >> addr)) throw ConfigError("hop needs an address", lineno);
        try {
            hop.address = Ipv4Addr::parse(addr);
        } catch (const ParseError& e) {
            throw ConfigError(e.what(), lineno);
        }
        std::string kv;
        while (ls >> kv) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw ConfigError("expected key=value, got '" + kv + "'", lineno);
            const std::string key = kv.substr(0, eq);
            const std::string val = kv.substr(eq + 1);
            if (key == "latency_us") {
                hop.latency_us = parse_int(val, lineno);
            } else if (key == "respond") {
                hop.respond_probability = parse_double(val, lineno);
            } else if (key == "initial_ttl") {
                const long long v = parse_int(val, lineno);
                if (v < 1 || v > 255) throw ConfigError("initial_ttl must be 1..=255", lineno);
                hop.initial_ttl = static_cast<std::uint8_t>(v);
            } else if (key == "labels") {
                hop.labels = parse_label_list(val, lineno);
            } else {
                throw ConfigError("unknown hop key '" + key + "'", lineno);
            }
        }
        topo.hops.push_back(std::move(hop));
    }
    if (!explicit_destination && !topo.hops.empty()) topo.destination = topo.hops.back().address;
    topo.validate();
    return topo;
}

SimTopology SimTopology::parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

SimTopology SimTopology::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open topology file: " + path);
    return parse(in);
}

std::string SimTopology::to_text() const {
    std::ostringstream out;
    for (const auto& hop : hops) {
        out << "hop " << hop.address.to_string() << " latency_us=" << hop.latency_us;
        if (hop.respond_probability != 1.0) out << " respond=" << hop.respond_probability;
        if (hop.initial_ttl != 255) out << " initial_ttl=" << unsigned(hop.initial_ttl);
        if (!hop.labels.empty()) {
            out << " labels=";
            for (std::size_t i = 0; i < hop.labels.size(); ++i) {
                const auto& e = hop.labels[i];
                if (i) out << ',';
                out << e.label << ':' << unsigned(e.tc) << ':' << (e.bottom_of_stack ? 1 : 0) << ':'
                    << unsigned(e.ttl);
            }
        }
        out << '\n';
    }
    out << "destination " << destination.to_string() << '\n';
    return out.str();
}

void SimTopology::validate() const {
    if (hops.empty()) throw ConfigError("topology needs at least one hop");
    for (const auto& hop : hops) {
        if (hop.latency_us < 0) throw ConfigError("hop latency must be nonnegative");
        if (hop.respond_probability < 0 || hop.respond_probability > 1)
            throw ConfigError("respond probability must be in [0,1]");
    }
}

std::uint64_t sim_respond_hash(std::uint64_t seed, int ttl, int attempt) {
    // splitmix64 over the packed inputs
    std::uint64_t x = seed ^ (std::uint64_t(std::uint32_t(ttl)) << 32) ^ std::uint32_t(attempt);
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

SimBackend::SimBackend(SimTopology topology, Clock& clock, std::uint64_t seed, micros_t timeout_us)
    : topology_(std::move(topology)), clock_(clock), seed_(seed), timeout_us_(timeout_us) {
    topology_.validate();
}

std::optional<ProbeReply> SimBackend::probe(const ProbeRequest& req) {
    // Probes past the path length keep reaching the destination.
    const int hop_index = std::min<int>(req.ttl, static_cast<int>(topology_.hops.size()));
    const SimHop& hop = topology_.hops[hop_index - 1];

    const bool responds =
        hop.respond_probability >= 1.0 ||
        (hop.respond_probability > 0.0 &&
         double(sim_respond_hash(seed_, req.ttl, req.attempt)) / 18446744073709551616.0 <
             hop.respond_probability);
    if (!responds) {
        clock_.sleep_for(timeout_us_);
        return std::nullopt;
    }

    ProbeReply reply;
    reply.responder = hop.address;
    reply.rtt_us = 2 * hop.latency_us;
    // Reply TTL decremented once per return hop except at generation.
    reply.reply_ip_ttl = static_cast<std::uint8_t>(
        std::max<int>(1, int(hop.initial_ttl) - (hop_index - 1)));
    if (hop.address == topology_.destination)
        reply.kind = req.method == ProbeMethod::kUdp ? ReplyKind::kDestUnreachable
                                                     : ReplyKind::kEchoReply;
    else
        reply.kind = ReplyKind::kTimeExceeded;
    reply.extension = build_icmp_extension(hop.labels);

    clock_.sleep_for(reply.rtt_us);
    return reply;
}

}  // namespace probekit
