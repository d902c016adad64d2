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

#include "probekit/agent/server.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>
#include <memory>
#include <mutex>
#include <unordered_set>

#include "probekit/errors.hpp"

namespace probekit {

namespace {

struct FdCloser {
    int fd = -1;
    ~FdCloser() {
        if (fd >= 0) ::close(fd);
    }
};

bool parse_listen(const std::string& listen, std::string& host, int& port) {
    const auto colon = listen.rfind(':');
    if (colon == std::string::npos) return false;
    host = listen.substr(0, colon);
    try {
        port = std::stoi(listen.substr(colon + 1));
    } catch (const std::exception&) {
        return false;
    }
    return port >= 0 && port <= 65535;
}

bool send_all(int fd, const std::string& data) {
    std::size_t sent = 0;
    while (sent < data.size()) {
        const ssize_t n = ::send(fd, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
        if (n <= 0) return false;
        sent += std::size_t(n);
    }
    return true;
}

/// Response routing for one client: only records addressed to requests
/// submitted on this connection (or unaddressed "?" errors) are written.
/// Anything arriving after the socket dies is dropped.
class ConnectionSink {
public:
    explicit ConnectionSink(int fd) : fd_(fd) {}

    void note_request(const std::string& line) {
        const std::string id = extract_request_id(line);
        if (!id.empty()) {
            std::lock_guard lock(mu_);
            ids_.insert(id);
        }
    }

    void write(const std::string& record) {
        std::lock_guard lock(mu_);
        if (dead_) return;
        const std::string id = extract_request_id(record);
        if (!id.empty() && id != "?" && !ids_.count(id)) return;
        if (!send_all(fd_, record + "\n")) dead_ = true;
    }

    void close() {
        std::lock_guard lock(mu_);
        dead_ = true;
    }

private:
    std::mutex mu_;
    int fd_;
    bool dead_ = false;
    std::unordered_set<std::string> ids_;
};

}  // namespace

int serve_tcp(Agent& agent, const ServeOptions& options) {
    std::string host;
    int port = 0;
    if (!parse_listen(options.listen, host, port)) return 1;

    FdCloser listener{::socket(AF_INET, SOCK_STREAM, 0)};
    if (listener.fd < 0) return 1;
    const int one = 1;
    ::setsockopt(listener.fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));

    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(static_cast<std::uint16_t>(port));
    if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) return 1;
    if (::bind(listener.fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) return 1;
    if (::listen(listener.fd, 4) != 0) return 1;

    if (options.on_listening) {
        sockaddr_in bound{};
        socklen_t len = sizeof(bound);
        ::getsockname(listener.fd, reinterpret_cast<sockaddr*>(&bound), &len);
        options.on_listening(ntohs(bound.sin_port));
    }

    agent.start();

    while (!agent.quit_requested()) {
        FdCloser conn{::accept(listener.fd, nullptr, nullptr)};
        if (conn.fd < 0) {
            agent.drain_and_stop();
            return 1;
        }

        auto sink = std::make_shared<ConnectionSink>(conn.fd);
        agent.set_sink([sink](const std::string& record) { sink->write(record); });

        std::string buffer;
        char chunk[4096];
        while (!agent.quit_requested()) {
            const ssize_t n = ::recv(conn.fd, chunk, sizeof(chunk), 0);
            if (n <= 0) break;
            buffer.append(chunk, std::size_t(n));
            std::size_t pos;
            while ((pos = buffer.find('\n')) != std::string::npos) {
                std::string line = buffer.substr(0, pos);
                buffer.erase(0, pos + 1);
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (line.empty()) continue;
                sink->note_request(line);
                agent.submit_line(line);
            }
        }
        // Jobs submitted here keep running; their records are discarded.
        sink->close();
        agent.set_sink({});
    }

    agent.drain_and_stop();
    return 0;
}

}  // namespace probekit
