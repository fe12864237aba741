#pragma once

// Stateless JSON API:
//   GET  /api/health   {"status":"ok","version":...,"max_digits":...}
//   POST /api/walk     walk request -> bundle document
//   POST /api/period   {"number": "p/q"} -> period structure
// Every error body is {"error": code, "detail": message}.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "huella/digits.hpp"

namespace huella {

inline constexpr std::string_view version = "0.1.0";

struct ServiceConfig {
    std::size_t max_digits = default_max_digits;
    /// Comparison budget per classification; exhausted scans report inconclusive.
    std::uint64_t step_budget = 200'000'000;
    std::size_t max_body_bytes = 64 * 1024;
    /// Origins allowed by CORS; "*" allows any.
    std::vector<std::string> allowed_origins{"*"};
};

struct HttpResponse {
    int status = 200;
    std::string body;
};

/// Request handling independent of the transport; safe to call concurrently.
class Service {
public:
    explicit Service(ServiceConfig config);

    HttpResponse handle(std::string_view method, std::string_view path, std::string_view body) const;

    HttpResponse health() const;
    HttpResponse walk(std::string_view body) const;
    HttpResponse period(std::string_view body) const;

    const ServiceConfig& config() const noexcept { return config_; }

    /// The Access-Control-Allow-Origin value for a request origin, or empty.
    std::string allow_origin(std::string_view request_origin) const;

private:
    ServiceConfig config_;
};

std::string error_body(std::string_view code, std::string_view detail);

/// cpp-httplib front end for a Service.
class HttpServer {
public:
    explicit HttpServer(ServiceConfig config);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds without serving; port 0 picks a free port. False when the port is taken.
    bool bind(const std::string& host, int port);
    int port() const noexcept;
    /// Serves until stop(); in-flight requests complete before it returns.
    void run();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace huella
