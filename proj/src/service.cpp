#include "huella/service.hpp"

#include <algorithm>
#include <optional>

#include "httplib.h"
#include "huella/pipeline.hpp"

namespace huella {

namespace {

using Json = nlohmann::ordered_json;

HttpResponse json_response(int status, const Json& doc) { return {status, doc.dump()}; }

HttpResponse error_response(int status, std::string_view code, std::string_view detail)
{
    return {status, error_body(code, detail)};
}

class RequestError : public std::runtime_error {
public:
    RequestError(int status, std::string code, const std::string& detail)
        : std::runtime_error(detail), status_(status), code_(std::move(code))
    {
    }
    int status() const noexcept { return status_; }
    const std::string& code() const noexcept { return code_; }

private:
    int status_;
    std::string code_;
};

[[noreturn]] void reject(std::string detail) { throw RequestError(400, "invalid_request", detail); }

nlohmann::json parse_body(std::string_view body)
{
    nlohmann::json doc = nlohmann::json::parse(body, nullptr, false);
    if (doc.is_discarded()) throw RequestError(400, "invalid_json", "request body is not valid JSON");
    return doc;
}

std::size_t count_field(const nlohmann::json& doc, const char* key, std::size_t fallback)
{
    if (!doc.contains(key)) return fallback;
    const auto& v = doc[key];
    if (!v.is_number_integer()) reject(std::string("'") + key + "' must be an integer");
    if (v.is_number_unsigned()) return static_cast<std::size_t>(v.get<std::uint64_t>());
    const auto value = v.get<std::int64_t>();
    if (value < 0) reject(std::string("'") + key + "' must not be negative");
    return static_cast<std::size_t>(value);
}

bool flag_field(const nlohmann::json& doc, const char* key)
{
    if (!doc.contains(key)) return false;
    if (!doc[key].is_boolean()) reject(std::string("'") + key + "' must be true or false");
    return doc[key].get<bool>();
}

Q64 coordinate(const nlohmann::json& v)
{
    try {
        if (v.is_string()) return parse_q64(v.get<std::string>());
        if (v.is_number_integer()) return Q64::integer(v.get<std::int64_t>());
        if (v.is_number_float()) return parse_q64(v.dump());
    } catch (const std::exception& e) {
        reject(std::string("bad origin coordinate: ") + e.what());
    }
    reject("origin coordinates must be numbers or \"p/q\" strings");
}

VectorMap request_map(const nlohmann::json& doc)
{
    if (!doc.contains("map")) return builtin_map("decagon");
    const auto& m = doc["map"];
    try {
        if (m.is_string()) return builtin_map(m.get<std::string>());
        if (m.is_object()) return parse_map_json(m.dump());
    } catch (const MapError& e) {
        throw RequestError(422, "invalid_map", e.what());
    }
    throw RequestError(422, "invalid_map", "'map' must be a builtin name or a map object");
}

Json limits_json(const ServiceConfig& config)
{
    Json j;
    j["max_digits"] = config.max_digits;
    j["step_budget"] = config.step_budget;
    return j;
}

template <typename Body>
HttpResponse guarded(Body&& body)
{
    try {
        return body();
    } catch (const RequestError& e) {
        return error_response(e.status(), e.code(), e.what());
    } catch (const ParseError& e) {
        Json j;
        j["error"] = std::string(error_code(e.kind()));
        j["detail"] = e.what();
        j["position"] = e.position();
        return json_response(400, j);
    } catch (const BudgetExceeded& e) {
        return error_response(413, "budget_exceeded", e.what());
    } catch (const MapError& e) {
        return error_response(422, "invalid_map", e.what());
    } catch (const ExactOverflow& e) {
        return error_response(422, "invalid_map", e.what());
    } catch (const ConsistencyError& e) {
        return error_response(500, "internal_consistency", e.what());
    } catch (const std::invalid_argument& e) {
        return error_response(400, "invalid_request", e.what());
    } catch (const std::exception& e) {
        return error_response(500, "internal_error", e.what());
    }
}

}  // namespace

std::string error_body(std::string_view code, std::string_view detail)
{
    Json j;
    j["error"] = std::string(code);
    j["detail"] = std::string(detail);
    return j.dump();
}

Service::Service(ServiceConfig config) : config_(std::move(config)) {}

HttpResponse Service::handle(std::string_view method, std::string_view path, std::string_view body) const
{
    if (body.size() > config_.max_body_bytes)
        return error_response(413, "payload_too_large",
                              "request body exceeds " + std::to_string(config_.max_body_bytes) + " bytes");
    const bool get = method == "GET";
    const bool post = method == "POST";
    if (path == "/api/health") return get ? health() : error_response(405, "method_not_allowed", "use GET");
    if (path == "/api/walk") return post ? walk(body) : error_response(405, "method_not_allowed", "use POST");
    if (path == "/api/period") return post ? period(body) : error_response(405, "method_not_allowed", "use POST");
    return error_response(404, "not_found", "no route for " + std::string(method) + " " + std::string(path));
}

HttpResponse Service::health() const
{
    Json j;
    j["status"] = "ok";
    j["version"] = std::string(version);
    j["max_digits"] = config_.max_digits;
    return json_response(200, j);
}

HttpResponse Service::walk(std::string_view body) const
{
    return guarded([&] {
        const nlohmann::json doc = parse_body(body);
        if (!doc.is_object()) reject("request must be a JSON object");
        if (!doc.contains("number") || !doc["number"].is_string()) reject("'number' must be a string");

        WalkSettings settings;
        settings.number = doc["number"].get<std::string>();
        settings.n = count_field(doc, "n", 500);
        if (settings.n < 1) reject("'n' must be at least 1");
        if (settings.n > config_.max_digits)
            throw RequestError(413, "budget_exceeded",
                               "n = " + std::to_string(settings.n) + " exceeds the cap of " +
                                   std::to_string(config_.max_digits) + " digits");
        if (doc.contains("max_lag")) {
            settings.max_lag = count_field(doc, "max_lag", 1);
            if (*settings.max_lag < 1) reject("'max_lag' must be at least 1");
        }
        if (doc.contains("origin")) {
            const auto& o = doc["origin"];
            if (!o.is_array() || o.size() != 2) reject("'origin' must be [x, y]");
            settings.origin = {coordinate(o[0]), coordinate(o[1])};
        }
        settings.include_integer_part = flag_field(doc, "include_integer_part");
        settings.pad_zeros = flag_field(doc, "pad_zeros");
        const VectorMap map = request_map(doc);

        const ExportBundle bundle = run_walk(settings, map, Limits{config_.max_digits, config_.step_budget});
        Json out = to_json_value(bundle);

        Json echo;
        echo["number"] = settings.number;
        echo["n"] = settings.n;
        echo["map"] = map.name();
        echo["origin"] = Json::array({to_string(settings.origin.x), to_string(settings.origin.y)});
        echo["max_lag"] = settings.max_lag.value_or(default_max_lag(settings.n));
        echo["include_integer_part"] = settings.include_integer_part;
        echo["pad_zeros"] = settings.pad_zeros;
        out["request"] = echo;
        out["limits"] = limits_json(config_);
        return json_response(200, out);
    });
}

HttpResponse Service::period(std::string_view body) const
{
    return guarded([&] {
        const nlohmann::json doc = parse_body(body);
        std::string number;
        if (doc.is_string())
            number = doc.get<std::string>();
        else if (doc.is_object() && doc.contains("number") && doc["number"].is_string())
            number = doc["number"].get<std::string>();
        else
            reject("expected {\"number\": \"p/q\"}");

        const NumberSpec spec = parse_number(number);
        const auto* r = std::get_if<Rational>(&spec);
        if (!r)
            throw RequestError(400, "not_rational",
                               "'" + to_string(spec) +
                                   "' is not a rational number and has no period structure; use /api/walk");
        Json out;
        out["number"] = to_string(spec);
        const Json info = period_json(rational_period(*r, config_.max_digits));
        for (const auto& [key, value] : info.items()) out[key] = value;
        return json_response(200, out);
    });
}

std::string Service::allow_origin(std::string_view request_origin) const
{
    for (const auto& allowed : config_.allowed_origins) {
        if (allowed == "*") return "*";
        if (!request_origin.empty() && allowed == request_origin) return allowed;
    }
    return {};
}

struct HttpServer::Impl {
    explicit Impl(ServiceConfig config) : service(std::move(config)) {}

    Service service;
    httplib::Server server;
    int port = -1;
};

HttpServer::HttpServer(ServiceConfig config) : impl_(std::make_unique<Impl>(std::move(config)))
{
    auto& server = impl_->server;
    const Service& service = impl_->service;

    // Plain SO_REUSEADDR: a port held by another process must fail to bind.
    server.set_socket_options([](socket_t sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
    });
    server.set_payload_max_length(service.config().max_body_bytes);

    auto dispatch = [&service](const httplib::Request& req, httplib::Response& res) {
        const HttpResponse out = service.handle(req.method, req.path, req.body);
        res.status = out.status;
        res.set_content(out.body, "application/json");
    };
    server.Get("/api/health", dispatch);
    server.Post("/api/walk", dispatch);
    server.Post("/api/period", dispatch);
    server.Get(".*", dispatch);
    server.Post(".*", dispatch);
    server.Put(".*", dispatch);
    server.Delete(".*", dispatch);
    server.Patch(".*", dispatch);
    server.Options(".*", [](const httplib::Request&, httplib::Response& res) {
        res.status = 204;
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });

    // Statuses produced by the transport itself (oversized or malformed requests).
    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
        res.set_content(error_body("http_" + std::to_string(res.status), httplib::status_message(res.status)),
                        "application/json");
        return httplib::Server::HandlerResponse::Handled;
    });
    server.set_post_routing_handler([&service](const httplib::Request& req, httplib::Response& res) {
        const std::string allowed = service.allow_origin(req.get_header_value("Origin"));
        if (!allowed.empty()) {
            res.set_header("Access-Control-Allow-Origin", allowed);
            if (allowed != "*") res.set_header("Vary", "Origin");
        }
    });
}

HttpServer::~HttpServer() = default;

bool HttpServer::bind(const std::string& host, int port)
{
    if (port == 0) {
        impl_->port = impl_->server.bind_to_any_port(host);
        return impl_->port > 0;
    }
    if (!impl_->server.bind_to_port(host, port)) return false;
    impl_->port = port;
    return true;
}

int HttpServer::port() const noexcept { return impl_->port; }

void HttpServer::run() { impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace huella
