// huella: decimal digits of a number as a walk in the plane.
//
// Exit codes: 0 ok, 1 internal error, 2 parse/usage error, 3 digit budget
// exceeded, 4 I/O error, 5 port busy.

#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "huella/pipeline.hpp"
#include "huella/service.hpp"

namespace fs = std::filesystem;
using namespace huella;

namespace {

enum Exit : int { ok = 0, internal = 1, usage = 2, budget = 3, io = 4, port_busy = 5 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t env_max_digits()
{
    const char* raw = std::getenv("HUELLA_MAX_DIGITS");
    if (!raw || !*raw) return default_max_digits;
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(raw, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != std::string_view(raw).size() || value == 0)
        throw std::invalid_argument(std::string("HUELLA_MAX_DIGITS is not a positive integer: ") + raw);
    return static_cast<std::size_t>(value);
}

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

VectorMap load_map(const std::string& name_or_file)
{
    if (name_or_file == "decagon" || name_or_file == "lattice") return builtin_map(name_or_file);
    std::error_code ec;
    if (fs::is_regular_file(name_or_file, ec)) return parse_map_json(read_file(name_or_file));
    return builtin_map(name_or_file);
}

struct Common {
    std::size_t n = 500;
    std::size_t max_lag = 0;
    std::string map = "decagon";
    std::string origin = "0,0";
    bool pad_zeros = false;
    bool include_integer_part = false;
    std::size_t max_digits = default_max_digits;
};

void add_common(CLI::App& cmd, Common& c, bool with_walk_flags)
{
    cmd.add_option("-n,--digits", c.n, "Number of fractional digits")->capture_default_str()->check(CLI::PositiveNumber);
    cmd.add_flag("--pad-zeros", c.pad_zeros, "Extend terminating decimals with zeros");
    cmd.add_option("--max-digits", c.max_digits, "Digit budget cap (env HUELLA_MAX_DIGITS)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    if (!with_walk_flags) return;
    cmd.add_option("--map", c.map, "Builtin map (decagon, lattice) or JSON map file")->capture_default_str();
    cmd.add_option("--origin", c.origin, "Starting point x,y")->capture_default_str();
    cmd.add_option("--max-lag", c.max_lag, "Largest lag searched (0: min(n/3, 2000))")
        ->capture_default_str();
    cmd.add_flag("--include-integer-part", c.include_integer_part, "Walk the integer digits first");
}

WalkSettings settings_for(const std::string& number, const Common& c)
{
    WalkSettings s;
    s.number = number;
    s.n = c.n;
    if (c.max_lag > 0) s.max_lag = c.max_lag;
    s.origin = parse_origin(c.origin);
    s.include_integer_part = c.include_integer_part;
    s.pad_zeros = c.pad_zeros;
    return s;
}

Limits limits_for(const Common& c)
{
    if (c.n > c.max_digits)
        throw BudgetExceeded(c.max_digits);
    return Limits{c.max_digits, unlimited_steps};
}

int cmd_digits(const std::string& number, const Common& c)
{
    limits_for(c);
    const NumberSpec spec = parse_number(number);
    DigitStream stream(spec, StreamOptions{c.max_digits, c.pad_zeros});
    const TakeResult taken = stream.take(c.n);
    std::cout << digits_to_string(taken.digits) << '\n';
    if (const auto* r = std::get_if<Rational>(&spec)) {
        try {
            const PeriodInfo info = rational_period(*r, c.max_digits);
            if (info.terminating())
                std::cout << "terminating after " << info.preperiod << " digits\n";
            else
                std::cout << "preperiod=" << info.preperiod << " period=" << info.period_len << " ("
                          << digits_to_string(info.period_digits) << ")\n";
        } catch (const BudgetExceeded& e) {
            std::cout << "period longer than the digit cap (" << e.cap() << ")\n";
        }
    }
    return ok;
}

int cmd_walk(const std::string& number, const Common& c, const std::string& formats, const std::string& out_dir,
             const std::string& stem, const SvgOptions& svg)
{
    std::vector<std::string> wanted;
    std::stringstream list(formats);
    for (std::string item; std::getline(list, item, ',');) {
        if (item.empty()) continue;
        if (item != "svg" && item != "csv" && item != "json" && item != "ggb")
            throw std::invalid_argument("unknown format '" + item + "' (svg, csv, json, ggb)");
        if (std::find(wanted.begin(), wanted.end(), item) == wanted.end()) wanted.push_back(item);
    }
    if (wanted.empty()) throw std::invalid_argument("no output format given");

    const Limits limits = limits_for(c);
    const ExportBundle bundle = run_walk(settings_for(number, c), load_map(c.map), limits);

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());
    for (const auto& fmt : wanted) {
        const fs::path path = fs::path(out_dir) / (stem + "." + fmt);
        if (fmt == "svg") write_file(path, to_svg(bundle, svg));
        if (fmt == "csv") write_file(path, to_csv(bundle));
        if (fmt == "json") write_file(path, to_json(bundle));
        if (fmt == "ggb") write_file(path, to_geogebra(bundle));
    }
    std::cout << describe(bundle.classification) << '\n';
    return ok;
}

int cmd_compare(const std::vector<std::string>& numbers, const Common& c, const std::string& output,
                const SvgOptions& svg)
{
    const Limits limits = limits_for(c);
    const VectorMap map = load_map(c.map);
    std::vector<ExportBundle> bundles;
    for (const auto& number : numbers) bundles.push_back(run_walk(settings_for(number, c), map, limits));
    const std::string doc = to_svg_overlay(bundles, svg);
    if (output == "-")
        std::cout << doc;
    else
        write_file(output, doc);
    for (const auto& b : bundles) (output == "-" ? std::cerr : std::cout) << b.spec << ": " << describe(b.classification) << '\n';
    return ok;
}

int cmd_serve(const std::string& host, int port, const ServiceConfig& config)
{
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    // Blocked before any thread starts so only sigwait sees them.
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    HttpServer server(config);
    if (!server.bind(host, port)) {
        std::cerr << "huella: cannot bind " << host << ":" << port << " (port busy?)\n";
        return port_busy;
    }
    std::cout << "listening on http://" << host << ":" << server.port() << std::endl;

    std::thread worker([&] { server.run(); });
    int received = 0;
    sigwait(&signals, &received);
    server.stop();
    worker.join();
    std::cout << "stopped" << std::endl;
    return ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Decimal digits of a number drawn as a walk in the plane.", "huella"};
    app.require_subcommand(1);
    app.get_formatter()->column_width(44);
    app.set_version_flag("--version", std::string(version));

    std::size_t cap = default_max_digits;
    try {
        cap = env_max_digits();
    } catch (const std::exception& e) {
        std::cerr << "huella: " << e.what() << '\n';
        return usage;
    }

    Common common;
    common.max_digits = cap;
    std::string number;

    auto* digits = app.add_subcommand("digits", "Print the decimal digits and period structure");
    digits->add_option("expression", number, "p/q, sqrt(k), pi, e, decimal or digits:...")->required();
    add_common(*digits, common, false);

    std::string formats = "svg";
    std::string out_dir = ".";
    std::string stem = "huella";
    SvgOptions svg;
    bool no_bands = false;
    auto* walk = app.add_subcommand("walk", "Build the walk, classify it and write exports");
    walk->add_option("expression", number, "p/q, sqrt(k), pi, e, decimal or digits:...")->required();
    add_common(*walk, common, true);
    walk->add_option("--format", formats, "Comma list of svg, csv, json, ggb")->capture_default_str();
    walk->add_option("-o,--output", out_dir, "Output directory")->capture_default_str();
    walk->add_option("--stem", stem, "Output file name without extension")->capture_default_str();
    walk->add_option("--width", svg.width, "SVG width in pixels")->capture_default_str()->check(CLI::PositiveNumber);
    walk->add_flag("--no-bands", no_bands, "Do not shade period blocks in SVG");

    std::vector<std::string> numbers;
    std::string compare_out = "compare.svg";
    auto* compare = app.add_subcommand("compare", "Overlay 2 to 4 walks in one SVG");
    compare->add_option("expressions", numbers, "Two to four expressions")->required()->expected(2, 4);
    add_common(*compare, common, true);
    compare->add_option("-o,--output", compare_out, "SVG file, - for stdout")->capture_default_str();
    compare->add_option("--width", svg.width, "SVG width in pixels")->capture_default_str()->check(CLI::PositiveNumber);
    compare->add_flag("--no-bands", no_bands, "Do not shade period blocks");

    ServiceConfig config;
    config.max_digits = cap;
    std::string host = "127.0.0.1";
    int port = 8080;
    std::vector<std::string> origins{"*"};
    auto* serve = app.add_subcommand("serve", "Run the HTTP JSON service");
    serve->add_option("--host", host, "Listen address")->capture_default_str();
    serve->add_option("--port", port, "Listen port (0 picks a free one)")->capture_default_str()->check(
        CLI::Range(0, 65535));
    serve->add_option("--max-digits", config.max_digits, "Digit budget cap (env HUELLA_MAX_DIGITS)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    serve->add_option("--step-budget", config.step_budget, "Comparison budget per classification")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    serve->add_option("--allow-origin", origins, "CORS allowed origin, repeatable")->default_str("*");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }
    svg.banding = !no_bands;

    try {
        if (*digits) return cmd_digits(number, common);
        if (*walk) return cmd_walk(number, common, formats, out_dir, stem, svg);
        if (*compare) return cmd_compare(numbers, common, compare_out, svg);
        if (*serve) {
            config.allowed_origins = origins;
            return cmd_serve(host, port, config);
        }
    } catch (const ParseError& e) {
        std::cerr << "huella: " << e.what() << '\n';
        return usage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "huella: " << e.what() << '\n';
        return budget;
    } catch (const IoError& e) {
        std::cerr << "huella: " << e.what() << '\n';
        return io;
    } catch (const MapError& e) {
        std::cerr << "huella: map: " << e.what() << '\n';
        return usage;
    } catch (const ExactOverflow& e) {
        std::cerr << "huella: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "huella: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "huella: internal error: " << e.what() << '\n';
        return internal;
    }
    return internal;
}
