#include "gsmlb/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <string_view>

#include <fmt/format.h>

namespace gsmlb {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string unquote(std::string_view s)
{
    s = trim(s);
    if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front())
        s = s.substr(1, s.size() - 2);
    return std::string(s);
}

template <typename T>
T parse_number(const std::string& key, std::string_view text, std::size_t line)
{
    text = trim(text);
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end)
        throw ConfigError(key, fmt::format("cannot parse '{}' as a number", text), line);
    return value;
}

double parse_real(const std::string& key, std::string_view text, std::size_t line)
{
    const std::string s(trim(text));
    char* end = nullptr;
    const double value = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(value))
        throw ConfigError(key, fmt::format("cannot parse '{}' as a real", s), line);
    return value;
}

}  // namespace

ConfigError::ConfigError(std::string key, const std::string& message, std::size_t line)
    : std::runtime_error(line == 0 ? fmt::format("{}: {}", key, message)
                                   : fmt::format("line {}: {}: {}", line, key, message)),
      key_(std::move(key)), line_(line)
{
}

std::vector<std::int64_t> parse_int_list(const std::string& key, const std::string& text,
                                         std::size_t line)
{
    auto body = trim(text);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']')
            throw ConfigError(key, "unterminated array", line);
        body = trim(body.substr(1, body.size() - 2));
    }
    std::vector<std::int64_t> values;
    if (body.empty())
        return values;
    std::size_t start = 0;
    while (true) {
        const auto comma = body.find(',', start);
        const auto item = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
        values.push_back(parse_number<std::int64_t>(key, item, line));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return values;
}

void RunConfig::set(const std::string& key, const std::string& value, std::size_t line)
{
    if (key == "bsc_channels")
        bsc_channels = parse_int_list(key, value, line);
    else if (key == "cells_per_bsc")
        cells_per_bsc = parse_number<std::int64_t>(key, value, line);
    else if (key == "area_km")
        area_km = parse_real(key, value, line);
    else if (key == "n_calls")
        n_calls = parse_number<std::int64_t>(key, value, line);
    else if (key == "seed")
        seed = parse_number<std::uint64_t>(key, value, line);
    else if (key == "arrival_window_ms")
        arrival_window_ms = parse_real(key, value, line);
    else if (key == "demand_ms")
        demand_ms = parse_real(key, value, line);
    else if (key == "context_switch_ms")
        context_switch_ms = parse_real(key, value, line);
    else if (key == "waiting_ms")
        waiting_ms = parse_real(key, value, line);
    else if (key == "quantum_override_ms") {
        const auto v = unquote(value);
        if (v.empty() || v == "none")
            quantum_override_ms.reset();
        else
            quantum_override_ms = parse_real(key, v, line);
    } else if (key == "format") {
        const auto v = unquote(value);
        if (v == "json")
            format = OutputFormat::json;
        else if (v == "csv")
            format = OutputFormat::csv;
        else
            throw ConfigError(key, fmt::format("expected csv or json, got '{}'", v), line);
    } else if (key == "output" || key == "path")
        output = unquote(value);
    else
        throw ConfigError(key, "unknown key", line);
}

void RunConfig::validate() const
{
    if (bsc_channels.size() < 2)
        throw ConfigError("bsc_channels", fmt::format("at least one neighbor required (got {} BSC{})",
                                                      bsc_channels.size(),
                                                      bsc_channels.size() == 1 ? "" : "s"));
    for (const auto c : bsc_channels)
        if (c < 0)
            throw ConfigError("bsc_channels", fmt::format("negative channel count {}", c));
    if (cells_per_bsc < 1)
        throw ConfigError("cells_per_bsc", "must be at least 1");
    if (!(area_km > 0.0))
        throw ConfigError("area_km", "must be positive");
    if (n_calls < 0)
        throw ConfigError("n_calls", "must be non-negative");
    if (!(arrival_window_ms > 0.0))
        throw ConfigError("arrival_window_ms", "must be positive");
    if (!(demand_ms > 0.0))
        throw ConfigError("demand_ms", "must be positive");
    if (!(context_switch_ms >= 0.0))
        throw ConfigError("context_switch_ms", "must be non-negative");
    if (!(waiting_ms >= 0.0))
        throw ConfigError("waiting_ms", "must be non-negative");
    if (quantum_override_ms && !(*quantum_override_ms > 0.0))
        throw ConfigError("quantum_override_ms", "must be positive");
}

NetworkTopology RunConfig::topology() const
{
    validate();
    return build_topology(TopologyConfig::from_channels(bsc_channels, cells_per_bsc, area_km));
}

WorkloadParams RunConfig::workload() const
{
    validate();
    return {static_cast<std::size_t>(n_calls), seed, arrival_window_ms, demand_ms};
}

LoadBalanceParams RunConfig::lb_params() const
{
    validate();
    return {context_switch_ms, waiting_ms, quantum_override_ms};
}

void load_config(std::istream& in, RunConfig& config)
{
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view text = raw;
        if (const auto hash = text.find('#'); hash != std::string_view::npos)
            text = text.substr(0, hash);
        text = trim(text);
        if (text.empty())
            continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(std::string(text), "expected 'key = value'", line);
        const auto key = std::string(trim(text.substr(0, eq)));
        if (key.empty())
            throw ConfigError("<empty>", "missing key before '='", line);
        config.set(key, std::string(trim(text.substr(eq + 1))), line);
    }
}

}  // namespace gsmlb
