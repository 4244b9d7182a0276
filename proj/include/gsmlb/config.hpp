#ifndef GSMLB_CONFIG_HPP
#define GSMLB_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsmlb/engine.hpp"
#include "gsmlb/topology.hpp"
#include "gsmlb/traffic.hpp"

namespace gsmlb {

/// User-facing configuration problem, tagged with the offending key and,
/// for file input, the line it came from.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message, std::size_t line = 0);

    const std::string& key() const noexcept { return key_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string key_;
    std::size_t line_;
};

enum class OutputFormat { json, csv };

/// Everything a run needs. Defaults are the published scenario constants.
struct RunConfig {
    std::vector<std::int64_t> bsc_channels{313, 346, 382};
    std::int64_t cells_per_bsc = 7;
    double area_km = 1.0;

    std::int64_t n_calls = 900;
    std::uint64_t seed = 42;
    double arrival_window_ms = 2000.0;
    double demand_ms = 0.4;

    double context_switch_ms = 0.1;
    double waiting_ms = 3.0;
    std::optional<double> quantum_override_ms;

    /// Unset means the subcommand's default (json for reports, csv for sweeps).
    std::optional<OutputFormat> format;
    std::string output;

    /// Applies one `key = value` assignment. Unknown keys and malformed
    /// values raise ConfigError naming the key.
    void set(const std::string& key, const std::string& value, std::size_t line = 0);

    /// Range checks on every key; throws ConfigError.
    void validate() const;

    NetworkTopology topology() const;
    WorkloadParams workload() const;
    LoadBalanceParams lb_params() const;
};

/// Reads flat `key = value` lines onto `config`. `#` starts a comment;
/// arrays are bracketed (`bsc_channels = [313, 346, 382]`).
void load_config(std::istream& in, RunConfig& config);

/// Parses `[a, b, c]` or `a,b,c` into integers.
std::vector<std::int64_t> parse_int_list(const std::string& key, const std::string& text,
                                         std::size_t line = 0);

}  // namespace gsmlb

#endif  // GSMLB_CONFIG_HPP
