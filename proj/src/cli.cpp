#include "gsmlb/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "gsmlb/config.hpp"
#include "gsmlb/engine.hpp"
#include "gsmlb/report_io.hpp"
#include "gsmlb/teletraffic.hpp"
#include "gsmlb/traffic.hpp"

namespace gsmlb {

namespace {

// Command-line flag -> config key. Flags are applied after the config file.
constexpr std::pair<const char*, const char*> kOverrideFlags[] = {
    {"--calls", "n_calls"},
    {"--seed", "seed"},
    {"--format", "format"},
    {"--output", "output"},
    {"--bsc-channels", "bsc_channels"},
    {"--cells-per-bsc", "cells_per_bsc"},
    {"--area-km", "area_km"},
    {"--window-ms", "arrival_window_ms"},
    {"--demand-ms", "demand_ms"},
    {"--context-switch-ms", "context_switch_ms"},
    {"--waiting-ms", "waiting_ms"},
    {"--quantum-ms", "quantum_override_ms"},
};

struct CommonOptions {
    std::string config_path;
    std::string workload_path;
    bool full = false;
    std::vector<std::string> assignments;
    std::vector<std::pair<std::string, std::string>> overrides;  // key, value

    void attach(CLI::App* cmd, bool with_workload = true)
    {
        cmd->add_option("--config", config_path, "Flat key = value config file");
        if (with_workload)
            cmd->add_option("--workload", workload_path, "Replay a workload exported by `gen`");
        cmd->add_flag("--full", full, "Include per-call records in JSON output");
        cmd->add_option("--set", assignments, "Override any config key: --set key=value");
        overrides.reserve(std::size(kOverrideFlags));
        for (const auto& [flag, key] : kOverrideFlags) {
            auto& slot = overrides.emplace_back(key, std::string());
            cmd->add_option(flag, slot.second, fmt::format("Config key {}", key));
        }
    }

    RunConfig resolve() const
    {
        RunConfig config;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in)
                throw ConfigError("config", fmt::format("cannot open '{}'", config_path));
            load_config(in, config);
        }
        for (const auto& a : assignments) {
            const auto eq = a.find('=');
            if (eq == std::string::npos)
                throw ConfigError(a, "expected --set key=value");
            config.set(a.substr(0, eq), a.substr(eq + 1));
        }
        for (const auto& [key, value] : overrides)
            if (!value.empty())
                config.set(key, value);
        config.validate();
        return config;
    }

    std::vector<CallRequest> calls(const RunConfig& config, const NetworkTopology& topology) const
    {
        if (workload_path.empty())
            return generate_workload(config.workload(), topology);
        std::ifstream in(workload_path);
        if (!in)
            throw ConfigError("workload", fmt::format("cannot open '{}'", workload_path));
        auto calls = read_workload(in);
        validate_workload(calls, topology);
        return calls;
    }
};

nlohmann::json params_json(const RunConfig& config, bool replayed)
{
    nlohmann::json params = {
        {"bsc_channels", config.bsc_channels},
        {"cells_per_bsc", config.cells_per_bsc},
        {"area_km", config.area_km},
        {"context_switch_ms", config.context_switch_ms},
        {"waiting_ms", config.waiting_ms},
    };
    if (!replayed) {
        params["seed"] = config.seed;
        params["arrival_window_ms"] = config.arrival_window_ms;
        params["demand_ms"] = config.demand_ms;
    }
    return params;
}

void emit(const RunConfig& config, const std::string& body, std::ostream& out, bool separate)
{
    if (config.output.empty()) {
        if (separate)
            out << '\n';
        out << body;
        return;
    }
    std::ofstream file(config.output);
    if (!file)
        throw ConfigError("output", fmt::format("cannot write '{}'", config.output));
    file << body;
}

int cmd_run(const std::string& system, const CommonOptions& opts, std::ostream& out)
{
    const auto config = opts.resolve();
    const auto topology = config.topology();
    const auto calls = opts.calls(config, topology);
    const bool lb = system != "normal";
    const auto report = lb ? simulate_load_balanced(topology, calls, config.lb_params())
                           : simulate_normal(topology, calls, NormalParams{config.waiting_ms});

    write_console_block(out, topology, report);
    std::ostringstream body;
    if (config.format.value_or(OutputFormat::json) == OutputFormat::csv)
        write_records_csv(body, report);
    else
        body << report_to_json(report, params_json(config, !opts.workload_path.empty()), opts.full).dump(2)
             << '\n';
    emit(config, body.str(), out, true);
    return exit_code::ok;
}

int cmd_compare(const CommonOptions& opts, std::ostream& out)
{
    const auto config = opts.resolve();
    const auto topology = config.topology();
    const auto calls = opts.calls(config, topology);
    const auto cmp = compare_systems(topology, calls, config.lb_params());

    write_comparison_console(out, topology, cmp);
    std::ostringstream body;
    if (config.format.value_or(OutputFormat::json) == OutputFormat::csv)
        write_comparison_csv(body, cmp);
    else
        body << comparison_to_json(cmp, params_json(config, !opts.workload_path.empty()), opts.full).dump(2)
             << '\n';
    emit(config, body.str(), out, true);
    return exit_code::ok;
}

int cmd_sweep(const std::string& range, const std::string& level_list, const CommonOptions& opts,
              std::ostream& out)
{
    const auto config = opts.resolve();
    const auto topology = config.topology();
    std::vector<std::size_t> levels;
    if (!level_list.empty()) {
        for (const auto v : parse_int_list("levels", level_list)) {
            if (v < 0)
                throw ConfigError("levels", "load levels must be non-negative");
            levels.push_back(static_cast<std::size_t>(v));
        }
        if (!std::is_sorted(levels.begin(), levels.end()))
            throw ConfigError("levels", "load levels must be ascending");
    } else {
        levels = parse_range_spec(range);
    }

    const auto points = blocking_sweep(topology, levels, config.workload(), config.lb_params());
    std::ostringstream body;
    if (config.format.value_or(OutputFormat::csv) == OutputFormat::json)
        body << sweep_to_json(points).dump(2) << '\n';
    else
        write_sweep_csv(body, points);
    emit(config, body.str(), out, false);
    return exit_code::ok;
}

int cmd_gen(const CommonOptions& opts, std::ostream& out)
{
    const auto config = opts.resolve();
    const auto topology = config.topology();
    const auto calls = generate_workload(config.workload(), topology);
    std::ostringstream body;
    write_workload(body, calls);
    emit(config, body.str(), out, false);
    return exit_code::ok;
}

struct ErlangOptions {
    std::optional<double> erlangs;
    std::optional<double> lambda;
    std::optional<double> mu;
    std::int64_t channels = -1;
};

int cmd_erlang(const ErlangOptions& opts, std::ostream& out)
{
    if (opts.channels < 0)
        throw ConfigError("n", "channel count must be a non-negative integer");
    OfferedLoad load;
    if (opts.erlangs) {
        if (opts.lambda || opts.mu)
            throw ConfigError("a", "give either --a or --lambda/--mu, not both");
        if (!(*opts.erlangs >= 0.0))
            throw ConfigError("a", "offered load must be non-negative");
        load = OfferedLoad::from_erlangs(*opts.erlangs);
    } else {
        if (!opts.lambda || !opts.mu)
            throw ConfigError("lambda", "need --a, or both --lambda and --mu");
        if (!(*opts.lambda >= 0.0))
            throw ConfigError("lambda", "arrival rate must be non-negative");
        if (!(*opts.mu > 0.0))
            throw ConfigError("mu", "departure rate must be positive");
        load = OfferedLoad::from_rates(*opts.lambda, *opts.mu);
    }
    out << fmt::format("{:.6f}\n", erlang_b(load, static_cast<std::size_t>(opts.channels)));
    return exit_code::ok;
}

}  // namespace

std::vector<std::size_t> parse_range_spec(const std::string& spec)
{
    const auto first = spec.find(':');
    const auto second = first == std::string::npos ? std::string::npos : spec.find(':', first + 1);
    if (second == std::string::npos || spec.find(':', second + 1) != std::string::npos)
        throw ConfigError("range", fmt::format("expected start:stop:step, got '{}'", spec));
    const auto parse = [&](const std::string& part) {
        const auto v = parse_int_list("range", part);
        if (v.size() != 1 || v[0] < 0)
            throw ConfigError("range", fmt::format("'{}' is not a non-negative integer", part));
        return static_cast<std::size_t>(v[0]);
    };
    const auto start = parse(spec.substr(0, first));
    const auto stop = parse(spec.substr(first + 1, second - first - 1));
    const auto step = parse(spec.substr(second + 1));
    if (step == 0)
        throw ConfigError("range", "step must be positive");
    if (stop < start)
        throw ConfigError("range", fmt::format("descending range {}", spec));
    std::vector<std::size_t> levels;
    for (std::size_t n = start; n <= stop; n += step)
        levels.push_back(n);
    return levels;
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cellular handover load-balancing simulator"};
    app.name("gsmlb");
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Run one admission system and report");
    std::string system;
    run->add_option("system", system, "normal or lb")
        ->required()
        ->check(CLI::IsMember({"normal", "lb", "load_balanced"}));
    CommonOptions run_opts;
    run_opts.attach(run);

    auto* compare = app.add_subcommand("compare", "Run both systems on the same workload");
    CommonOptions compare_opts;
    compare_opts.attach(compare);

    auto* sweep = app.add_subcommand("sweep", "Blocking probability versus offered call count");
    std::string range = "0:1200:100";
    std::string level_list;
    sweep->add_option("range", range, "start:stop:step (inclusive)");
    sweep->add_option("--levels", level_list, "Explicit ascending levels, comma separated");
    CommonOptions sweep_opts;
    sweep_opts.attach(sweep, false);

    auto* erlang = app.add_subcommand("erlang", "Erlang B blocking probability");
    ErlangOptions erlang_opts;
    erlang->add_option("--a", erlang_opts.erlangs, "Offered load in erlangs");
    erlang->add_option("--lambda", erlang_opts.lambda, "Call arrival rate per second");
    erlang->add_option("--mu", erlang_opts.mu, "Call departure rate per second");
    erlang->add_option("--n", erlang_opts.channels, "Number of channels")->required();

    auto* gen = app.add_subcommand("gen", "Export a synthetic workload");
    CommonOptions gen_opts;
    gen_opts.attach(gen, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_code::usage;
    }

    try {
        if (*run)
            return cmd_run(system, run_opts, out);
        if (*compare)
            return cmd_compare(compare_opts, out);
        if (*sweep)
            return cmd_sweep(range, level_list, sweep_opts, out);
        if (*erlang)
            return cmd_erlang(erlang_opts, out);
        if (*gen)
            return cmd_gen(gen_opts, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const TopologyError& e) {
        err << "topology error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const WorkloadError& e) {
        err << "workload error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_code::internal;
    }
    return exit_code::internal;
}

}  // namespace gsmlb
