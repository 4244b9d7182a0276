#include "gsmlb/report_io.hpp"

#include <ostream>
#include <string>

#include <fmt/format.h>

namespace gsmlb {

using nlohmann::json;

json report_to_json(const SimulationReport& report, json params, bool full)
{
    params["quantum_ms"] = report.quantum_ms ? json(*report.quantum_ms) : json(nullptr);
    params["n_calls"] = report.total();

    json per_bsc = json::object();
    for (std::size_t b = 0; b < report.per_bsc_handled.size(); ++b)
        per_bsc[std::to_string(b)] = report.per_bsc_handled[b];

    json doc = {
        {"system", to_string(report.system)},
        {"params", std::move(params)},
        {"counts",
         {{"accepted_home", report.accepted_home},
          {"handed_over", report.handed_over},
          {"blocked", report.blocked}}},
        {"per_bsc_handled", std::move(per_bsc)},
        {"total_execution_time_ms", report.total_execution_time_ms},
        {"empirical_blocking", report.empirical_blocking},
    };
    if (full) {
        json records = json::array();
        for (const auto& r : report.records) {
            records.push_back({{"call_id", r.call_id},
                               {"disposition", to_string(r.disposition)},
                               {"serving_bsc", r.serving_bsc ? json(r.serving_bsc->index) : json(nullptr)},
                               {"execution_time_ms", r.execution_time_ms},
                               {"slices_used", r.slices_used}});
        }
        doc["records"] = std::move(records);
    }
    return doc;
}

json comparison_to_json(const ComparisonReport& cmp, const json& params, bool full)
{
    return {
        {"normal", report_to_json(cmp.normal, params, full)},
        {"load_balanced", report_to_json(cmp.load_balanced, params, full)},
        {"deltas",
         {{"blocking_pp", cmp.blocking_delta_pp},
          {"execution_time_ms", cmp.execution_time_delta_ms},
          {"handover", cmp.handover_delta}}},
    };
}

json sweep_to_json(std::span<const BlockingCurvePoint> points)
{
    json rows = json::array();
    for (const auto& p : points)
        rows.push_back({{"n_calls", p.n_calls}, {"ns_blocking", p.ns_blocking}, {"lb_blocking", p.lb_blocking}});
    return rows;
}

void write_records_csv(std::ostream& out, const SimulationReport& report)
{
    out << "call_id,disposition,serving_bsc,execution_time_ms,slices_used\n";
    for (const auto& r : report.records) {
        out << fmt::format("{},{},{},{},{}\n", r.call_id, to_string(r.disposition),
                           r.serving_bsc ? std::to_string(r.serving_bsc->index) : std::string(),
                           r.execution_time_ms, r.slices_used);
    }
}

void write_comparison_csv(std::ostream& out, const ComparisonReport& cmp)
{
    out << "system,n_calls,accepted_home,handed_over,blocked,total_execution_time_ms,empirical_blocking\n";
    for (const auto* r : {&cmp.normal, &cmp.load_balanced}) {
        out << fmt::format("{},{},{},{},{},{},{:.6f}\n", to_string(r->system), r->total(), r->accepted_home,
                           r->handed_over, r->blocked, r->total_execution_time_ms, r->empirical_blocking);
    }
}

namespace {

void write_header(std::ostream& out, const NetworkTopology& topology, const SimulationReport& report)
{
    out << fmt::format("system have {} cell per BSC\n", topology.bsc(kHomeBsc).cells);
    out << fmt::format("channel free BSC1 = {}\n", topology.home_capacity());
    out << fmt::format("number of call request = {}\n", report.total());
    if (report.overflow > 0)
        out << "BSC1 overloaded\n";
}

}  // namespace

void write_console_block(std::ostream& out, const NetworkTopology& topology, const SimulationReport& report)
{
    write_header(out, topology, report);
    if (report.system == SystemKind::load_balanced) {
        out << fmt::format("Number of Handover calls = {}\n", report.handed_over);
        for (std::size_t b = 1; b < topology.size(); ++b)
            out << fmt::format("channel free BSC{} = {}\n", b + 1, topology.capacity(BscId{b}));
        for (std::size_t b = 1; b < topology.size(); ++b)
            out << fmt::format("BSC{} Handeled = {}\n", b + 1, report.per_bsc_handled[b]);
        if (report.quantum_ms)
            out << fmt::format("Quantum Time = {:.4f} MS\n", *report.quantum_ms);
    } else {
        out << fmt::format("Accepted calls = {}\n", report.accepted_home);
    }
    out << fmt::format("Blocked calls = {}\n", report.blocked);
    out << fmt::format("Blocking probability = {:.6f}\n", report.empirical_blocking);
    out << fmt::format("Total execution time = {:.4f} MS\n", report.total_execution_time_ms);
}

void write_comparison_console(std::ostream& out, const NetworkTopology& topology, const ComparisonReport& cmp)
{
    out << "-- Normal System --\n";
    write_console_block(out, topology, cmp.normal);
    out << "-- Load Balance System --\n";
    write_console_block(out, topology, cmp.load_balanced);
    out << "-- Difference (LB - NS) --\n";
    out << fmt::format("Blocking delta = {:.4f} percentage points\n", cmp.blocking_delta_pp);
    out << fmt::format("Execution time delta = {:.4f} MS\n", cmp.execution_time_delta_ms);
    out << fmt::format("Handover delta = {}\n", cmp.handover_delta);
}

}  // namespace gsmlb
