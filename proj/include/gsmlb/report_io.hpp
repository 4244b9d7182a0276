#ifndef GSMLB_REPORT_IO_HPP
#define GSMLB_REPORT_IO_HPP

#include <iosfwd>
#include <span>

#include "json.hpp"

#include "gsmlb/engine.hpp"
#include "gsmlb/teletraffic.hpp"
#include "gsmlb/topology.hpp"

namespace gsmlb {

/// {system, params, counts, per_bsc_handled, total_execution_time_ms,
///  empirical_blocking[, records]}. `params` is copied in verbatim;
/// the quantum actually used is added to it.
nlohmann::json report_to_json(const SimulationReport& report, nlohmann::json params, bool full);

/// {normal, load_balanced, deltas{blocking_pp, execution_time_ms, handover}}.
nlohmann::json comparison_to_json(const ComparisonReport& cmp, const nlohmann::json& params, bool full);

nlohmann::json sweep_to_json(std::span<const BlockingCurvePoint> points);

/// One row per call: call_id,disposition,serving_bsc,execution_time_ms,slices_used.
void write_records_csv(std::ostream& out, const SimulationReport& report);

/// One summary row per system.
void write_comparison_csv(std::ostream& out, const ComparisonReport& cmp);

/// Console text in the classic simulator layout
/// ("channel free BSC1 = 313", "BSC2 Handeled = ..."). BSCs print 1-based.
void write_console_block(std::ostream& out, const NetworkTopology& topology,
                         const SimulationReport& report);

void write_comparison_console(std::ostream& out, const NetworkTopology& topology,
                              const ComparisonReport& cmp);

}  // namespace gsmlb

#endif  // GSMLB_REPORT_IO_HPP
