#include "gsmlb/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gsmlb {

std::string_view to_string(SystemKind kind) noexcept
{
    return kind == SystemKind::normal ? "normal" : "load_balanced";
}

std::string_view to_string(Disposition disposition) noexcept
{
    switch (disposition) {
    case Disposition::accepted_home:
        return "accepted_home";
    case Disposition::handed_over:
        return "handed_over";
    case Disposition::blocked:
        break;
    }
    return "blocked";
}

double compute_quantum(double avg_arrival_range_ms, double ready_queue_size)
{
    if (!(avg_arrival_range_ms > 0.0) || !(ready_queue_size > 0.0))
        throw std::invalid_argument("quantum needs a positive arrival range and queue size");
    return avg_arrival_range_ms / ready_queue_size;
}

double slice_execution_time(double quantum_ms, double context_switch_ms)
{
    return quantum_ms + context_switch_ms;
}

std::size_t slices_needed(double demand_ms, double quantum_ms)
{
    return static_cast<std::size_t>(std::ceil(demand_ms / quantum_ms));
}

ReadyQueue::ReadyQueue(double quantum_ms, double context_switch_ms)
    : quantum_ms_(quantum_ms), context_switch_ms_(context_switch_ms)
{
    if (!(quantum_ms > 0.0) || !std::isfinite(quantum_ms))
        throw std::invalid_argument("quantum must be positive");
    if (!(context_switch_ms >= 0.0))
        throw std::invalid_argument("context switch time must be non-negative");
}

void ReadyQueue::push(std::size_t call_index, double demand_ms)
{
    if (!(demand_ms > 0.0))
        throw std::invalid_argument("queued demand must be positive");
    entries_.push_back({call_index, demand_ms, slices_needed(demand_ms, quantum_ms_), 0});
}

ReadyQueue::Slice ReadyQueue::service_head()
{
    if (entries_.empty())
        throw std::logic_error("service_head on empty ready queue");
    Entry head = entries_.front();
    entries_.pop_front();
    ++head.slices_used;
    const bool finished = head.slices_used >= head.slices_needed;
    if (!finished)
        entries_.push_back(head);
    return {head, finished};
}

std::vector<ReadyQueue::Entry> ReadyQueue::drain()
{
    std::vector<Entry> rest(entries_.begin(), entries_.end());
    entries_.clear();
    return rest;
}

double ReadyQueue::remaining_ms(const Entry& entry) const noexcept
{
    return std::max(0.0, entry.demand_ms - static_cast<double>(entry.slices_used) * quantum_ms_);
}

namespace {

void finalize(SimulationReport& report)
{
    const auto n = report.records.size();
    report.empirical_blocking = n == 0 ? 0.0 : static_cast<double>(report.blocked) / static_cast<double>(n);
}

// Home admission shared by both systems. Returns how many calls were accepted.
std::size_t admit_home(SimulationReport& report, ChannelLedger& ledger,
                       std::span<const CallRequest> calls, double waiting_ms)
{
    const auto accepted = std::min(calls.size(), ledger.initial(kHomeBsc));
    for (std::size_t i = 0; i < accepted; ++i) {
        ledger.assign(kHomeBsc);
        auto& r = report.records[i];
        r.disposition = Disposition::accepted_home;
        r.serving_bsc = kHomeBsc;
        r.execution_time_ms = calls[i].arrival_time_ms + waiting_ms;
        report.total_execution_time_ms += r.execution_time_ms;
    }
    report.accepted_home = accepted;
    report.overflow = calls.size() - accepted;
    return accepted;
}

SimulationReport empty_report(SystemKind system, const NetworkTopology& topology,
                              std::span<const CallRequest> calls)
{
    SimulationReport report;
    report.system = system;
    report.per_bsc_handled.assign(topology.size(), 0);
    report.records.resize(calls.size());
    for (std::size_t i = 0; i < calls.size(); ++i)
        report.records[i].call_id = calls[i].id;
    return report;
}

}  // namespace

SimulationReport simulate_normal(const NetworkTopology& topology, std::span<const CallRequest> calls,
                                 const NormalParams& params)
{
    auto report = empty_report(SystemKind::normal, topology, calls);
    ChannelLedger ledger(topology);
    admit_home(report, ledger, calls, params.waiting_ms);
    report.blocked = report.overflow;
    finalize(report);
    return report;
}

SimulationReport simulate_load_balanced(const NetworkTopology& topology,
                                        std::span<const CallRequest> calls,
                                        const LoadBalanceParams& params)
{
    auto report = empty_report(SystemKind::load_balanced, topology, calls);
    ChannelLedger ledger(topology);
    const auto first_overflow = admit_home(report, ledger, calls, params.waiting_ms);
    // Home-accepted execution time is kept on the records; the LB total
    // measures only the handover work.
    report.total_execution_time_ms = 0.0;

    const auto overflow = calls.subspan(first_overflow);
    const auto neighbors = neighbor_ids(topology);
    const auto any_free = [&] {
        return std::any_of(neighbors.begin(), neighbors.end(),
                           [&](BscId b) { return ledger.has_free(b); });
    };

    if (!overflow.empty() && any_free()) {
        const double quantum = params.quantum_override_ms
                                   ? *params.quantum_override_ms
                                   : compute_quantum(average_arrival_range(overflow),
                                                     static_cast<double>(overflow.size()));
        report.quantum_ms = quantum;
        ReadyQueue queue(quantum, params.context_switch_ms);
        for (std::size_t i = 0; i < overflow.size(); ++i)
            queue.push(first_overflow + i, overflow[i].demand_ms);

        std::size_t cursor = 0;
        while (!queue.empty() && any_free()) {
            const auto slice = queue.service_head();
            if (!slice.finished)
                continue;
            std::size_t k = 0;
            while (!ledger.has_free(neighbors[(cursor + k) % neighbors.size()]))
                ++k;
            const auto target = neighbors[(cursor + k) % neighbors.size()];
            cursor = (cursor + k + 1) % neighbors.size();
            ledger.assign(target);

            auto& r = report.records[slice.entry.call_index];
            r.disposition = Disposition::handed_over;
            r.serving_bsc = target;
            r.slices_used = slice.entry.slices_used;
            r.execution_time_ms = static_cast<double>(r.slices_used) * queue.slice_cost_ms();
            report.total_execution_time_ms += r.execution_time_ms;
            ++report.handed_over;
            ++report.per_bsc_handled[target.index];
        }
        // Entries left behind (neighbors exhausted) keep the default blocked record.
        queue.drain();
    }

    report.blocked = report.overflow - report.handed_over;
    finalize(report);
    return report;
}

ComparisonReport compare_systems(const NetworkTopology& topology, std::span<const CallRequest> calls,
                                 const LoadBalanceParams& params)
{
    ComparisonReport cmp;
    cmp.normal = simulate_normal(topology, calls, NormalParams{params.waiting_ms});
    cmp.load_balanced = simulate_load_balanced(topology, calls, params);
    cmp.blocking_delta_pp = 100.0 * (cmp.load_balanced.empirical_blocking - cmp.normal.empirical_blocking);
    cmp.execution_time_delta_ms =
        cmp.load_balanced.total_execution_time_ms - cmp.normal.total_execution_time_ms;
    cmp.handover_delta = static_cast<std::ptrdiff_t>(cmp.load_balanced.handed_over) -
                         static_cast<std::ptrdiff_t>(cmp.normal.handed_over);
    return cmp;
}

}  // namespace gsmlb
