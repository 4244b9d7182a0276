#ifndef GSMLB_ENGINE_HPP
#define GSMLB_ENGINE_HPP

#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gsmlb/topology.hpp"
#include "gsmlb/traffic.hpp"

namespace gsmlb {

enum class SystemKind { normal, load_balanced };
enum class Disposition { accepted_home, handed_over, blocked };

std::string_view to_string(SystemKind kind) noexcept;
std::string_view to_string(Disposition disposition) noexcept;

struct CallRecord {
    std::size_t call_id = 0;
    Disposition disposition = Disposition::blocked;
    std::optional<BscId> serving_bsc;
    double execution_time_ms = 0.0;
    std::size_t slices_used = 0;

    friend bool operator==(const CallRecord&, const CallRecord&) = default;
};

struct SimulationReport {
    SystemKind system = SystemKind::normal;
    std::vector<CallRecord> records;
    std::size_t accepted_home = 0;
    std::size_t handed_over = 0;
    std::size_t blocked = 0;
    /// Handovers served per BSC, indexed by BscId; the home entry stays 0.
    std::vector<std::size_t> per_bsc_handled;
    /// Normal system: sum over home-accepted calls of arrival + waiting.
    /// Load-balanced system: sum over handed-over calls of their slice costs.
    double total_execution_time_ms = 0.0;
    double empirical_blocking = 0.0;
    /// Calls that overflowed the home BSC (queued, in the load-balanced system).
    std::size_t overflow = 0;
    /// Quantum used by the round-robin queue, when one was needed.
    std::optional<double> quantum_ms;

    std::size_t total() const noexcept { return records.size(); }

    friend bool operator==(const SimulationReport&, const SimulationReport&) = default;
};

struct NormalParams {
    double waiting_ms = 3.0;
};

struct LoadBalanceParams {
    double context_switch_ms = 0.1;
    double waiting_ms = 3.0;
    std::optional<double> quantum_override_ms;
};

/// Round-robin time slice: average arrival range over ready-queue size.
/// Throws std::invalid_argument unless both inputs are positive.
double compute_quantum(double avg_arrival_range_ms, double ready_queue_size);

/// Cost of one slice: quantum plus context switch.
double slice_execution_time(double quantum_ms, double context_switch_ms);

/// Number of slices a call with `demand_ms` of work needs at `quantum_ms`.
std::size_t slices_needed(double demand_ms, double quantum_ms);

/// FIFO of overflow calls receiving quantum-sized slices of service.
/// Unfinished calls go back to the tail.
class ReadyQueue {
public:
    struct Entry {
        std::size_t call_index = 0;  ///< position in the workload
        double demand_ms = 0.0;
        std::size_t slices_needed = 0;
        std::size_t slices_used = 0;
    };

    struct Slice {
        Entry entry;
        bool finished = false;
    };

    ReadyQueue(double quantum_ms, double context_switch_ms);

    void push(std::size_t call_index, double demand_ms);

    /// Gives the head call one quantum. A finished call leaves the queue;
    /// an unfinished one is re-enqueued at the tail.
    Slice service_head();

    /// Removes and returns everything still queued, head first.
    std::vector<Entry> drain();

    double remaining_ms(const Entry& entry) const noexcept;

    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }
    double quantum_ms() const noexcept { return quantum_ms_; }
    double context_switch_ms() const noexcept { return context_switch_ms_; }
    double slice_cost_ms() const noexcept { return slice_execution_time(quantum_ms_, context_switch_ms_); }

private:
    std::deque<Entry> entries_;
    double quantum_ms_;
    double context_switch_ms_;
};

/// Baseline admission: the first home_capacity calls in arrival order are
/// served at home, the rest are blocked.
SimulationReport simulate_normal(const NetworkTopology& topology, std::span<const CallRequest> calls,
                                 const NormalParams& params = {});

/// Home admission as in simulate_normal; overflow goes through the
/// round-robin ready queue and is handed over to neighbors in strict rotation.
SimulationReport simulate_load_balanced(const NetworkTopology& topology,
                                        std::span<const CallRequest> calls,
                                        const LoadBalanceParams& params = {});

struct ComparisonReport {
    SimulationReport normal;
    SimulationReport load_balanced;
    /// (LB - NS) empirical blocking, percentage points.
    double blocking_delta_pp = 0.0;
    /// LB - NS total execution time.
    double execution_time_delta_ms = 0.0;
    /// LB - NS handed-over count.
    std::ptrdiff_t handover_delta = 0;
};

ComparisonReport compare_systems(const NetworkTopology& topology, std::span<const CallRequest> calls,
                                 const LoadBalanceParams& params = {});

}  // namespace gsmlb

#endif  // GSMLB_ENGINE_HPP
