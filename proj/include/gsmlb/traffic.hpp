#ifndef GSMLB_TRAFFIC_HPP
#define GSMLB_TRAFFIC_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "gsmlb/topology.hpp"

namespace gsmlb {

class WorkloadError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Position {
    double x_km = 0.0;
    double y_km = 0.0;

    friend bool operator==(const Position&, const Position&) = default;
};

struct CallRequest {
    std::size_t id = 0;
    double arrival_time_ms = 0.0;
    Position position;
    double demand_ms = 0.4;

    friend bool operator==(const CallRequest&, const CallRequest&) = default;
};

struct WorkloadParams {
    std::size_t n_calls = 900;
    std::uint64_t seed = 42;
    double arrival_window_ms = 2000.0;
    double demand_ms = 0.4;

    void validate() const;
};

/// Uniform arrivals over [0, window] and uniform positions over the area,
/// sorted by arrival with ids reassigned 0..n-1. A pure function of its inputs.
std::vector<CallRequest> generate_workload(const WorkloadParams& params,
                                           const NetworkTopology& topology);

/// Mean arrival timestamp. Throws WorkloadError on an empty list.
double average_arrival_range(std::span<const CallRequest> calls);

/// Checks the CallRequest invariants plus arrival ordering and placement
/// inside the topology's area.
void validate_workload(std::span<const CallRequest> calls, const NetworkTopology& topology);

/// Columnar text: a `#` header, then `id arrival_ms x_km y_km demand_ms` per
/// line. Reals are written with round-trip precision.
void write_workload(std::ostream& out, std::span<const CallRequest> calls);
std::vector<CallRequest> read_workload(std::istream& in);

namespace detail {

/// splitmix64 finalizer, used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t value) noexcept;

}  // namespace detail

}  // namespace gsmlb

#endif  // GSMLB_TRAFFIC_HPP
