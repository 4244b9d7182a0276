#ifndef GSMLB_TELETRAFFIC_HPP
#define GSMLB_TELETRAFFIC_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "gsmlb/engine.hpp"
#include "gsmlb/topology.hpp"
#include "gsmlb/traffic.hpp"

namespace gsmlb {

/// Offered traffic in erlangs, A = lambda / mu.
struct OfferedLoad {
    double erlangs = 0.0;
    double lambda_per_s = 0.0;
    double mu_per_s = 1.0;

    static OfferedLoad from_erlangs(double erlangs);
    static OfferedLoad from_rates(double lambda_per_s, double mu_per_s);
};

/// Erlang B loss probability for `n_channels` servers offered `load`.
///
/// Evaluated with the recurrence E(0) = 1, E(n) = A E(n-1) / (n + A E(n-1)),
/// which equals (A^N / N!) / sum_{i<=N} A^i / i! without forming factorials.
double erlang_b(const OfferedLoad& load, std::size_t n_channels);
double erlang_b(double erlangs, std::size_t n_channels);

/// Blocked over total requests; 0 for an empty run.
double empirical_blocking(const SimulationReport& report);

struct BlockingCurvePoint {
    std::size_t n_calls = 0;
    double ns_blocking = 0.0;
    double lb_blocking = 0.0;

    friend bool operator==(const BlockingCurvePoint&, const BlockingCurvePoint&) = default;
};

/// Workload seed for one sweep level, derived from the sweep's base seed.
std::uint64_t sweep_level_seed(std::uint64_t base_seed, std::size_t n_calls) noexcept;

/// Runs both systems at each load level. `base.n_calls` is ignored;
/// `base.seed` is the base seed. Levels must be ascending. Points are
/// evaluated on up to `max_threads` threads (0 = hardware concurrency) and
/// returned in level order.
std::vector<BlockingCurvePoint> blocking_sweep(const NetworkTopology& topology,
                                               std::span<const std::size_t> levels,
                                               const WorkloadParams& base,
                                               const LoadBalanceParams& lb_params = {},
                                               unsigned max_threads = 0);

/// `n_calls,ns_blocking,lb_blocking` with six fractional digits.
void write_sweep_csv(std::ostream& out, std::span<const BlockingCurvePoint> points);

}  // namespace gsmlb

#endif  // GSMLB_TELETRAFFIC_HPP
