#include "gsmlb/teletraffic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

namespace gsmlb {

OfferedLoad OfferedLoad::from_erlangs(double erlangs)
{
    if (!(erlangs >= 0.0) || !std::isfinite(erlangs))
        throw std::invalid_argument("offered load must be non-negative");
    return {erlangs, erlangs, 1.0};
}

OfferedLoad OfferedLoad::from_rates(double lambda_per_s, double mu_per_s)
{
    if (!(lambda_per_s >= 0.0) || !std::isfinite(lambda_per_s))
        throw std::invalid_argument("arrival rate must be non-negative");
    if (!(mu_per_s > 0.0) || !std::isfinite(mu_per_s))
        throw std::invalid_argument("departure rate must be positive");
    return {lambda_per_s / mu_per_s, lambda_per_s, mu_per_s};
}

double erlang_b(const OfferedLoad& load, std::size_t n_channels)
{
    return erlang_b(load.erlangs, n_channels);
}

double erlang_b(double erlangs, std::size_t n_channels)
{
    if (!(erlangs >= 0.0) || std::isnan(erlangs))
        throw std::invalid_argument("offered load must be non-negative");
    double e = 1.0;
    for (std::size_t n = 1; n <= n_channels; ++n) {
        const double ae = erlangs * e;
        e = ae / (static_cast<double>(n) + ae);
    }
    return e;
}

double empirical_blocking(const SimulationReport& report)
{
    const auto total = report.total();
    return total == 0 ? 0.0 : static_cast<double>(report.blocked) / static_cast<double>(total);
}

std::uint64_t sweep_level_seed(std::uint64_t base_seed, std::size_t n_calls) noexcept
{
    return detail::mix_seed(base_seed + static_cast<std::uint64_t>(n_calls));
}

std::vector<BlockingCurvePoint> blocking_sweep(const NetworkTopology& topology,
                                               std::span<const std::size_t> levels,
                                               const WorkloadParams& base,
                                               const LoadBalanceParams& lb_params, unsigned max_threads)
{
    if (!std::is_sorted(levels.begin(), levels.end()))
        throw std::invalid_argument("sweep levels must be ascending");
    base.validate();

    std::vector<BlockingCurvePoint> points(levels.size());
    const auto evaluate = [&](std::size_t i) {
        WorkloadParams params = base;
        params.n_calls = levels[i];
        params.seed = sweep_level_seed(base.seed, levels[i]);
        const auto calls = generate_workload(params, topology);
        const auto cmp = compare_systems(topology, calls, lb_params);
        points[i] = {levels[i], empirical_blocking(cmp.normal), empirical_blocking(cmp.load_balanced)};
    };

    unsigned workers = max_threads != 0 ? max_threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, levels.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < levels.size(); ++i)
            evaluate(i);
        return points;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < levels.size(); i = next++) {
                    try {
                        evaluate(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return points;
}

void write_sweep_csv(std::ostream& out, std::span<const BlockingCurvePoint> points)
{
    out << "n_calls,ns_blocking,lb_blocking\n";
    for (const auto& p : points)
        out << fmt::format("{},{:.6f},{:.6f}\n", p.n_calls, p.ns_blocking, p.lb_blocking);
}

}  // namespace gsmlb
