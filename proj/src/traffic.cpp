#include "gsmlb/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include <fmt/format.h>

namespace gsmlb {

namespace detail {

std::uint64_t mix_seed(std::uint64_t value) noexcept
{
    value += 0x9e3779b97f4a7c15ULL;
    value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
    value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
    return value ^ (value >> 31);
}

}  // namespace detail

namespace {

constexpr std::uint64_t kArrivalStream = 0xa11a'0001ULL;
constexpr std::uint64_t kPositionStream = 0x9051'0002ULL;

// [0, 1) from the top 53 bits; identical on every standard library.
double unit_real(std::mt19937_64& gen)
{
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

void WorkloadParams::validate() const
{
    if (!(arrival_window_ms > 0.0) || !std::isfinite(arrival_window_ms))
        throw WorkloadError("arrival_window_ms must be positive");
    if (!(demand_ms > 0.0) || !std::isfinite(demand_ms))
        throw WorkloadError("demand_ms must be positive");
}

std::vector<CallRequest> generate_workload(const WorkloadParams& params,
                                           const NetworkTopology& topology)
{
    params.validate();

    std::mt19937_64 arrivals(detail::mix_seed(params.seed ^ kArrivalStream));
    std::mt19937_64 positions(detail::mix_seed(params.seed ^ kPositionStream));
    const double area = topology.area_km();

    std::vector<CallRequest> calls(params.n_calls);
    for (auto& call : calls) {
        call.arrival_time_ms = unit_real(arrivals) * params.arrival_window_ms;
        call.position.x_km = unit_real(positions) * area;
        call.position.y_km = unit_real(positions) * area;
        call.demand_ms = params.demand_ms;
    }
    std::stable_sort(calls.begin(), calls.end(), [](const CallRequest& a, const CallRequest& b) {
        return a.arrival_time_ms < b.arrival_time_ms;
    });
    for (std::size_t i = 0; i < calls.size(); ++i)
        calls[i].id = i;
    return calls;
}

double average_arrival_range(std::span<const CallRequest> calls)
{
    if (calls.empty())
        throw WorkloadError("average arrival range undefined on empty workload");
    const double sum = std::accumulate(calls.begin(), calls.end(), 0.0,
                                       [](double acc, const CallRequest& c) { return acc + c.arrival_time_ms; });
    return sum / static_cast<double>(calls.size());
}

void validate_workload(std::span<const CallRequest> calls, const NetworkTopology& topology)
{
    const double area = topology.area_km();
    for (std::size_t i = 0; i < calls.size(); ++i) {
        const auto& c = calls[i];
        if (!(c.arrival_time_ms >= 0.0) || !std::isfinite(c.arrival_time_ms))
            throw WorkloadError(fmt::format("call {}: arrival time must be non-negative", c.id));
        if (!(c.demand_ms > 0.0) || !std::isfinite(c.demand_ms))
            throw WorkloadError(fmt::format("call {}: demand must be positive", c.id));
        if (!(c.position.x_km >= 0.0 && c.position.x_km <= area && c.position.y_km >= 0.0 &&
              c.position.y_km <= area))
            throw WorkloadError(fmt::format("call {}: position outside {} km area", c.id, area));
        if (i > 0 && c.arrival_time_ms < calls[i - 1].arrival_time_ms)
            throw WorkloadError(fmt::format("call {}: arrivals not sorted", c.id));
    }
}

void write_workload(std::ostream& out, std::span<const CallRequest> calls)
{
    out << "# id arrival_ms x_km y_km demand_ms\n";
    for (const auto& c : calls)
        out << fmt::format("{} {} {} {} {}\n", c.id, c.arrival_time_ms, c.position.x_km,
                           c.position.y_km, c.demand_ms);
}

std::vector<CallRequest> read_workload(std::istream& in)
{
    std::vector<CallRequest> calls;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        CallRequest c;
        if (!(fields >> c.id >> c.arrival_time_ms >> c.position.x_km >> c.position.y_km >> c.demand_ms))
            throw WorkloadError(fmt::format("workload line {}: expected 5 columns", line_no));
        std::string extra;
        if (fields >> extra)
            throw WorkloadError(fmt::format("workload line {}: trailing data '{}'", line_no, extra));
        calls.push_back(c);
    }
    return calls;
}

}  // namespace gsmlb
