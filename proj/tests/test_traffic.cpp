#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "gsmlb/traffic.hpp"

using namespace gsmlb;

namespace {

NetworkTopology default_topology() { return build_topology(default_topology_config()); }

}  // namespace

TEST_CASE("900-call workload is sorted, in area, and densely numbered")
{
    const auto t = default_topology();
    const WorkloadParams params{900, 42, 2000.0, 0.4};
    const auto calls = generate_workload(params, t);
    REQUIRE(calls.size() == 900);
    for (std::size_t i = 0; i < calls.size(); ++i) {
        CHECK(calls[i].id == i);
        CHECK(calls[i].demand_ms == 0.4);
        CHECK(calls[i].arrival_time_ms >= 0.0);
        CHECK(calls[i].arrival_time_ms <= 2000.0);
        CHECK(calls[i].position.x_km >= 0.0);
        CHECK(calls[i].position.x_km <= 1.0);
        CHECK(calls[i].position.y_km >= 0.0);
        CHECK(calls[i].position.y_km <= 1.0);
        if (i > 0)
            CHECK(calls[i - 1].arrival_time_ms <= calls[i].arrival_time_ms);
    }
    CHECK_NOTHROW(validate_workload(calls, t));
}

TEST_CASE("workload generation is deterministic and seed-sensitive")
{
    const auto t = default_topology();
    const WorkloadParams params{500, 9, 100.0, 0.4};
    CHECK(generate_workload(params, t) == generate_workload(params, t));
    auto other = params;
    other.seed = 10;
    CHECK(generate_workload(params, t) != generate_workload(other, t));
    CHECK(generate_workload({0, 1, 10.0, 0.4}, t).empty());
}

TEST_CASE("invalid workload params are rejected")
{
    const auto t = default_topology();
    CHECK_THROWS_AS(generate_workload({10, 1, 0.0, 0.4}, t), WorkloadError);
    CHECK_THROWS_AS(generate_workload({10, 1, 10.0, 0.0}, t), WorkloadError);
    CHECK_THROWS_AS(generate_workload({10, 1, 10.0, -2.0}, t), WorkloadError);
}

TEST_CASE("average_arrival_range is the arithmetic mean")
{
    const auto make = [](std::vector<double> arrivals) {
        std::vector<CallRequest> calls;
        for (std::size_t i = 0; i < arrivals.size(); ++i)
            calls.push_back({i, arrivals[i], {}, 0.4});
        return calls;
    };
    CHECK(average_arrival_range(make({0, 10, 20})) == 10.0);
    CHECK(average_arrival_range(make({7.5})) == 7.5);
    CHECK_THROWS_WITH_AS(average_arrival_range(std::vector<CallRequest>{}),
                         doctest::Contains("empty workload"), WorkloadError);
}

TEST_CASE("average_arrival_range over a seeded uniform workload matches an independent recomputation")
{
    const auto calls = generate_workload({1000, 2024, 500.0, 0.4}, default_topology());
    const double mean = average_arrival_range(calls);
    CHECK(mean >= 200.0);
    CHECK(mean <= 300.0);
    // Welford streaming mean, walked back to front.
    double streaming = 0.0;
    std::size_t k = 0;
    for (auto it = calls.rbegin(); it != calls.rend(); ++it) {
        ++k;
        streaming += (it->arrival_time_ms - streaming) / static_cast<double>(k);
    }
    CHECK(mean == doctest::Approx(streaming).epsilon(1e-12));
}

TEST_CASE("uniformity sanity over 10^4 samples")
{
    const WorkloadParams params{10000, 77, 1000.0, 0.4};
    const auto calls = generate_workload(params, default_topology());
    CHECK(std::abs(average_arrival_range(calls) - 500.0) <= 0.05 * 500.0);
    std::array<std::size_t, 4> quadrant{};
    for (const auto& c : calls)
        ++quadrant[(c.position.x_km >= 0.5 ? 1 : 0) + (c.position.y_km >= 0.5 ? 2 : 0)];
    for (const auto q : quadrant) {
        CHECK(q >= 2000);
        CHECK(q <= 3000);
    }
}

TEST_CASE("workload text export round-trips bit-exactly")
{
    const auto t = default_topology();
    const auto calls = generate_workload({257, 5, 2000.0, 0.4}, t);
    std::stringstream buffer;
    write_workload(buffer, calls);
    const auto back = read_workload(buffer);
    CHECK(back == calls);
}

TEST_CASE("workload import diagnostics")
{
    std::istringstream short_row("# header\n0 1.0 0.5 0.5\n");
    CHECK_THROWS_WITH_AS(read_workload(short_row), doctest::Contains("line 2"), WorkloadError);
    std::istringstream extra("0 1.0 0.5 0.5 0.4 9\n");
    CHECK_THROWS_AS(read_workload(extra), WorkloadError);

    const auto t = default_topology();
    std::vector<CallRequest> unsorted{{0, 5.0, {0.1, 0.1}, 0.4}, {1, 1.0, {0.1, 0.1}, 0.4}};
    CHECK_THROWS_WITH_AS(validate_workload(unsorted, t), doctest::Contains("sorted"), WorkloadError);
    std::vector<CallRequest> outside{{0, 5.0, {1.5, 0.1}, 0.4}};
    CHECK_THROWS_AS(validate_workload(outside, t), WorkloadError);
    std::vector<CallRequest> no_demand{{0, 5.0, {0.5, 0.1}, 0.0}};
    CHECK_THROWS_AS(validate_workload(no_demand, t), WorkloadError);
}
