#include "gsmlb/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gsmlb {

TopologyConfig TopologyConfig::from_channels(std::span<const std::int64_t> channels,
                                             std::int64_t cells_per_bsc, double area_km)
{
    TopologyConfig config;
    config.area_km = area_km;
    config.bscs.reserve(channels.size());
    for (std::size_t i = 0; i < channels.size(); ++i)
        config.bscs.push_back({static_cast<std::int64_t>(i), cells_per_bsc, channels[i]});
    return config;
}

TopologyConfig default_topology_config()
{
    static constexpr std::int64_t kChannels[] = {313, 346, 382};
    return TopologyConfig::from_channels(kChannels, 7, 1.0);
}

const BscConfig& NetworkTopology::bsc(BscId id) const
{
    if (id.index >= bscs_.size())
        throw std::out_of_range("BSC index " + std::to_string(id.index) + " out of range");
    return bscs_[id.index];
}

std::size_t NetworkTopology::neighbor_capacity() const
{
    return std::accumulate(bscs_.begin() + 1, bscs_.end(), std::size_t{0},
                           [](std::size_t acc, const BscConfig& b) { return acc + b.free_channels; });
}

NetworkTopology build_topology(const TopologyConfig& config)
{
    const auto count = config.bscs.size();
    if (count < 2)
        throw TopologyError("at least one neighbor required (got " + std::to_string(count) +
                            " BSC" + (count == 1 ? "" : "s") + ")");
    if (!(config.area_km > 0.0) || !std::isfinite(config.area_km))
        throw TopologyError("area_km must be positive");

    std::vector<bool> seen(count, false);
    NetworkTopology topology;
    topology.msc_id_ = config.msc_id;
    topology.area_km_ = config.area_km;
    topology.bscs_.resize(count);
    for (const auto& b : config.bscs) {
        if (b.id < 0 || static_cast<std::size_t>(b.id) >= count)
            throw TopologyError("BSC id " + std::to_string(b.id) + " outside 0.." +
                                std::to_string(count - 1));
        const auto index = static_cast<std::size_t>(b.id);
        if (seen[index])
            throw TopologyError("duplicate BSC id " + std::to_string(b.id));
        seen[index] = true;
        if (b.free_channels < 0)
            throw TopologyError("BSC " + std::to_string(b.id) + ": negative channel count " +
                                std::to_string(b.free_channels));
        if (b.cells < 1)
            throw TopologyError("BSC " + std::to_string(b.id) + ": needs at least one cell");
        topology.bscs_[index] = BscConfig{BscId{index}, static_cast<std::size_t>(b.cells),
                                          static_cast<std::size_t>(b.free_channels)};
    }
    return topology;
}

std::vector<BscId> neighbor_ids(const NetworkTopology& topology)
{
    std::vector<BscId> ids;
    ids.reserve(topology.size() - 1);
    for (std::size_t i = 1; i < topology.size(); ++i)
        ids.push_back(BscId{i});
    return ids;
}

ChannelLedger::ChannelLedger(const NetworkTopology& topology)
{
    initial_.reserve(topology.size());
    for (const auto& b : topology.bscs())
        initial_.push_back(b.free_channels);
    remaining_ = initial_;
}

void ChannelLedger::assign(BscId id)
{
    auto& pool = remaining_.at(id.index);
    if (pool == 0)
        throw std::logic_error("no free channel on BSC " + std::to_string(id.index));
    --pool;
}

void ChannelLedger::release(BscId id)
{
    auto& pool = remaining_.at(id.index);
    if (pool == initial_.at(id.index))
        throw std::logic_error("release without assignment on BSC " + std::to_string(id.index));
    ++pool;
}

}  // namespace gsmlb
