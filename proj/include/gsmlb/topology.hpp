#ifndef GSMLB_TOPOLOGY_HPP
#define GSMLB_TOPOLOGY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsmlb {

/// Raised when a topology description violates a structural invariant.
class TopologyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Index of a base-station controller. 0 is always the home BSC.
struct BscId {
    std::size_t index = 0;

    friend constexpr auto operator<=>(const BscId&, const BscId&) = default;
};

inline constexpr BscId kHomeBsc{0};

struct BscConfig {
    BscId id;
    std::size_t cells = 7;
    std::size_t free_channels = 0;
};

/// Unvalidated description of a network, as read from a config file.
/// Signed fields so that bad input survives long enough to be reported.
struct TopologyConfig {
    struct Bsc {
        std::int64_t id = 0;
        std::int64_t cells = 7;
        std::int64_t free_channels = 0;
    };

    std::string msc_id = "MSC1";
    std::vector<Bsc> bscs;
    double area_km = 1.0;

    /// BSCs numbered 0..k-1 in list order, all with the same cell count.
    static TopologyConfig from_channels(std::span<const std::int64_t> channels,
                                        std::int64_t cells_per_bsc = 7,
                                        double area_km = 1.0);
};

/// One MSC, three BSCs with 313/346/382 free channels, seven cells each, 1 km area.
TopologyConfig default_topology_config();

/// Validated, immutable MSC/BSC/cell hierarchy.
class NetworkTopology {
public:
    const std::string& msc_id() const noexcept { return msc_id_; }
    std::span<const BscConfig> bscs() const noexcept { return bscs_; }
    std::size_t size() const noexcept { return bscs_.size(); }
    double area_km() const noexcept { return area_km_; }

    const BscConfig& bsc(BscId id) const;
    std::size_t capacity(BscId id) const { return bsc(id).free_channels; }
    std::size_t home_capacity() const { return capacity(kHomeBsc); }
    std::size_t neighbor_capacity() const;

private:
    friend NetworkTopology build_topology(const TopologyConfig& config);

    NetworkTopology() = default;

    std::string msc_id_;
    std::vector<BscConfig> bscs_;
    double area_km_ = 0.0;
};

/// Validates `config` and orders BSCs by id. Throws TopologyError.
NetworkTopology build_topology(const TopologyConfig& config);

/// Every BSC except the home one, ascending. This is the round-robin rotation order.
std::vector<BscId> neighbor_ids(const NetworkTopology& topology);

/// Per-BSC remaining-channel counters for one simulation run.
///
/// Calls hold their channel for the rest of the run; release() exists for
/// callers that model departures. Assigning from an empty pool is a logic
/// error and throws rather than clamping.
class ChannelLedger {
public:
    explicit ChannelLedger(const NetworkTopology& topology);

    std::size_t initial(BscId id) const { return initial_.at(id.index); }
    std::size_t remaining(BscId id) const { return remaining_.at(id.index); }
    std::size_t assigned(BscId id) const { return initial(id) - remaining(id); }
    bool has_free(BscId id) const { return remaining(id) > 0; }
    std::size_t size() const noexcept { return initial_.size(); }

    void assign(BscId id);
    void release(BscId id);

private:
    std::vector<std::size_t> initial_;
    std::vector<std::size_t> remaining_;
};

}  // namespace gsmlb

#endif  // GSMLB_TOPOLOGY_HPP
