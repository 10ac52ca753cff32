#ifndef UOWSN_METRICS_HPP
#define UOWSN_METRICS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "uowsn/routing.hpp"

namespace uowsn::metrics {

/// End-to-end latency: propagation over every hop plus per-hop serialization
/// of one packet and an optional fixed processing time.
struct DelayModel {
    double light_speed_water = channel::kVacuumLightSpeed / channel::kSeawaterRefractiveIndex;
    double packet_bits = 1024.0;
    double data_rate = 1e6;
    double per_hop_processing = 0.0;

    void validate() const;  // throws ConfigError
};

double e2e_delay(const routing::Route& route, const DelayModel& model);

/// Metrics that only exist when a route was found.
struct RouteMetrics {
    std::size_t hop_count = 0;
    double e2e_ber = 0.0;
    double e2e_delay_s = 0.0;
    double total_distance_m = 0.0;

    friend bool operator==(const RouteMetrics&, const RouteMetrics&) = default;
};

struct TrialMetrics {
    routing::Protocol protocol = routing::Protocol::CRP;
    std::optional<RouteMetrics> route;               // set iff success
    std::optional<routing::FailureReason> failure;   // set iff !success
    std::uint64_t evaluations = 0;
    std::int64_t wall_clock_ns = 0;

    bool success() const { return route.has_value(); }

    friend bool operator==(const TrialMetrics&, const TrialMetrics&) = default;
};

struct ProtocolRun {
    routing::Protocol protocol;
    routing::RoutingOutcome outcome;
    std::int64_t wall_clock_ns = 0;
};

std::vector<TrialMetrics> collect_trial(std::span<const ProtocolRun> runs, const DelayModel& model);

}  // namespace uowsn::metrics

#endif  // UOWSN_METRICS_HPP
