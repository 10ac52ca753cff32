#ifndef UOWSN_HARNESS_HPP
#define UOWSN_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uowsn/metrics.hpp"
#include "uowsn/routing.hpp"
#include "uowsn/topology.hpp"

namespace uowsn::harness {

struct SimulationConfig {
    double area_width = 250.0;
    double area_height = 250.0;
    std::vector<std::size_t> node_counts{20, 30, 40, 50, 60, 70, 80, 90, 100};
    double max_range = 80.0;
    channel::WaterType water = channel::WaterType::ClearOcean;
    /// Extinction is taken from `extinction_override`, else from absorption +
    /// scattering when both are set, else from `water`; `channel.extinction`
    /// itself is ignored.
    channel::ChannelParams channel;
    std::optional<double> extinction_override;
    channel::ReceiverNoise noise;
    channel::PhysicalConstants constants;
    topology::Point source_pos{52.5, 125.0};
    topology::Point target_pos{197.5, 125.0};
    std::vector<routing::Protocol> protocols{routing::Protocol::CRP, routing::Protocol::DRP,
                                             routing::Protocol::SRP};
    routing::WeightMode weight_mode = routing::WeightMode::ExactLog;
    double packet_bits = 1024.0;
    double per_hop_processing = 0.0;
    std::size_t realizations = 500;
    std::uint64_t master_seed = 1;
    bool srp_fallback = false;
    /// Wall-clock timing makes per-trial output machine dependent; when off,
    /// wall_clock_ns is recorded as 0.
    bool record_timing = false;

    channel::ChannelParams channel_params() const;
    topology::DeploymentSpec deployment(std::size_t node_count) const;
    /// Shares light speed with `constants` and data rate with `noise`.
    metrics::DelayModel delay_model() const;
    routing::ProtocolOptions protocol_options() const;

    /// Throws ConfigError. Returns non-fatal warnings.
    std::vector<std::string> validate() const;
};

struct TrialRecord {
    std::size_t node_count = 0;
    std::size_t realization = 0;
    std::uint64_t seed = 0;
    std::vector<metrics::TrialMetrics> metrics;  // in config.protocols order

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// Everything produced by one trial, for callers that want the graph and routes.
struct TrialDetail {
    topology::NetworkGraph graph;
    std::vector<metrics::ProtocolRun> runs;
    TrialRecord record;
};

TrialDetail run_trial_detail(const SimulationConfig& config, std::size_t node_count,
                             std::uint64_t trial_seed);

/// Runs one realization; the trial seed is derived from master_seed and index.
TrialRecord run_trial(const SimulationConfig& config, std::size_t node_count,
                      std::size_t realization_index);

struct SummaryStats {
    double mean = 0.0;
    double stddev = 0.0;  // population standard deviation

    friend bool operator==(const SummaryStats&, const SummaryStats&) = default;
};

struct Aggregate {
    routing::Protocol protocol = routing::Protocol::CRP;
    std::size_t node_count = 0;
    std::size_t trials = 0;
    std::size_t successes = 0;
    double success_rate = 0.0;
    // Over successful trials only; NaN when there are none.
    SummaryStats e2e_ber;
    SummaryStats e2e_delay_s;
    SummaryStats evaluations;
    SummaryStats hop_count;

    std::size_t failures() const { return trials - successes; }

    friend bool operator==(const Aggregate&, const Aggregate&) = default;
};

struct CampaignResult {
    std::vector<TrialRecord> trials;     // node count sweep order, then realization
    std::vector<Aggregate> aggregates;   // node count sweep order, then protocol order

    const Aggregate* find(routing::Protocol protocol, std::size_t node_count) const;
};

struct RunOptions {
    /// 0 selects std::thread::hardware_concurrency().
    unsigned threads = 1;
    /// When set, trials are dispatched in a shuffled order (results are keyed
    /// by index, so the result must not change).
    std::optional<std::uint64_t> execution_order_seed;
};

/// Reads UOWSN_THREADS; 0 or unset means automatic.
unsigned threads_from_environment();

CampaignResult run_campaign(const SimulationConfig& config, const RunOptions& options = {});

/// Aggregates already-computed trials in index order.
std::vector<Aggregate> aggregate(const SimulationConfig& config,
                                 const std::vector<TrialRecord>& trials);

}  // namespace uowsn::harness

#endif  // UOWSN_HARNESS_HPP
