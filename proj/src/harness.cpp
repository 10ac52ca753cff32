#include "uowsn/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "uowsn/random.hpp"

namespace uowsn::harness {

channel::ChannelParams SimulationConfig::channel_params() const {
    channel::ChannelParams p = channel;
    if (extinction_override) {
        p.extinction = *extinction_override;
    } else if (p.absorption && p.scattering) {
        p.extinction = channel::extinction_from_components(*p.absorption, *p.scattering);
    } else {
        p.extinction = channel::extinction_coefficient(water);
    }
    return p;
}

topology::DeploymentSpec SimulationConfig::deployment(std::size_t node_count) const {
    return topology::DeploymentSpec{area_width, area_height, node_count, source_pos, target_pos};
}

metrics::DelayModel SimulationConfig::delay_model() const {
    return metrics::DelayModel{constants.light_speed_water, packet_bits, noise.data_rate,
                               per_hop_processing};
}

routing::ProtocolOptions SimulationConfig::protocol_options() const {
    return routing::ProtocolOptions{weight_mode, routing::SrpOptions{srp_fallback}};
}

std::vector<std::string> SimulationConfig::validate() const {
    if (realizations < 1) throw ConfigError("realizations must be at least 1");
    if (node_counts.empty()) throw ConfigError("node_count sweep is empty");
    if (!(max_range > 0.0)) throw ConfigError("max_range must be positive");
    if (protocols.empty()) throw ConfigError("no protocols selected");
    if (std::set(protocols.begin(), protocols.end()).size() != protocols.size())
        throw ConfigError("protocol list contains duplicates");
    for (std::size_t n : node_counts) deployment(n).validate();
    try {
        channel_params().validate();
        noise.validate();
        constants.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    delay_model().validate();

    std::vector<std::string> warnings;
    const double separation = topology::distance(source_pos, target_pos);
    if (separation > std::hypot(area_width, area_height))
        warnings.push_back("source-target separation exceeds the area diagonal");
    if (separation == 0.0) warnings.push_back("source and target coincide");
    return warnings;
}

TrialDetail run_trial_detail(const SimulationConfig& config, std::size_t node_count,
                             std::uint64_t trial_seed) {
    auto nodes = topology::generate_deployment(config.deployment(node_count), trial_seed);
    TrialDetail detail{topology::build_graph(std::move(nodes), config.max_range,
                                             config.channel_params(), config.noise,
                                             config.constants),
                       {},
                       {}};
    const auto& graph = detail.graph;
    const topology::NodeId source = 0;
    const topology::NodeId target = 1;
    const bool connected = topology::path_exists(graph, source, target);
    const auto options = config.protocol_options();

    for (auto protocol : config.protocols) {
        if (!connected) {
            detail.runs.push_back({protocol, routing::RoutingFailure{
                                                 routing::FailureReason::Disconnected, 0}});
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        auto outcome = routing::run_protocol(protocol, graph, source, target, options);
        const auto stop = std::chrono::steady_clock::now();
        const std::int64_t ns =
            config.record_timing
                ? std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()
                : 0;
        detail.runs.push_back({protocol, std::move(outcome), ns});
    }

    detail.record.node_count = node_count;
    detail.record.seed = trial_seed;
    detail.record.metrics = metrics::collect_trial(detail.runs, config.delay_model());
    return detail;
}

TrialRecord run_trial(const SimulationConfig& config, std::size_t node_count,
                      std::size_t realization_index) {
    const auto seed = derive_trial_seed(config.master_seed, realization_index);
    auto record = run_trial_detail(config, node_count, seed).record;
    record.realization = realization_index;
    return record;
}

unsigned threads_from_environment() {
    const char* value = std::getenv("UOWSN_THREADS");
    if (value == nullptr) return 0;
    char* end = nullptr;
    const unsigned long parsed = std::strtoul(value, &end, 10);
    if (end == value || *end != '\0') return 0;
    return static_cast<unsigned>(std::min<unsigned long>(parsed, 1024));
}

const Aggregate* CampaignResult::find(routing::Protocol protocol, std::size_t node_count) const {
    for (const auto& a : aggregates)
        if (a.protocol == protocol && a.node_count == node_count) return &a;
    return nullptr;
}

namespace {

SummaryStats summarize(const std::vector<double>& values) {
    if (values.empty()) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        return {nan, nan};
    }
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    double sq = 0.0;
    for (double v : values) sq += (v - mean) * (v - mean);
    return {mean, std::sqrt(sq / static_cast<double>(values.size()))};
}

}  // namespace

std::vector<Aggregate> aggregate(const SimulationConfig& config,
                                 const std::vector<TrialRecord>& trials) {
    std::vector<Aggregate> out;
    for (std::size_t n : config.node_counts) {
        for (std::size_t p = 0; p < config.protocols.size(); ++p) {
            Aggregate agg;
            agg.protocol = config.protocols[p];
            agg.node_count = n;
            std::vector<double> ber, delay, evals, hops;
            for (const auto& trial : trials) {
                if (trial.node_count != n) continue;
                ++agg.trials;
                const auto& m = trial.metrics.at(p);
                if (!m.success()) continue;
                ++agg.successes;
                ber.push_back(m.route->e2e_ber);
                delay.push_back(m.route->e2e_delay_s);
                evals.push_back(static_cast<double>(m.evaluations));
                hops.push_back(static_cast<double>(m.route->hop_count));
            }
            agg.success_rate = agg.trials == 0 ? 0.0
                                               : static_cast<double>(agg.successes) /
                                                     static_cast<double>(agg.trials);
            agg.e2e_ber = summarize(ber);
            agg.e2e_delay_s = summarize(delay);
            agg.evaluations = summarize(evals);
            agg.hop_count = summarize(hops);
            out.push_back(agg);
        }
    }
    return out;
}

CampaignResult run_campaign(const SimulationConfig& config, const RunOptions& options) {
    config.validate();

    struct Job {
        std::size_t node_count;
        std::size_t realization;
    };
    std::vector<Job> jobs;
    for (std::size_t n : config.node_counts)
        for (std::size_t r = 0; r < config.realizations; ++r) jobs.push_back({n, r});

    std::vector<std::size_t> order(jobs.size());
    std::iota(order.begin(), order.end(), 0);
    if (options.execution_order_seed) {
        Rng rng(*options.execution_order_seed);
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng.next() % i]);
    }

    CampaignResult result;
    result.trials.resize(jobs.size());
    std::atomic<std::size_t> cursor{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        for (std::size_t k = cursor++; k < order.size(); k = cursor++) {
            const auto& job = jobs[order[k]];
            try {
                result.trials[order[k]] = run_trial(config, job.node_count, job.realization);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                cursor = order.size();
            }
        }
    };

    unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    result.aggregates = aggregate(config, result.trials);
    return result;
}

}  // namespace uowsn::harness
