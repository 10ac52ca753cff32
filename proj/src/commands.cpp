#include "uowsn/commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "uowsn/format.hpp"

namespace uowsn::cli {

using records::Cell;
using records::OutputRecordSet;

LinkSweep default_link_sweep() {
    LinkSweep sweep;
    sweep.waters = {channel::WaterType::ClearOcean, channel::WaterType::CoastalOcean,
                    channel::WaterType::TurbidHarbor};
    sweep.divergences_deg = {30.0, 60.0, 90.0};
    for (int d = 5; d <= 100; d += 5) sweep.distances_m.push_back(d);
    return sweep;
}

namespace {

void check_sweep(const LinkSweep& sweep) {
    if (sweep.waters.empty() || sweep.divergences_deg.empty() || sweep.distances_m.empty())
        throw UsageError("sweep needs at least one water, divergence and distance");
    for (double d : sweep.distances_m)
        if (!(d > 0.0)) throw UsageError("sweep distances must be positive");
    for (double a : sweep.divergences_deg)
        if (!(a > 0.0 && a <= 180.0)) throw UsageError("divergence angles must be in (0, 180]");
}

channel::ChannelParams params_for(const harness::SimulationConfig& config,
                                  channel::WaterType water, double divergence_deg) {
    channel::ChannelParams p = config.channel;
    p.absorption.reset();
    p.scattering.reset();
    p.extinction = channel::extinction_coefficient(water);
    p.divergence_angle = channel::degrees(divergence_deg);
    return p;
}

template <typename RowValue>
OutputRecordSet sweep_table(std::string schema, std::string value_column,
                            const harness::SimulationConfig& config, const LinkSweep& sweep,
                            RowValue value) {
    check_sweep(sweep);
    OutputRecordSet set(std::move(schema),
                        {"water", "divergence_deg", "distance_m", std::move(value_column)});
    for (auto water : sweep.waters) {
        for (double angle : sweep.divergences_deg) {
            const auto params = params_for(config, water, angle);
            for (double d : sweep.distances_m) {
                set.add_row({Cell{std::string(channel::to_string(water))}, Cell{angle}, Cell{d},
                             Cell{value(params, d)}});
            }
        }
    }
    return set;
}

}  // namespace

OutputRecordSet link_budget_table(const harness::SimulationConfig& config,
                                  const LinkSweep& sweep) {
    return sweep_table("link_budget", "received_power_w", config, sweep,
                       [](const channel::ChannelParams& p, double d) {
                           return channel::received_power_los(p, d);
                       });
}

OutputRecordSet ber_sweep_table(const harness::SimulationConfig& config, const LinkSweep& sweep) {
    return sweep_table("ber_sweep", "ber", config, sweep,
                       [&](const channel::ChannelParams& p, double d) {
                           const double power = channel::received_power_los(p, d);
                           return channel::single_link_ber(power, config.noise, p,
                                                           config.constants);
                       });
}

namespace {

Cell optional_real(const std::optional<metrics::RouteMetrics>& r, double metrics::RouteMetrics::*field) {
    return r ? Cell{(*r).*field} : Cell{std::string()};
}

Cell optional_count(const std::optional<metrics::RouteMetrics>& r) {
    return r ? Cell{static_cast<std::int64_t>(r->hop_count)} : Cell{std::string()};
}

Cell failure_cell(const metrics::TrialMetrics& m) {
    return m.failure ? Cell{std::string(routing::to_string(*m.failure))} : Cell{std::string()};
}

Cell success_cell(const metrics::TrialMetrics& m) {
    return Cell{std::string(m.success() ? "true" : "false")};
}

}  // namespace

RouteReport route_report(const harness::SimulationConfig& config, std::size_t node_count,
                         std::uint64_t trial_seed) {
    config.validate();
    auto detail = harness::run_trial_detail(config, node_count, trial_seed);

    OutputRecordSet summary("route_summary",
                            {"protocol", "success", "failure_reason", "hop_count", "e2e_ber",
                             "e2e_delay_s", "total_distance_m", "evaluations"});
    for (const auto& m : detail.record.metrics) {
        summary.add_row({Cell{std::string(routing::to_string(m.protocol))}, success_cell(m),
                         failure_cell(m), optional_count(m.route),
                         optional_real(m.route, &metrics::RouteMetrics::e2e_ber),
                         optional_real(m.route, &metrics::RouteMetrics::e2e_delay_s),
                         optional_real(m.route, &metrics::RouteMetrics::total_distance_m),
                         Cell{static_cast<std::int64_t>(m.evaluations)}});
    }

    std::vector<std::pair<routing::Protocol, std::string>> dumps;
    for (const auto& run : detail.runs) {
        std::ostringstream out;
        routing::write_route_dump(out, run.protocol, detail.graph, run.outcome);
        dumps.emplace_back(run.protocol, out.str());
    }
    std::ostringstream graph;
    topology::write_graph_dump(graph, detail.graph);

    return RouteReport{std::move(summary), std::move(dumps), graph.str(), std::move(detail)};
}

OutputRecordSet trial_table(const harness::CampaignResult& result) {
    OutputRecordSet set("campaign_trials",
                        {"protocol", "n_nodes", "realization", "seed", "success",
                         "failure_reason", "hop_count", "e2e_ber", "e2e_delay_s",
                         "total_distance_m", "evaluations", "wall_clock_ns"});
    for (const auto& trial : result.trials) {
        for (const auto& m : trial.metrics) {
            set.add_row({Cell{std::string(routing::to_string(m.protocol))},
                         Cell{static_cast<std::int64_t>(trial.node_count)},
                         Cell{static_cast<std::int64_t>(trial.realization)}, Cell{trial.seed},
                         success_cell(m), failure_cell(m), optional_count(m.route),
                         optional_real(m.route, &metrics::RouteMetrics::e2e_ber),
                         optional_real(m.route, &metrics::RouteMetrics::e2e_delay_s),
                         optional_real(m.route, &metrics::RouteMetrics::total_distance_m),
                         Cell{static_cast<std::int64_t>(m.evaluations)},
                         Cell{static_cast<std::int64_t>(m.wall_clock_ns)}});
        }
    }
    return set;
}

OutputRecordSet aggregate_table(const harness::CampaignResult& result) {
    OutputRecordSet set("campaign_aggregate",
                        {"protocol", "n_nodes", "trials", "success_rate", "mean_e2e_ber",
                         "std_e2e_ber", "mean_delay_s", "std_delay_s", "mean_evaluations",
                         "mean_hops"});
    for (const auto& a : result.aggregates) {
        set.add_row({Cell{std::string(routing::to_string(a.protocol))},
                     Cell{static_cast<std::int64_t>(a.node_count)},
                     Cell{static_cast<std::int64_t>(a.trials)}, Cell{a.success_rate},
                     Cell{a.e2e_ber.mean}, Cell{a.e2e_ber.stddev}, Cell{a.e2e_delay_s.mean},
                     Cell{a.e2e_delay_s.stddev}, Cell{a.evaluations.mean},
                     Cell{a.hop_count.mean}});
    }
    return set;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir))
        throw IoError("cannot create output directory " + dir.string());
}

}  // namespace uowsn::cli
