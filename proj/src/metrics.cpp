#include "uowsn/metrics.hpp"

#include <cmath>

namespace uowsn::metrics {

void DelayModel::validate() const {
    if (!(light_speed_water > 0.0)) throw ConfigError("light_speed_water must be positive");
    if (!(packet_bits > 0.0)) throw ConfigError("packet_bits must be positive");
    if (!(data_rate > 0.0)) throw ConfigError("data_rate must be positive");
    if (!(per_hop_processing >= 0.0)) throw ConfigError("per_hop_processing must be >= 0");
}

double e2e_delay(const routing::Route& route, const DelayModel& model) {
    const double propagation = route.total_distance() / model.light_speed_water;
    const double per_hop = model.packet_bits / model.data_rate + model.per_hop_processing;
    return propagation + static_cast<double>(route.hop_count()) * per_hop;
}

std::vector<TrialMetrics> collect_trial(std::span<const ProtocolRun> runs, const DelayModel& model) {
    std::vector<TrialMetrics> out;
    out.reserve(runs.size());
    for (const auto& run : runs) {
        TrialMetrics m;
        m.protocol = run.protocol;
        m.evaluations = run.outcome.evaluations();
        m.wall_clock_ns = run.wall_clock_ns;
        if (run.outcome.ok()) {
            const auto& r = run.outcome.route();
            m.route = RouteMetrics{r.hop_count(), r.e2e_ber, e2e_delay(r, model), r.total_distance()};
        } else {
            m.failure = run.outcome.failure_reason();
        }
        out.push_back(m);
    }
    return out;
}

}  // namespace uowsn::metrics
