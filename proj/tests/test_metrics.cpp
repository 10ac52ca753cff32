#include "doctest.h"

#include "support.hpp"
#include "uowsn/metrics.hpp"

using namespace uowsn;
using namespace uowsn::metrics;
using routing::Route;

namespace {

Route route_of(std::vector<double> distances) {
    Route r;
    r.hops.push_back(0);
    for (std::size_t i = 0; i < distances.size(); ++i) {
        r.hops.push_back(static_cast<routing::NodeId>(i + 1));
        r.hop_bers.push_back(0.1);
    }
    r.hop_distances = std::move(distances);
    r.e2e_ber = channel::e2e_ber(r.hop_bers);
    return r;
}

DelayModel table_model() {
    DelayModel m;
    m.light_speed_water = 2.2541e8;
    return m;
}

}  // namespace

TEST_CASE("delay of an empty route is zero") {
    CHECK(e2e_delay(route_of({}), DelayModel{}) == 0.0);
}

TEST_CASE("delay of one 100 m hop") {
    const double d = e2e_delay(route_of({100.0}), table_model());
    CHECK(d == doctest::Approx(100.0 / 2.2541e8 + 1024e-6).epsilon(1e-15));
    CHECK(d == doctest::Approx(1.0244e-3).epsilon(1e-4));
}

TEST_CASE("splitting a hop adds exactly one serialization time") {
    const auto m = table_model();
    const double one = e2e_delay(route_of({100.0}), m);
    const double two = e2e_delay(route_of({50.0, 50.0}), m);
    CHECK(two - one == doctest::Approx(1024e-6).epsilon(1e-12));
}

TEST_CASE("processing time is charged per hop") {
    auto m = table_model();
    m.per_hop_processing = 1e-4;
    const double d = e2e_delay(route_of({10.0, 20.0, 30.0}), m);
    CHECK(d == doctest::Approx(60.0 / 2.2541e8 + 3 * (1024e-6 + 1e-4)).epsilon(1e-14));
}

TEST_CASE("delay model validation") {
    DelayModel m;
    CHECK_NOTHROW(m.validate());
    m.packet_bits = 0;
    CHECK_THROWS_AS(m.validate(), ConfigError);
    m = DelayModel{};
    m.per_hop_processing = -1e-9;
    CHECK_THROWS_AS(m.validate(), ConfigError);
    m = DelayModel{};
    m.data_rate = -1;
    CHECK_THROWS_AS(m.validate(), ConfigError);
}

TEST_CASE("property: delay lower bound and monotonicity") {
    Rng rng(3);
    const DelayModel m;
    for (int i = 0; i < 2000; ++i) {
        std::vector<double> ds;
        const std::size_t hops = rng.next() % 8;
        for (std::size_t k = 0; k < hops; ++k) ds.push_back(rng.uniform(1e-6, 80.0));
        const auto r = route_of(ds);
        const double delay = e2e_delay(r, m);
        CHECK(delay >= r.total_distance() / m.light_speed_water);
        ds.push_back(rng.uniform(1e-6, 80.0));
        CHECK(e2e_delay(route_of(ds), m) > delay);
    }
}

TEST_CASE("collect_trial: disconnected trial") {
    std::vector<ProtocolRun> runs;
    for (auto p : {routing::Protocol::CRP, routing::Protocol::DRP, routing::Protocol::SRP})
        runs.push_back({p, routing::RoutingFailure{routing::FailureReason::Disconnected, 0}, 0});
    const auto out = collect_trial(runs, DelayModel{});
    REQUIRE(out.size() == 3);
    for (const auto& m : out) {
        CHECK_FALSE(m.success());
        CHECK_FALSE(m.route);
        CHECK(m.failure == routing::FailureReason::Disconnected);
    }
}

TEST_CASE("collect_trial: successful three-hop route") {
    auto r = route_of({10.0, 20.0, 30.0});
    r.evaluations = 17;
    const std::vector<ProtocolRun> runs{{routing::Protocol::CRP, r, 1234}};
    const DelayModel model;
    const auto out = collect_trial(runs, model);
    REQUIRE(out.size() == 1);
    REQUIRE(out[0].success());
    CHECK(out[0].route->hop_count == 3);
    CHECK(out[0].route->e2e_delay_s == e2e_delay(r, model));
    CHECK(out[0].route->e2e_ber == channel::e2e_ber(r.hop_bers));
    CHECK(out[0].route->total_distance_m == 60.0);
    CHECK(out[0].evaluations == 17);
    CHECK(out[0].wall_clock_ns == 1234);
    CHECK_FALSE(out[0].failure);
}

TEST_CASE("collect_trial: mixed outcomes keep one record per protocol") {
    const std::vector<ProtocolRun> runs{
        {routing::Protocol::CRP, route_of({40.0}), 0},
        {routing::Protocol::DRP, routing::RoutingFailure{routing::FailureReason::DeadEnd, 5}, 0},
        {routing::Protocol::SRP, routing::RoutingFailure{routing::FailureReason::EmptyQuadrant, 2}, 0}};
    const auto out = collect_trial(runs, DelayModel{});
    REQUIRE(out.size() == 3);
    CHECK(out[0].protocol == routing::Protocol::CRP);
    CHECK(out[1].protocol == routing::Protocol::DRP);
    CHECK(out[2].protocol == routing::Protocol::SRP);
    CHECK(out[0].success());
    CHECK(out[1].failure == routing::FailureReason::DeadEnd);
    CHECK(out[1].evaluations == 5);
    CHECK(out[2].failure == routing::FailureReason::EmptyQuadrant);
}
