#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "oracle/oracles.hpp"
#include "support.hpp"
#include "uowsn/routing.hpp"

using namespace uowsn;
using namespace uowsn::routing;
using topology::LinkQuality;
using topology::Point;
using testing::nodes_at;

namespace {

double rel(double a, double b) {
    if (b == 0.0) return std::abs(a);
    return std::abs(a - b) / std::abs(b);
}

bool in_quadrant(Point c, Point t, Point q) {
    const bool x = t.x == c.x || (q.x - c.x) * (t.x - c.x) >= 0;
    const bool y = t.y == c.y || (q.y - c.y) * (t.y - c.y) >= 0;
    return x && y;
}

struct Step {
    std::vector<NodeId> drp_candidates;
    std::vector<NodeId> srp_candidates;
};

/// Replays a greedy route and, at each hop, lists the unvisited neighbours
/// (DRP) and those inside the target quadrant (SRP) under the same visited set.
std::vector<Step> replay(const NetworkGraph& g, const Route& r) {
    std::vector<bool> visited(g.node_count(), false);
    const Point goal = g.node(r.hops.back()).position;
    std::vector<Step> steps;
    for (std::size_t i = 0; i + 1 < r.hops.size(); ++i) {
        const NodeId cur = r.hops[i];
        visited[cur] = true;
        Step s;
        for (const auto& nb : g.neighbors(cur)) {
            if (visited[nb.id]) continue;
            s.drp_candidates.push_back(nb.id);
            if (nb.id == r.hops.back() ||
                in_quadrant(g.node(cur).position, goal, g.node(nb.id).position))
                s.srp_candidates.push_back(nb.id);
        }
        steps.push_back(s);
    }
    return steps;
}

}  // namespace

TEST_CASE("crp: source equals target gives an empty route") {
    NetworkGraph g(nodes_at({{0, 0}, {1, 0}}));
    const auto out = crp(g, 0, 0);
    REQUIRE(out.ok());
    CHECK(out.route().hops == std::vector<NodeId>{0});
    CHECK(out.route().hop_count() == 0);
    CHECK(out.route().e2e_ber == 0.0);
}

TEST_CASE("crp: triangle prefers two good hops under ExactLog") {
    NetworkGraph g(nodes_at({{0, 0}, {2, 0}, {1, 1}}));
    g.add_edge(0, 1, LinkQuality::from_ber(0.3));
    g.add_edge(0, 2, LinkQuality::from_ber(0.05));
    g.add_edge(2, 1, LinkQuality::from_ber(0.05));
    const auto out = crp(g, 0, 1, WeightMode::ExactLog);
    REQUIRE(out.ok());
    CHECK(out.route().hops == std::vector<NodeId>{0, 2, 1});
    CHECK(out.route().e2e_ber == doctest::Approx(0.095).epsilon(1e-14));
    const auto paper = crp(g, 0, 1, WeightMode::PaperSum);
    REQUIRE(paper.ok());
    CHECK(paper.route().hops == std::vector<NodeId>{0, 2, 1});
}

TEST_CASE("crp: PaperSum and ExactLog can disagree") {
    // Sum 0.2+0.2 = 0.4 > 0.38, but the two-hop E2E BER 0.32 < 0.38.
    NetworkGraph g(nodes_at({{0, 0}, {2, 0}, {1, 1}}));
    g.add_edge(0, 1, LinkQuality::from_ber(0.38));
    g.add_edge(0, 2, LinkQuality::from_ber(0.2));
    g.add_edge(2, 1, LinkQuality::from_ber(0.2));
    CHECK(crp(g, 0, 1, WeightMode::PaperSum).route().hops == std::vector<NodeId>{0, 1});
    CHECK(crp(g, 0, 1, WeightMode::ExactLog).route().hops == std::vector<NodeId>{0, 2, 1});
}

TEST_CASE("crp: disconnected and chance-level links") {
    NetworkGraph g(nodes_at({{0, 0}, {1, 0}, {2, 0}}));
    g.add_edge(0, 2, LinkQuality::from_ber(0.1));
    const auto out = crp(g, 0, 1);
    REQUIRE_FALSE(out.ok());
    CHECK(out.failure_reason() == FailureReason::Disconnected);

    NetworkGraph h(nodes_at({{0, 0}, {1, 0}}));
    h.add_edge(0, 1, LinkQuality::from_ber(0.5));
    CHECK_FALSE(crp(h, 0, 1, WeightMode::ExactLog).ok());
    CHECK(crp(h, 0, 1, WeightMode::PaperSum).ok());
}

TEST_CASE("crp: evaluations count every adjacency entry of settled nodes") {
    // Path 0-2-1: degrees 1, 2, 1, all nodes settled.
    NetworkGraph g(nodes_at({{0, 0}, {2, 0}, {1, 0}}));
    g.add_edge(0, 2, LinkQuality::from_ber(0.1));
    g.add_edge(2, 1, LinkQuality::from_ber(0.1));
    CHECK(crp(g, 0, 1).evaluations() == 4);
}

TEST_CASE("crp: equal-cost ties resolve towards the lower id") {
    NetworkGraph g(nodes_at({{0, 0}, {2, 0}, {1, 1}, {1, -1}}));
    g.add_edge(0, 3, LinkQuality::from_ber(0.1));
    g.add_edge(3, 1, LinkQuality::from_ber(0.1));
    g.add_edge(0, 2, LinkQuality::from_ber(0.1));
    g.add_edge(2, 1, LinkQuality::from_ber(0.1));
    for (auto mode : {WeightMode::ExactLog, WeightMode::PaperSum})
        CHECK(crp(g, 0, 1, mode).route().hops == std::vector<NodeId>{0, 2, 1});
}

TEST_CASE("crp: unknown endpoints") {
    NetworkGraph g(nodes_at({{0, 0}, {1, 0}}));
    CHECK_THROWS_AS(crp(g, 0, 5), DomainError);
    CHECK_THROWS_AS(drp(g, 5, 0), DomainError);
    CHECK_THROWS_AS(srp(g, 0, 5), DomainError);
}

TEST_CASE("property: crp matches brute-force simple path enumeration") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng.next() % 7;
        const auto g = testing::random_connected_graph(rng, n, 0.5);
        const auto best = oracle::brute_force_optimum(g, 0, 1);
        const auto exact = crp(g, 0, 1, WeightMode::ExactLog);
        const auto paper = crp(g, 0, 1, WeightMode::PaperSum);
        REQUIRE(exact.ok());
        REQUIRE(paper.ok());
        CHECK_FALSE(check_route(g, exact.route(), 0, 1));
        CHECK_FALSE(check_route(g, paper.route(), 0, 1));
        CHECK(rel(exact.route().e2e_ber, best.min_parity_ber) <= 1e-12);
        double sum = 0.0;
        for (double p : paper.route().hop_bers) sum += p;
        CHECK(rel(sum, best.min_ber_sum) <= 1e-12);
    }
}

TEST_CASE("drp: direct neighbour") {
    NetworkGraph g(nodes_at({{0, 0}, {1, 0}}));
    g.add_edge(0, 1, LinkQuality::from_ber(0.4));
    const auto out = drp(g, 0, 1);
    REQUIRE(out.ok());
    CHECK(out.route().hops == std::vector<NodeId>{0, 1});
    CHECK(out.route().evaluations == 1);
}

TEST_CASE("drp: path S-A-T") {
    // Node 0 = S, 1 = T, 2 = A. Unvisited neighbours: S sees {A}, A sees {T}.
    NetworkGraph g(nodes_at({{0, 0}, {2, 0}, {1, 0}}));
    g.add_edge(0, 2, LinkQuality::from_ber(0.1));
    g.add_edge(2, 1, LinkQuality::from_ber(0.1));
    const auto out = drp(g, 0, 1);
    REQUIRE(out.ok());
    CHECK(out.route().hops == std::vector<NodeId>{0, 2, 1});
    CHECK(out.route().evaluations == 2);
}

TEST_CASE("drp: dead end") {
    NetworkGraph g(nodes_at({{0, 0}, {5, 0}, {1, 0}}));
    g.add_edge(0, 2, LinkQuality::from_ber(0.1));
    const auto out = drp(g, 0, 1);
    REQUIRE_FALSE(out.ok());
    CHECK(out.failure_reason() == FailureReason::DeadEnd);
    CHECK(out.evaluations() == 1);
}

TEST_CASE("drp: chooses the lowest BER, lowest id on ties") {
    NetworkGraph g(nodes_at({{0, 0}, {9, 0}, {1, 0}, {1, 1}, {1, -1}}));
    g.add_edge(0, 2, LinkQuality::from_ber(0.2));
    g.add_edge(0, 3, LinkQuality::from_ber(0.1));
    g.add_edge(0, 4, LinkQuality::from_ber(0.1));
    g.add_edge(3, 1, LinkQuality::from_ber(0.3));
    g.add_edge(4, 1, LinkQuality::from_ber(0.3));
    const auto out = drp(g, 0, 1);
    REQUIRE(out.ok());
    CHECK(out.route().hops == std::vector<NodeId>{0, 3, 1});
}

TEST_CASE("drp: greedy walk need not take the best path") {
    NetworkGraph g(nodes_at({{0, 0}, {3, 0}, {1, 0}, {2, 0}}));
    g.add_edge(0, 1, LinkQuality::from_ber(0.05));
    g.add_edge(0, 2, LinkQuality::from_ber(0.01));
    g.add_edge(2, 1, LinkQuality::from_ber(0.45));
    const auto out = drp(g, 0, 1);
    REQUIRE(out.ok());
    CHECK(out.route().hops == std::vector<NodeId>{0, 2, 1});
    CHECK(crp(g, 0, 1).route().hops == std::vector<NodeId>{0, 1});
}

TEST_CASE("srp: target as the only in-quadrant neighbour") {
    NetworkGraph g(nodes_at({{0, 0}, {10, 10}, {-5, 3}}));
    g.add_edge(0, 1, LinkQuality::from_ber(0.3));
    g.add_edge(0, 2, LinkQuality::from_ber(0.01));
    const auto out = srp(g, 0, 1);
    REQUIRE(out.ok());
    CHECK(out.route().hops == std::vector<NodeId>{0, 1});
    CHECK(out.route().evaluations == 1);
}

TEST_CASE("srp: quadrant excludes a better neighbour") {
    NetworkGraph g(nodes_at({{0, 0}, {10, 10}, {5, 5}, {-5, 5}}));
    g.add_edge(0, 2, LinkQuality::from_ber(0.2));
    g.add_edge(0, 3, LinkQuality::from_ber(0.01));
    g.add_edge(2, 1, LinkQuality::from_ber(0.2));
    g.add_edge(3, 1, LinkQuality::from_ber(0.2));
    const auto out = srp(g, 0, 1);
    REQUIRE(out.ok());
    CHECK(out.route().hops == std::vector<NodeId>{0, 2, 1});
    CHECK(drp(g, 0, 1).route().hops == std::vector<NodeId>{0, 3, 1});
}

TEST_CASE("srp: every neighbour behind the node") {
    NetworkGraph g(nodes_at({{0, 0}, {10, 10}, {-3, -4}, {-1, -8}}));
    g.add_edge(0, 2, LinkQuality::from_ber(0.1));
    g.add_edge(0, 3, LinkQuality::from_ber(0.1));
    const auto out = srp(g, 0, 1);
    REQUIRE_FALSE(out.ok());
    CHECK(out.failure_reason() == FailureReason::EmptyQuadrant);
    CHECK(out.evaluations() == 0);
}

TEST_CASE("srp: fallback widens an empty quadrant") {
    NetworkGraph g(nodes_at({{0, 0}, {10, 10}, {-3, 4}}));
    g.add_edge(0, 2, LinkQuality::from_ber(0.1));
    g.add_edge(2, 1, LinkQuality::from_ber(0.1));
    CHECK_FALSE(srp(g, 0, 1).ok());
    const auto out = srp(g, 0, 1, SrpOptions{true});
    REQUIRE(out.ok());
    CHECK(out.route().hops == std::vector<NodeId>{0, 2, 1});
}

TEST_CASE("srp: isolated source reports an empty quadrant") {
    NetworkGraph g(nodes_at({{0, 0}, {10, 10}}));
    const auto out = srp(g, 0, 1, SrpOptions{true});
    REQUIRE_FALSE(out.ok());
    CHECK(out.failure_reason() == FailureReason::EmptyQuadrant);
}

TEST_CASE("quadrant_filter examples") {
    const auto keep = [](Point c, Point t, Point q) {
        const topology::Node n{7, q, topology::NodeRole::Relay};
        return quadrant_filter(c, t, std::span(&n, 1)).size() == 1;
    };
    CHECK(keep({0, 0}, {10, 10}, {3, 7}));
    CHECK_FALSE(keep({0, 0}, {10, 10}, {-1, 7}));
    CHECK(keep({0, 0}, {10, 0}, {5, -3}));
    CHECK_FALSE(keep({0, 0}, {10, 0}, {-5, -3}));
    CHECK(keep({0, 0}, {10, 10}, {0, 4}));    // closed boundary
    CHECK(keep({0, 0}, {0, -10}, {-8, -1}));  // x unconstrained
    CHECK_FALSE(keep({0, 0}, {0, -10}, {-8, 1}));
    CHECK(keep({0, 0}, {10, 10}, {10, 10}));  // the target itself
}

TEST_CASE("property: greedy step and subset invariants") {
    Rng rng(99);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = testing::random_graph(rng, 12, 0.35);
        for (bool sectorized : {false, true}) {
            const auto out = sectorized ? srp(g, 0, 1) : drp(g, 0, 1);
            if (!out.ok()) continue;
            const auto& r = out.route();
            REQUIRE_FALSE(check_route(g, r, 0, 1));
            CHECK(r.hop_count() <= g.node_count() - 1);
            const auto steps = replay(g, r);
            std::uint64_t expected_evals = 0;
            for (std::size_t i = 0; i < steps.size(); ++i) {
                const auto& s = steps[i];
                const auto& cands = sectorized ? s.srp_candidates : s.drp_candidates;
                expected_evals += cands.size();
                for (NodeId id : s.srp_candidates)
                    CHECK(std::find(s.drp_candidates.begin(), s.drp_candidates.end(), id) !=
                          s.drp_candidates.end());
                CHECK(s.srp_candidates.size() <= s.drp_candidates.size());
                const NodeId chosen = r.hops[i + 1];
                REQUIRE(std::find(cands.begin(), cands.end(), chosen) != cands.end());
                const double chosen_ber = g.quality(r.hops[i], chosen)->ber;
                for (NodeId other : cands) {
                    const double b = g.quality(r.hops[i], other)->ber;
                    CHECK(chosen_ber <= b);
                    if (b == chosen_ber) CHECK(chosen <= other);
                }
            }
            CHECK(r.evaluations == expected_evals);
            ++checked;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("property: routing is deterministic and terminates") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = testing::random_graph(rng, 15, 0.3);
        for (auto p : {Protocol::CRP, Protocol::DRP, Protocol::SRP}) {
            const auto a = run_protocol(p, g, 0, 1);
            const auto b = run_protocol(p, g, 0, 1);
            CHECK(a == b);
            if (a.ok()) CHECK(a.route().hop_count() <= g.node_count() - 1);
        }
    }
}

TEST_CASE("check_route catches broken routes") {
    NetworkGraph g(nodes_at({{0, 0}, {2, 0}, {1, 0}}));
    g.add_edge(0, 2, LinkQuality::from_ber(0.1, 1.0));
    g.add_edge(2, 1, LinkQuality::from_ber(0.2, 1.0));
    auto r = crp(g, 0, 1).route();
    CHECK_FALSE(check_route(g, r, 0, 1));
    auto bad = r;
    bad.e2e_ber += 1e-6;
    CHECK(check_route(g, bad, 0, 1));
    bad = r;
    bad.hops = {0, 1, 1};
    CHECK(check_route(g, bad, 0, 1));
    bad = r;
    bad.hop_bers[0] = 0.3;
    CHECK(check_route(g, bad, 0, 1));
    CHECK(check_route(g, r, 0, 2));
}

TEST_CASE("route dump format") {
    NetworkGraph g(nodes_at({{0, 0}, {1, 0}}));
    g.add_edge(0, 1, LinkQuality::from_ber(0.25, 1.0));
    std::ostringstream out;
    write_route_dump(out, Protocol::DRP, g, drp(g, 0, 1));
    CHECK(out.str() ==
          "drp 0 0 0.00000000e+00 0.00000000e+00 2.50000000e-01\n"
          "drp 1 1 1.00000000e+00 0.00000000e+00 -\n"
          "drp total 2.50000000e-01 1.00000000e+00 1\n");
    std::ostringstream fail;
    write_route_dump(fail, Protocol::CRP, NetworkGraph(nodes_at({{0, 0}, {1, 0}})),
                     RoutingFailure{FailureReason::Disconnected, 0});
    CHECK(fail.str() == "crp failed Disconnected 0\n");
}

TEST_CASE("names round-trip") {
    for (auto p : {Protocol::CRP, Protocol::DRP, Protocol::SRP})
        CHECK(parse_protocol(to_string(p)) == p);
    for (auto m : {WeightMode::PaperSum, WeightMode::ExactLog})
        CHECK(parse_weight_mode(to_string(m)) == m);
    CHECK_FALSE(parse_protocol("ospf"));
}
