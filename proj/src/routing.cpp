#include "uowsn/routing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>

#include "uowsn/format.hpp"

namespace uowsn::routing {

using topology::Neighbor;
using topology::Node;
using topology::Point;

std::string_view to_string(WeightMode mode) {
    return mode == WeightMode::PaperSum ? "paper" : "exact";
}

std::string_view to_string(Protocol protocol) {
    switch (protocol) {
        case Protocol::CRP: return "crp";
        case Protocol::DRP: return "drp";
        case Protocol::SRP: return "srp";
    }
    return "unknown";
}

std::string_view to_string(FailureReason reason) {
    switch (reason) {
        case FailureReason::DeadEnd: return "DeadEnd";
        case FailureReason::EmptyQuadrant: return "EmptyQuadrant";
        case FailureReason::Disconnected: return "Disconnected";
        case FailureReason::HopLimit: return "HopLimit";
    }
    return "unknown";
}

std::optional<WeightMode> parse_weight_mode(std::string_view name) {
    if (name == "paper") return WeightMode::PaperSum;
    if (name == "exact") return WeightMode::ExactLog;
    return std::nullopt;
}

std::optional<Protocol> parse_protocol(std::string_view name) {
    if (name == "crp") return Protocol::CRP;
    if (name == "drp") return Protocol::DRP;
    if (name == "srp") return Protocol::SRP;
    return std::nullopt;
}

double Route::total_distance() const {
    return std::accumulate(hop_distances.begin(), hop_distances.end(), 0.0);
}

std::uint64_t RoutingOutcome::evaluations() const {
    return ok() ? route().evaluations : std::get<RoutingFailure>(value_).evaluations;
}

bool operator==(const Route& a, const Route& b) {
    return a.hops == b.hops && a.hop_bers == b.hop_bers && a.hop_distances == b.hop_distances &&
           a.e2e_ber == b.e2e_ber && a.evaluations == b.evaluations;
}

bool operator==(const RoutingOutcome& a, const RoutingOutcome& b) {
    if (a.ok() != b.ok()) return false;
    if (a.ok()) return a.route() == b.route();
    return a.failure_reason() == b.failure_reason() && a.evaluations() == b.evaluations();
}

namespace {

void require_ids(const NetworkGraph& graph, NodeId source, NodeId target) {
    if (!graph.contains(source) || !graph.contains(target))
        throw DomainError("routing endpoint is not a node of the graph");
}

/// Fills hop_bers, hop_distances and e2e_ber from the node sequence.
Route make_route(const NetworkGraph& graph, std::vector<NodeId> hops, std::uint64_t evaluations) {
    Route r;
    r.hops = std::move(hops);
    r.evaluations = evaluations;
    for (std::size_t i = 1; i < r.hops.size(); ++i) {
        const auto q = graph.quality(r.hops[i - 1], r.hops[i]);
        r.hop_bers.push_back(q->ber);
        r.hop_distances.push_back(q->distance);
    }
    r.e2e_ber = channel::e2e_ber(r.hop_bers);
    return r;
}

bool quadrant_accepts(Point current, Point target, Point candidate) {
    const double tx = target.x - current.x;
    const double ty = target.y - current.y;
    const bool x_ok = tx == 0.0 || (candidate.x - current.x) * tx >= 0.0;
    const bool y_ok = ty == 0.0 || (candidate.y - current.y) * ty >= 0.0;
    return x_ok && y_ok;
}

/// Shared greedy walk. `restrict` narrows the unvisited neighbours of the
/// current node; an empty restricted set fails with `empty_reason`.
RoutingOutcome greedy_walk(const NetworkGraph& graph, NodeId source, NodeId target,
                           const std::function<bool(NodeId current, const Neighbor&)>& restrict,
                           FailureReason empty_reason, bool widen_when_empty) {
    require_ids(graph, source, target);
    if (source == target) return make_route(graph, {source}, 0);

    const std::size_t n = graph.node_count();
    std::vector<bool> visited(n, false);
    visited[source] = true;
    std::vector<NodeId> path{source};
    std::uint64_t evaluations = 0;
    NodeId current = source;

    for (std::size_t hop = 0; hop + 1 < n; ++hop) {
        const Neighbor* best = nullptr;
        std::size_t unvisited = 0;
        auto consider = [&](const Neighbor& cand) {
            ++evaluations;
            if (best == nullptr || cand.quality.ber < best->quality.ber) best = &cand;
        };
        for (const auto& cand : graph.neighbors(current)) {
            if (visited[cand.id]) continue;
            ++unvisited;
            if (restrict(current, cand)) consider(cand);
        }
        if (best == nullptr && unvisited > 0 && widen_when_empty) {
            for (const auto& cand : graph.neighbors(current))
                if (!visited[cand.id]) consider(cand);
        }
        if (best == nullptr) {
            return RoutingFailure{empty_reason, evaluations};
        }
        current = best->id;
        visited[current] = true;
        path.push_back(current);
        if (current == target) return make_route(graph, std::move(path), evaluations);
    }
    return RoutingFailure{FailureReason::HopLimit, evaluations};
}

}  // namespace

RoutingOutcome crp(const NetworkGraph& graph, NodeId source, NodeId target, WeightMode mode) {
    require_ids(graph, source, target);
    if (source == target) return make_route(graph, {source}, 0);

    constexpr double kInf = std::numeric_limits<double>::infinity();
    constexpr NodeId kNone = std::numeric_limits<NodeId>::max();
    const std::size_t n = graph.node_count();
    std::vector<double> cost(n, kInf);
    std::vector<NodeId> prev(n, kNone);
    std::vector<bool> settled(n, false);

    using Entry = std::pair<double, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
    cost[source] = 0.0;
    frontier.emplace(0.0, source);
    std::uint64_t evaluations = 0;

    while (!frontier.empty()) {
        const auto [du, u] = frontier.top();
        frontier.pop();
        if (settled[u]) continue;
        settled[u] = true;
        for (const auto& nb : graph.neighbors(u)) {
            ++evaluations;
            if (settled[nb.id]) continue;
            double w;
            if (mode == WeightMode::PaperSum) {
                w = nb.quality.ber;
            } else {
                if (!(nb.quality.margin > 0.0)) continue;
                w = -std::log(nb.quality.margin);
            }
            const double candidate = du + w;
            if (candidate < cost[nb.id] || (candidate == cost[nb.id] && u < prev[nb.id])) {
                cost[nb.id] = candidate;
                prev[nb.id] = u;
                frontier.emplace(candidate, nb.id);
            }
        }
    }

    if (prev[target] == kNone) return RoutingFailure{FailureReason::Disconnected, evaluations};
    std::vector<NodeId> hops;
    for (NodeId v = target; v != kNone; v = prev[v]) hops.push_back(v);
    std::reverse(hops.begin(), hops.end());
    return make_route(graph, std::move(hops), evaluations);
}

RoutingOutcome drp(const NetworkGraph& graph, NodeId source, NodeId target) {
    return greedy_walk(graph, source, target,
                       [](NodeId, const Neighbor&) { return true; },
                       FailureReason::DeadEnd, false);
}

RoutingOutcome srp(const NetworkGraph& graph, NodeId source, NodeId target, SrpOptions options) {
    require_ids(graph, source, target);
    const Point goal = graph.node(target).position;
    return greedy_walk(
        graph, source, target,
        [&](NodeId current, const Neighbor& cand) {
            return cand.id == target ||
                   quadrant_accepts(graph.node(current).position, goal,
                                    graph.node(cand.id).position);
        },
        FailureReason::EmptyQuadrant, options.fallback_to_all_neighbors);
}

std::vector<Node> quadrant_filter(Point current, Point target, std::span<const Node> candidates) {
    std::vector<Node> kept;
    for (const auto& c : candidates) {
        if (c.position == target || quadrant_accepts(current, target, c.position))
            kept.push_back(c);
    }
    return kept;
}

RoutingOutcome run_protocol(Protocol protocol, const NetworkGraph& graph, NodeId source,
                            NodeId target, const ProtocolOptions& options) {
    switch (protocol) {
        case Protocol::CRP: return crp(graph, source, target, options.weight_mode);
        case Protocol::DRP: return drp(graph, source, target);
        case Protocol::SRP: return srp(graph, source, target, options.srp);
    }
    throw DomainError("unknown protocol");
}

std::optional<std::string> check_route(const NetworkGraph& graph, const Route& route,
                                       NodeId source, NodeId target, double tolerance) {
    if (route.hops.empty()) return "route has no nodes";
    if (route.hops.front() != source) return "route does not start at the source";
    if (route.hops.back() != target) return "route does not end at the target";
    if (route.hop_bers.size() + 1 != route.hops.size() ||
        route.hop_distances.size() != route.hop_bers.size())
        return "per-hop vectors do not match the node sequence";

    std::vector<bool> seen(graph.node_count(), false);
    for (NodeId id : route.hops) {
        if (!graph.contains(id)) return "route visits an unknown node";
        if (seen[id]) return "route visits node " + std::to_string(id) + " twice";
        seen[id] = true;
    }
    for (std::size_t i = 1; i < route.hops.size(); ++i) {
        const auto q = graph.quality(route.hops[i - 1], route.hops[i]);
        if (!q) return "hop " + std::to_string(i - 1) + " is not an edge";
        if (q->ber != route.hop_bers[i - 1]) return "hop BER differs from the edge BER";
        if (q->distance != route.hop_distances[i - 1])
            return "hop distance differs from the edge distance";
    }
    const double folded = channel::e2e_ber(route.hop_bers);
    const double scale = std::max(std::abs(folded), std::numeric_limits<double>::min());
    if (std::abs(folded - route.e2e_ber) > tolerance * scale)
        return "e2e_ber is inconsistent with the hop BERs";
    return std::nullopt;
}

void write_route_dump(std::ostream& out, Protocol protocol, const NetworkGraph& graph,
                      const RoutingOutcome& outcome) {
    const auto name = to_string(protocol);
    if (!outcome.ok()) {
        out << name << " failed " << to_string(outcome.failure_reason()) << ' '
            << outcome.evaluations() << '\n';
        return;
    }
    const auto& route = outcome.route();
    for (std::size_t i = 0; i < route.hops.size(); ++i) {
        const auto& node = graph.node(route.hops[i]);
        out << name << ' ' << i << ' ' << node.id << ' ' << format_sci(node.position.x) << ' '
            << format_sci(node.position.y) << ' '
            << (i < route.hop_bers.size() ? format_sci(route.hop_bers[i]) : std::string("-"))
            << '\n';
    }
    out << name << " total " << format_sci(route.e2e_ber) << ' '
        << format_sci(route.total_distance()) << ' ' << route.evaluations << '\n';
}

}  // namespace uowsn::routing
