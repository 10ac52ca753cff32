#include "uowsn/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <ostream>
#include <string>

#include "uowsn/format.hpp"
#include "uowsn/random.hpp"

namespace uowsn::topology {

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

std::string_view to_string(NodeRole role) {
    switch (role) {
        case NodeRole::Source: return "source";
        case NodeRole::Target: return "target";
        case NodeRole::Relay: return "relay";
    }
    return "unknown";
}

LinkQuality LinkQuality::from_ber(double ber, double distance) {
    if (!(ber >= 0.0 && ber <= 0.5)) throw DomainError("link BER must be in [0, 0.5]");
    LinkQuality q;
    q.distance = distance;
    q.ber = ber;
    q.margin = 1.0 - 2.0 * ber;
    return q;
}

NetworkGraph::NetworkGraph(std::vector<Node> nodes)
    : nodes_(std::move(nodes)), adjacency_(nodes_.size()) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].id != i) throw DomainError("node ids must be 0..N-1 in order");
    }
}

const Node& NetworkGraph::node(NodeId id) const {
    if (!contains(id)) throw DomainError("unknown node id " + std::to_string(id));
    return nodes_[id];
}

std::span<const Neighbor> NetworkGraph::neighbors(NodeId id) const {
    if (!contains(id)) throw DomainError("unknown node id " + std::to_string(id));
    return adjacency_[id];
}

namespace {

auto find_neighbor(const std::vector<Neighbor>& list, NodeId id) {
    return std::lower_bound(list.begin(), list.end(), id,
                            [](const Neighbor& n, NodeId key) { return n.id < key; });
}

}  // namespace

void NetworkGraph::add_edge(NodeId u, NodeId v, const LinkQuality& quality) {
    if (!contains(u) || !contains(v)) throw DomainError("edge endpoint is not a node");
    if (u == v) throw DomainError("self-edges are not allowed");
    auto& lu = adjacency_[u];
    auto& lv = adjacency_[v];
    auto iu = find_neighbor(lu, v);
    if (iu != lu.end() && iu->id == v) throw DomainError("duplicate edge");
    lu.insert(iu, Neighbor{v, quality});
    lv.insert(find_neighbor(lv, u), Neighbor{u, quality});
    ++edge_count_;
    if (quality.coincident) ++coincident_pairs_;
    if (quality.ber_clamped) ++clamped_links_;
}

std::optional<LinkQuality> NetworkGraph::quality(NodeId u, NodeId v) const {
    if (!contains(u) || !contains(v)) throw DomainError("unknown node id");
    const auto& lu = adjacency_[u];
    auto it = find_neighbor(lu, v);
    if (it == lu.end() || it->id != v) return std::nullopt;
    return it->quality;
}

std::vector<Edge> NetworkGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < nodes_.size(); ++u) {
        for (const auto& n : adjacency_[u]) {
            if (u < n.id) out.push_back(Edge{u, n.id, n.quality});
        }
    }
    return out;
}

std::optional<NodeId> NetworkGraph::source() const {
    for (const auto& n : nodes_)
        if (n.role == NodeRole::Source) return n.id;
    return std::nullopt;
}

std::optional<NodeId> NetworkGraph::target() const {
    for (const auto& n : nodes_)
        if (n.role == NodeRole::Target) return n.id;
    return std::nullopt;
}

void DeploymentSpec::validate() const {
    if (!(area_width > 0.0) || !(area_height > 0.0))
        throw ConfigError("deployment area dimensions must be positive");
    if (node_count < 2) throw ConfigError("node_count must be at least 2");
    auto inside = [&](Point p) {
        return p.x >= 0.0 && p.x <= area_width && p.y >= 0.0 && p.y <= area_height;
    };
    if (!inside(source_pos)) throw ConfigError("source position lies outside the area");
    if (!inside(target_pos)) throw ConfigError("target position lies outside the area");
}

std::vector<Node> generate_deployment(const DeploymentSpec& spec, std::uint64_t seed) {
    spec.validate();
    std::vector<Node> nodes;
    nodes.reserve(spec.node_count);
    nodes.push_back(Node{0, spec.source_pos, NodeRole::Source});
    nodes.push_back(Node{1, spec.target_pos, NodeRole::Target});
    Rng rng(seed);
    for (std::size_t i = 2; i < spec.node_count; ++i) {
        const double x = rng.uniform(0.0, spec.area_width);
        const double y = rng.uniform(0.0, spec.area_height);
        nodes.push_back(Node{static_cast<NodeId>(i), Point{x, y}, NodeRole::Relay});
    }
    return nodes;
}

NetworkGraph build_graph(std::vector<Node> nodes, double range,
                         const channel::ChannelParams& channel,
                         const channel::ReceiverNoise& noise,
                         const channel::PhysicalConstants& constants) {
    if (!(range > 0.0)) throw DomainError("transmission range must be positive");
    channel.validate();
    noise.validate();
    constants.validate();

    NetworkGraph graph(std::move(nodes));
    const auto& all = graph.nodes();
    for (std::size_t u = 0; u < all.size(); ++u) {
        for (std::size_t v = u + 1; v < all.size(); ++v) {
            const double d = distance(all[u].position, all[v].position);
            if (d > range) continue;
            LinkQuality q;
            if (d == 0.0) {
                q.distance = kCoincidentDistance;
                q.received_power = channel::received_power_los(channel, kCoincidentDistance);
                q.ber = 0.0;
                q.margin = 1.0;
                q.coincident = true;
            } else {
                q.distance = d;
                q.received_power = channel::received_power_los(channel, d);
                const auto err = channel::link_error(q.received_power, noise, channel, constants);
                q.ber = err.ber;
                q.margin = err.margin;
                q.ber_clamped = err.clamped;
            }
            graph.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v), q);
        }
    }
    return graph;
}

bool path_exists(const NetworkGraph& graph, NodeId source, NodeId target) {
    if (!graph.contains(source) || !graph.contains(target))
        throw DomainError("unknown node id");
    if (source == target) return true;
    std::vector<bool> seen(graph.node_count(), false);
    std::deque<NodeId> frontier{source};
    seen[source] = true;
    while (!frontier.empty()) {
        const NodeId u = frontier.front();
        frontier.pop_front();
        for (const auto& n : graph.neighbors(u)) {
            if (seen[n.id]) continue;
            if (n.id == target) return true;
            seen[n.id] = true;
            frontier.push_back(n.id);
        }
    }
    return false;
}

void write_graph_dump(std::ostream& out, const NetworkGraph& graph) {
    for (const auto& n : graph.nodes()) {
        out << "node " << n.id << ' ' << format_sci(n.position.x) << ' '
            << format_sci(n.position.y) << ' ' << to_string(n.role) << '\n';
    }
    for (const auto& e : graph.edges()) {
        out << "edge " << e.u << ' ' << e.v << ' ' << format_sci(e.quality.distance) << ' '
            << format_sci(e.quality.received_power) << ' ' << format_sci(e.quality.ber) << '\n';
    }
}

}  // namespace uowsn::topology
