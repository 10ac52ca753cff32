#ifndef UOWSN_TOPOLOGY_HPP
#define UOWSN_TOPOLOGY_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "uowsn/channel.hpp"

namespace uowsn::topology {

using NodeId = std::uint32_t;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

double distance(Point a, Point b);

enum class NodeRole { Source, Target, Relay };

std::string_view to_string(NodeRole role);

struct Node {
    NodeId id = 0;
    Point position;
    NodeRole role = NodeRole::Relay;

    friend bool operator==(const Node&, const Node&) = default;
};

/// Separation used for coincident nodes, where the link budget is singular.
inline constexpr double kCoincidentDistance = 1e-6;

struct LinkQuality {
    double distance = 0.0;
    double received_power = 0.0;
    double ber = 0.5;
    /// 1 - 2*ber, computed without cancellation (see channel::LinkError).
    double margin = 0.0;
    bool ber_clamped = false;
    bool coincident = false;

    /// Quality record built from a bare BER, for synthetic graphs.
    static LinkQuality from_ber(double ber, double distance = 1.0);

    friend bool operator==(const LinkQuality&, const LinkQuality&) = default;
};

struct Neighbor {
    NodeId id = 0;
    LinkQuality quality;
};

struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    LinkQuality quality;
};

/// Undirected graph over deployed nodes. Adjacency lists are kept sorted by
/// neighbour id so every traversal visits neighbours in a fixed order.
class NetworkGraph {
public:
    NetworkGraph() = default;
    explicit NetworkGraph(std::vector<Node> nodes);

    /// Throws DomainError on self-edges, unknown ids, or duplicate edges.
    void add_edge(NodeId u, NodeId v, const LinkQuality& quality);

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node(NodeId id) const;
    std::span<const Neighbor> neighbors(NodeId id) const;
    std::optional<LinkQuality> quality(NodeId u, NodeId v) const;
    bool contains(NodeId id) const { return id < nodes_.size(); }

    /// Every edge once, with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    std::size_t coincident_pairs() const { return coincident_pairs_; }
    std::size_t clamped_links() const { return clamped_links_; }

    std::optional<NodeId> source() const;
    std::optional<NodeId> target() const;

private:
    std::vector<Node> nodes_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::size_t edge_count_ = 0;
    std::size_t coincident_pairs_ = 0;
    std::size_t clamped_links_ = 0;
};

struct DeploymentSpec {
    double area_width = 250.0;
    double area_height = 250.0;
    std::size_t node_count = 40;
    Point source_pos{52.5, 125.0};
    Point target_pos{197.5, 125.0};

    /// Throws ConfigError.
    void validate() const;
};

/// Node 0 is the source, node 1 the target, nodes 2..N-1 are relays drawn
/// uniformly over the area from a generator seeded with `seed`.
std::vector<Node> generate_deployment(const DeploymentSpec& spec, std::uint64_t seed);

/// Connects every pair within `range` metres with its channel quality.
NetworkGraph build_graph(std::vector<Node> nodes, double range,
                         const channel::ChannelParams& channel,
                         const channel::ReceiverNoise& noise,
                         const channel::PhysicalConstants& constants);

bool path_exists(const NetworkGraph& graph, NodeId source, NodeId target);

/// `node id x y role` and `edge u v dist_m p_rx_w ber` lines.
void write_graph_dump(std::ostream& out, const NetworkGraph& graph);

}  // namespace uowsn::topology

#endif  // UOWSN_TOPOLOGY_HPP
