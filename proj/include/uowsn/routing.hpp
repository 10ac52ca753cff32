#ifndef UOWSN_ROUTING_HPP
#define UOWSN_ROUTING_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "uowsn/topology.hpp"

namespace uowsn::routing {

using topology::NetworkGraph;
using topology::NodeId;

/// Edge weight used by the centralized protocol.
///  - PaperSum: w = P(e); path cost is the plain sum of link BERs.
///  - ExactLog: w = -ln(1 - 2 P(e)); path cost is monotone in the end-to-end
///    BER, so the shortest path is the minimum end-to-end BER path. Links with
///    P(e) >= 0.5 carry no information and are skipped.
enum class WeightMode { PaperSum, ExactLog };

enum class Protocol { CRP, DRP, SRP };

enum class FailureReason { DeadEnd, EmptyQuadrant, Disconnected, HopLimit };

std::string_view to_string(WeightMode mode);
std::string_view to_string(Protocol protocol);
std::string_view to_string(FailureReason reason);
std::optional<WeightMode> parse_weight_mode(std::string_view name);  // paper|exact
std::optional<Protocol> parse_protocol(std::string_view name);       // crp|drp|srp

struct Route {
    std::vector<NodeId> hops;            // source first, target last
    std::vector<double> hop_bers;        // one per traversed edge
    std::vector<double> hop_distances;   // metres, one per traversed edge
    double e2e_ber = 0.0;
    std::uint64_t evaluations = 0;

    std::size_t hop_count() const { return hop_bers.size(); }
    double total_distance() const;
};

struct RoutingFailure {
    FailureReason reason = FailureReason::Disconnected;
    std::uint64_t evaluations = 0;
};

class RoutingOutcome {
public:
    RoutingOutcome(Route route) : value_(std::move(route)) {}
    RoutingOutcome(RoutingFailure failure) : value_(failure) {}

    bool ok() const { return std::holds_alternative<Route>(value_); }
    explicit operator bool() const { return ok(); }

    /// Precondition: ok().
    const Route& route() const { return std::get<Route>(value_); }
    /// Precondition: !ok().
    FailureReason failure_reason() const { return std::get<RoutingFailure>(value_).reason; }

    std::uint64_t evaluations() const;

    friend bool operator==(const RoutingOutcome& a, const RoutingOutcome& b);

private:
    std::variant<Route, RoutingFailure> value_;
};

bool operator==(const Route& a, const Route& b);

struct SrpOptions {
    /// Widen an empty quadrant to all unvisited neighbours for that hop.
    bool fallback_to_all_neighbors = false;
};

/// Centralized routing: single-source Dijkstra from `source` over the whole
/// graph. `evaluations` counts every adjacency entry examined while settling
/// nodes. Equal-cost ties resolve towards the lower node id.
RoutingOutcome crp(const NetworkGraph& graph, NodeId source, NodeId target,
                   WeightMode mode = WeightMode::ExactLog);

/// Distributed greedy routing: from the current node, move to the unvisited
/// neighbour with the lowest link BER (lowest id on ties) until the target is
/// reached. Each candidate examined counts one evaluation.
RoutingOutcome drp(const NetworkGraph& graph, NodeId source, NodeId target);

/// Sectorized greedy routing: as drp, but candidates are first restricted to
/// the quadrant, relative to the current node, that contains the target.
RoutingOutcome srp(const NetworkGraph& graph, NodeId source, NodeId target,
                   SrpOptions options = {});

/// Keeps candidates lying in the closed quadrant that contains the target.
/// An axis on which target and current coincide imposes no constraint.
std::vector<topology::Node> quadrant_filter(topology::Point current, topology::Point target,
                                            std::span<const topology::Node> candidates);

struct ProtocolOptions {
    WeightMode weight_mode = WeightMode::ExactLog;
    SrpOptions srp;
};

RoutingOutcome run_protocol(Protocol protocol, const NetworkGraph& graph, NodeId source,
                            NodeId target, const ProtocolOptions& options = {});

/// Checks the structural invariants of `route` against `graph`: endpoints, no
/// repeated node, every hop an edge with matching BER and distance, and the
/// e2e_ber consistent with the fold of hop_bers to `tolerance` relative.
/// Returns a description of the first violation found.
std::optional<std::string> check_route(const NetworkGraph& graph, const Route& route,
                                       NodeId source, NodeId target,
                                       double tolerance = 1e-12);

/// Route overlay lines `protocol hop_index node_id x y ber_to_next`, then
/// `protocol total e2e_ber total_distance_m evaluations`. A failed outcome
/// produces a single `protocol failed reason evaluations` line.
void write_route_dump(std::ostream& out, Protocol protocol, const NetworkGraph& graph,
                      const RoutingOutcome& outcome);

}  // namespace uowsn::routing

#endif  // UOWSN_ROUTING_HPP
