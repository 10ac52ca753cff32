#pragma once

#include <cstdint>
#include <vector>

#include "uowsn/random.hpp"
#include "uowsn/topology.hpp"

namespace uowsn::testing {

/// Nodes on the given points; node 0 is the source, node 1 the target.
inline std::vector<topology::Node> nodes_at(const std::vector<topology::Point>& points) {
    std::vector<topology::Node> nodes;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto role = i == 0   ? topology::NodeRole::Source
                          : i == 1 ? topology::NodeRole::Target
                                   : topology::NodeRole::Relay;
        nodes.push_back({static_cast<topology::NodeId>(i), points[i], role});
    }
    return nodes;
}

/// Random graph on `n` nodes in the unit square: every pair is linked with
/// probability `density`, with a BER uniform in [0, max_ber).
inline topology::NetworkGraph random_graph(Rng& rng, std::size_t n, double density,
                                           double max_ber = 0.5) {
    std::vector<topology::Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back({rng.uniform01(), rng.uniform01()});
    topology::NetworkGraph g(nodes_at(pts));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.uniform01() < density) {
                const double ber = rng.uniform(0.0, max_ber);
                g.add_edge(static_cast<topology::NodeId>(u), static_cast<topology::NodeId>(v),
                           topology::LinkQuality::from_ber(ber, rng.uniform(1.0, 80.0)));
            }
    return g;
}

/// Random graph in which node 0 reaches node 1, retrying as needed.
inline topology::NetworkGraph random_connected_graph(Rng& rng, std::size_t n, double density) {
    for (;;) {
        auto g = random_graph(rng, n, density);
        if (topology::path_exists(g, 0, 1)) return g;
    }
}

}  // namespace uowsn::testing
