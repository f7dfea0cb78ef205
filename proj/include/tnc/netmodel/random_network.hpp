#pragma once

#include <cstdint>

#include "tnc/netmodel/network.hpp"

namespace tnc::netmodel {

struct RandomNetworkParams {
    std::size_t nodes = 8;
    std::size_t sources = 2;
    std::size_t sinks = 2;
    std::size_t max_processes = 2;
    std::size_t max_outputs = 2;
    double edge_probability = 0.35;
    std::uint32_t max_delay = 1;
    /// Cap on the spread between longest and shortest source-sink path after
    /// normalization; edges are rejected while building to respect it.
    long max_spread = 4;
};

/// Random DAG on nodes n0..n{k-1} with edges only from lower to higher
/// indices. Sources sit on the first nodes, sinks on the last, and every sink
/// is reachable from every source. Each sink demands every process, so the
/// result is a multicast instance.
Network random_network(const RandomNetworkParams& params, std::uint64_t seed);

}  // namespace tnc::netmodel
