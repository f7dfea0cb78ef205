#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tnc::netmodel {

/// Directed link (tail, head, index); parallel links differ by index.
struct Edge {
    std::string tail;
    std::string head;
    std::uint32_t index = 0;
    std::uint32_t delay = 1;
    bool operator==(const Edge&) const = default;
};

struct Source {
    std::string node;
    std::size_t processes = 1;
    bool operator==(const Source&) const = default;
};

/// A demand names (source index, process index).
using Demand = std::pair<std::size_t, std::size_t>;

struct Sink {
    std::string node;
    std::size_t outputs = 1;
    std::vector<Demand> demands;
    bool operator==(const Sink&) const = default;
};

/// Delayed acyclic network. Edge order matters: it fixes the layout of the
/// kernel matrices, so `canonicalize` is applied by every constructor path
/// (edges sorted by tail position, head position, index).
struct Network {
    std::vector<std::string> nodes;
    std::vector<Edge> edges;
    std::vector<Source> sources;
    std::vector<Sink> sinks;

    std::size_t mu() const;
    std::size_t nu() const;
    /// First row/column of source i's processes in the stacked input.
    std::size_t source_offset(std::size_t i) const;
    std::size_t sink_offset(std::size_t j) const;
    std::size_t node_position(const std::string& name) const;
    bool unit_delay() const;
    bool operator==(const Network&) const = default;
};

void canonicalize(Network& net);

/// Checks every structural invariant and returns a topological order of the
/// node names. Throws CycleDetected, DanglingDemand or InvalidNetwork.
std::vector<std::string> validate(const Network& net);

/// Unit-delay copy of a network: an edge of delay d becomes a chain of d unit
/// edges through d-1 dummy nodes. `chains[e]` lists the new edge positions
/// replacing original edge e, from tail to head.
struct NormalizedNetwork {
    Network net;
    std::vector<std::vector<std::size_t>> chains;
};

NormalizedNetwork normalize_delays(const Network& net);

/// Number of edge-disjoint paths from source i's node to sink j's node.
std::size_t min_cut(const Network& net, std::size_t source, std::size_t sink);

/// Smallest and largest total delay over all source-to-sink paths; both zero
/// when no sink is reachable from any source.
std::pair<long, long> path_delay_bounds(const Network& net);

}  // namespace tnc::netmodel
