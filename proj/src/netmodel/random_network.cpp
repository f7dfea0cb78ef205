#include "tnc/netmodel/random_network.hpp"

#include <random>
#include <string>

#include "tnc/error.hpp"

namespace tnc::netmodel {

namespace {

bool reachable(const Network& net, std::size_t from, std::size_t to) {
    std::vector<bool> seen(net.nodes.size(), false);
    std::vector<std::size_t> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        if (u == to) return true;
        for (const auto& e : net.edges)
            if (net.node_position(e.tail) == u) {
                const std::size_t v = net.node_position(e.head);
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
    }
    return false;
}

long spread(const Network& net) {
    auto [lo, hi] = path_delay_bounds(net);
    return hi - lo;
}

}  // namespace

Network random_network(const RandomNetworkParams& params, std::uint64_t seed) {
    if (params.nodes < params.sources + params.sinks || params.sources == 0 || params.sinks == 0)
        throw Error(Errc::InvalidArgument, "random network needs distinct source and sink nodes");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(params.edge_probability);
    std::uniform_int_distribution<std::uint32_t> delay(1, std::max<std::uint32_t>(1, params.max_delay));

    Network net;
    for (std::size_t v = 0; v < params.nodes; ++v) net.nodes.push_back("n" + std::to_string(v));
    for (std::size_t i = 0; i < params.sources; ++i)
        net.sources.push_back(Source{net.nodes[i], 1 + rng() % params.max_processes});
    for (std::size_t j = 0; j < params.sinks; ++j)
        net.sinks.push_back(Sink{net.nodes[params.nodes - params.sinks + j], 1 + rng() % params.max_outputs, {}});

    auto try_add = [&](Edge e) {
        net.edges.push_back(e);
        if (spread(net) > params.max_spread) {
            net.edges.pop_back();
            return false;
        }
        return true;
    };

    for (std::size_t u = 0; u < params.nodes; ++u)
        for (std::size_t v = u + 1; v < params.nodes; ++v) {
            if (!coin(rng)) continue;
            const std::uint32_t parallel = 1 + (rng() % 4 == 0 ? 1 : 0);
            for (std::uint32_t k = 0; k < parallel; ++k) try_add(Edge{net.nodes[u], net.nodes[v], k, delay(rng)});
        }

    // guarantee every sink hears every source, preferring a direct link
    for (std::size_t i = 0; i < params.sources; ++i)
        for (std::size_t j = 0; j < params.sinks; ++j) {
            const std::size_t s = net.node_position(net.sources[i].node);
            const std::size_t t = net.node_position(net.sinks[j].node);
            if (reachable(net, s, t)) continue;
            std::uint32_t idx = 0;
            for (const auto& e : net.edges)
                if (e.tail == net.nodes[s] && e.head == net.nodes[t]) idx = std::max(idx, e.index + 1);
            bool added = false;
            for (std::uint32_t d = 1; d <= std::max<std::uint32_t>(1, params.max_delay) && !added; ++d)
                added = try_add(Edge{net.nodes[s], net.nodes[t], idx, d});
            // a direct unit link that breaks the spread still has to go in;
            // retry the whole draw instead
            if (!added) return random_network(params, rng());
        }

    for (auto& snk : net.sinks)
        for (std::size_t i = 0; i < params.sources; ++i)
            for (std::size_t p = 0; p < net.sources[i].processes; ++p) snk.demands.emplace_back(i, p);
    canonicalize(net);
    validate(net);
    return net;
}

}  // namespace tnc::netmodel
