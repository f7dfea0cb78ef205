#include "tnc/netmodel/network.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "tnc/error.hpp"

namespace tnc::netmodel {

std::size_t Network::mu() const {
    std::size_t s = 0;
    for (const auto& src : sources) s += src.processes;
    return s;
}

std::size_t Network::nu() const {
    std::size_t s = 0;
    for (const auto& snk : sinks) s += snk.outputs;
    return s;
}

std::size_t Network::source_offset(std::size_t i) const {
    std::size_t s = 0;
    for (std::size_t k = 0; k < i; ++k) s += sources.at(k).processes;
    return s;
}

std::size_t Network::sink_offset(std::size_t j) const {
    std::size_t s = 0;
    for (std::size_t k = 0; k < j; ++k) s += sinks.at(k).outputs;
    return s;
}

std::size_t Network::node_position(const std::string& name) const {
    auto it = std::find(nodes.begin(), nodes.end(), name);
    if (it == nodes.end()) throw Error(Errc::InvalidNetwork, "unknown node '" + name + "'");
    return static_cast<std::size_t>(it - nodes.begin());
}

bool Network::unit_delay() const {
    return std::all_of(edges.begin(), edges.end(), [](const Edge& e) { return e.delay == 1; });
}

void canonicalize(Network& net) {
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < net.nodes.size(); ++i) pos.emplace(net.nodes[i], i);
    auto key = [&](const Edge& e) {
        auto t = pos.find(e.tail), h = pos.find(e.head);
        const std::size_t none = std::numeric_limits<std::size_t>::max();
        return std::tuple(t == pos.end() ? none : t->second, h == pos.end() ? none : h->second, e.index);
    };
    std::stable_sort(net.edges.begin(), net.edges.end(),
                     [&](const Edge& a, const Edge& b) { return key(a) < key(b); });
}

std::vector<std::string> validate(const Network& net) {
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < net.nodes.size(); ++i) {
        if (net.nodes[i].empty()) throw Error(Errc::InvalidNetwork, "empty node name");
        if (!pos.emplace(net.nodes[i], i).second)
            throw Error(Errc::InvalidNetwork, "duplicate node '" + net.nodes[i] + "'");
    }
    auto node = [&](const std::string& name, const std::string& what) {
        auto it = pos.find(name);
        if (it == pos.end()) throw Error(Errc::InvalidNetwork, what + " refers to unknown node '" + name + "'");
        return it->second;
    };

    std::set<std::tuple<std::size_t, std::size_t, std::uint32_t>> seen;
    std::vector<std::vector<std::size_t>> succ(net.nodes.size());
    std::vector<std::size_t> indeg(net.nodes.size(), 0);
    for (const auto& e : net.edges) {
        const std::size_t t = node(e.tail, "edge"), h = node(e.head, "edge");
        if (e.delay < 1) throw Error(Errc::InvalidNetwork, "edge " + e.tail + "->" + e.head + " has delay < 1");
        if (!seen.emplace(t, h, e.index).second)
            throw Error(Errc::InvalidNetwork, "duplicate edge " + e.tail + "->" + e.head + " index " +
                                                  std::to_string(e.index));
        succ[t].push_back(h);
        ++indeg[h];
    }

    // Kahn's algorithm, ties broken by node position for a stable order
    std::set<std::size_t> ready;
    for (std::size_t i = 0; i < indeg.size(); ++i)
        if (indeg[i] == 0) ready.insert(i);
    std::vector<std::string> order;
    while (!ready.empty()) {
        const std::size_t v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(net.nodes[v]);
        for (std::size_t w : succ[v])
            if (--indeg[w] == 0) ready.insert(w);
    }
    if (order.size() != net.nodes.size()) throw Error(Errc::CycleDetected, "network graph has a directed cycle");

    for (std::size_t i = 0; i < net.sources.size(); ++i) {
        node(net.sources[i].node, "source " + std::to_string(i));
        if (net.sources[i].processes == 0)
            throw Error(Errc::InvalidNetwork, "source " + std::to_string(i) + " has no processes");
    }
    for (std::size_t j = 0; j < net.sinks.size(); ++j) {
        const auto& s = net.sinks[j];
        node(s.node, "sink " + std::to_string(j));
        if (s.outputs == 0) throw Error(Errc::InvalidNetwork, "sink " + std::to_string(j) + " has no outputs");
        std::set<Demand> dup;
        for (const auto& [src, proc] : s.demands) {
            const std::string what = "sink " + std::to_string(j) + " demand (" + std::to_string(src) + ", " +
                                     std::to_string(proc) + ")";
            if (src >= net.sources.size() || proc >= net.sources[src].processes)
                throw Error(Errc::DanglingDemand, what + " names a missing source process");
            if (net.sources[src].node == s.node) throw Error(Errc::DanglingDemand, what + " is served by its own node");
            if (!dup.emplace(src, proc).second) throw Error(Errc::InvalidNetwork, what + " is repeated");
        }
    }
    return order;
}

NormalizedNetwork normalize_delays(const Network& net) {
    validate(net);
    NormalizedNetwork out;
    out.net.nodes = net.nodes;
    out.net.sources = net.sources;
    out.net.sinks = net.sinks;

    std::set<std::string> names(net.nodes.begin(), net.nodes.end());
    std::vector<std::vector<Edge>> chain_edges(net.edges.size());
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        const Edge& orig = net.edges[e];
        if (orig.delay == 1) {
            chain_edges[e].push_back(orig);
            continue;
        }
        std::string prev = orig.tail;
        for (std::uint32_t k = 1; k < orig.delay; ++k) {
            std::string dummy = orig.tail + "~" + orig.head + "~" + std::to_string(orig.index) + "~" + std::to_string(k);
            while (names.count(dummy)) dummy += "'";
            names.insert(dummy);
            out.net.nodes.push_back(dummy);
            chain_edges[e].push_back(Edge{prev, dummy, 0, 1});
            prev = dummy;
        }
        chain_edges[e].push_back(Edge{prev, orig.head, orig.index, 1});
    }
    for (const auto& c : chain_edges) out.net.edges.insert(out.net.edges.end(), c.begin(), c.end());
    canonicalize(out.net);

    out.chains.resize(net.edges.size());
    for (std::size_t e = 0; e < net.edges.size(); ++e)
        for (const Edge& ce : chain_edges[e]) {
            auto it = std::find(out.net.edges.begin(), out.net.edges.end(), ce);
            out.chains[e].push_back(static_cast<std::size_t>(it - out.net.edges.begin()));
        }
    return out;
}

std::size_t min_cut(const Network& net, std::size_t source, std::size_t sink) {
    const std::size_t s = net.node_position(net.sources.at(source).node);
    const std::size_t t = net.node_position(net.sinks.at(sink).node);
    if (s == t) throw Error(Errc::InvalidArgument, "min-cut between a node and itself");

    // Edmonds-Karp with unit capacities; residual graph kept as an edge list
    // where arc 2k is edge k and 2k+1 its reverse.
    const std::size_t V = net.nodes.size();
    std::vector<std::size_t> to, cap;
    std::vector<std::vector<std::size_t>> adj(V);
    for (const auto& e : net.edges) {
        const std::size_t u = net.node_position(e.tail), v = net.node_position(e.head);
        adj[u].push_back(to.size());
        to.push_back(v);
        cap.push_back(1);
        adj[v].push_back(to.size());
        to.push_back(u);
        cap.push_back(0);
    }
    const std::size_t none = std::numeric_limits<std::size_t>::max();
    std::size_t flow = 0;
    while (true) {
        std::vector<std::size_t> via(V, none);
        std::vector<bool> seen(V, false);
        std::deque<std::size_t> queue{s};
        seen[s] = true;
        while (!queue.empty() && !seen[t]) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t a : adj[u])
                if (cap[a] > 0 && !seen[to[a]]) {
                    seen[to[a]] = true;
                    via[to[a]] = a;
                    queue.push_back(to[a]);
                }
        }
        if (!seen[t]) break;
        for (std::size_t v = t; v != s; v = to[via[v] ^ 1]) {
            --cap[via[v]];
            ++cap[via[v] ^ 1];
        }
        ++flow;
    }
    return flow;
}

std::pair<long, long> path_delay_bounds(const Network& net) {
    const auto order = validate(net);
    const std::size_t V = net.nodes.size();
    std::vector<std::vector<std::pair<std::size_t, long>>> in(V);
    for (const auto& e : net.edges) in[net.node_position(e.head)].emplace_back(net.node_position(e.tail), e.delay);

    const long unreached = -1;
    long lo = std::numeric_limits<long>::max(), hi = -1;
    std::set<std::string> done;
    for (const auto& src : net.sources) {
        if (!done.insert(src.node).second) continue;
        // shortest and longest walk lengths from this source node, indexed by
        // node; 0 only at the source itself
        std::vector<long> mn(V, unreached), mx(V, unreached);
        const std::size_t s = net.node_position(src.node);
        mn[s] = mx[s] = 0;
        // arrival[v]: bounds over paths of length >= 1 that end at v
        std::vector<long> amn(V, unreached), amx(V, unreached);
        for (const auto& name : order) {
            const std::size_t v = net.node_position(name);
            for (auto [u, d] : in[v]) {
                if (mn[u] == unreached) continue;
                const long a = mn[u] + d, b = mx[u] + d;
                amn[v] = amn[v] == unreached ? a : std::min(amn[v], a);
                amx[v] = std::max(amx[v], b);
            }
            if (v != s) {
                mn[v] = amn[v];
                mx[v] = amx[v];
            }
        }
        for (const auto& snk : net.sinks) {
            const std::size_t v = net.node_position(snk.node);
            if (amn[v] == unreached) continue;
            lo = std::min(lo, amn[v]);
            hi = std::max(hi, amx[v]);
        }
    }
    if (hi < 0) return {0, 0};
    return {lo, hi};
}

}  // namespace tnc::netmodel
