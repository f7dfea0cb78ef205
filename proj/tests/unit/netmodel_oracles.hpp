#pragma once

// Independent references for the network model: a path-sum transfer matrix
// and a brute-force minimum edge cut.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tnc/galois/poly_matrix.hpp"
#include "tnc/netmodel/leks.hpp"

namespace tnc::test {

/// Raw M(D) as the sum over all source-to-sink paths of
/// alpha * beta * ... * beta * eps * D^(total delay). Works on delayed
/// networks directly.
inline galois::PolyMatrix path_sum_transfer(const netmodel::Network& net, const netmodel::Kernels& k) {
    const auto& f = k.field();
    const auto& F = *f;
    galois::PolyMatrix m(f, net.nu(), net.mu());
    const std::size_t E = net.edges.size();

    std::function<void(std::size_t, std::size_t, galois::Elem, std::size_t)> walk =
        [&](std::size_t l, std::size_t e, galois::Elem gain, std::size_t delay) {
            const auto& edge = net.edges[e];
            for (std::size_t j = 0; j < net.sinks.size(); ++j) {
                if (net.sinks[j].node != edge.head) continue;
                const std::size_t off = net.sink_offset(j);
                for (std::size_t r = 0; r < net.sinks[j].outputs; ++r) {
                    const galois::Elem c = F.mul(gain, k.B(off + r, e));
                    m(off + r, l) = m(off + r, l) + galois::Poly::monomial(f, c, delay);
                }
            }
            for (std::size_t nxt = 0; nxt < E; ++nxt)
                if (net.edges[nxt].tail == edge.head)
                    walk(l, nxt, F.mul(gain, k.K(e, nxt)), delay + net.edges[nxt].delay);
        };

    for (std::size_t i = 0; i < net.sources.size(); ++i) {
        const std::size_t off = net.source_offset(i);
        for (std::size_t p = 0; p < net.sources[i].processes; ++p)
            for (std::size_t e = 0; e < E; ++e)
                if (net.edges[e].tail == net.sources[i].node) walk(off + p, e, k.A(off + p, e), net.edges[e].delay);
    }
    return m;
}

/// Smallest number of edges whose removal disconnects s from t, by trying
/// every edge subset. Only for networks with a handful of edges.
inline std::size_t brute_force_min_cut(const netmodel::Network& net, const std::string& s, const std::string& t) {
    const std::size_t E = net.edges.size();
    auto connected = [&](std::uint32_t removed) {
        std::vector<std::string> stack{s}, seen{s};
        while (!stack.empty()) {
            const std::string u = stack.back();
            stack.pop_back();
            if (u == t) return true;
            for (std::size_t e = 0; e < E; ++e) {
                if ((removed >> e) & 1u) continue;
                if (net.edges[e].tail != u) continue;
                const std::string& v = net.edges[e].head;
                if (std::find(seen.begin(), seen.end(), v) == seen.end()) {
                    seen.push_back(v);
                    stack.push_back(v);
                }
            }
        }
        return false;
    };
    std::size_t best = E;
    for (std::uint32_t mask = 0; mask < (1u << E); ++mask) {
        const auto bits = static_cast<std::size_t>(__builtin_popcount(mask));
        if (bits < best && !connected(mask)) best = bits;
    }
    return best;
}

}  // namespace tnc::test
