#include "tnc/fixtures/fixtures.hpp"

#include <initializer_list>
#include <string>

#include "tnc/error.hpp"

namespace tnc::fixtures {

using galois::Elem;
using galois::Field;
using galois::FieldRef;
using galois::Poly;
using galois::PolyMatrix;
using netmodel::Edge;
using netmodel::Kernels;
using netmodel::Network;

namespace {

// sum of D^k over the listed exponents, over GF(2)
Poly d(const FieldRef& f, std::initializer_list<std::size_t> exps) {
    Poly p(f);
    for (auto e : exps) p = p + Poly::monomial(f, f->one(), e);
    return p;
}

std::size_t edge_at(const Network& net, const std::string& tail, const std::string& head) {
    for (std::size_t e = 0; e < net.edges.size(); ++e)
        if (net.edges[e].tail == tail && net.edges[e].head == head) return e;
    return net.edges.size();
}

}  // namespace

TransferFixture example1() {
    auto f = Field::build(2, 1);
    const Poly z(f);
    const std::vector<std::vector<std::vector<Poly>>> rows = {
        {{d(f, {1}), z, z}, {z, d(f, {1}), z}, {d(f, {3}), d(f, {3}), d(f, {3})}},
        {{d(f, {1}), z, z}, {z, z, d(f, {1})}, {d(f, {3}), d(f, {3}), d(f, {3})}},
        {{z, d(f, {1}), z}, {z, z, d(f, {2})}, {d(f, {3}), d(f, {3}), d(f, {3})}},
        {{d(f, {4}), z, d(f, {4, 5})}, {z, z, d(f, {1})}},
        {{z, d(f, {3}), d(f, {4})}, {z, z, d(f, {1})}},
    };
    PolyMatrix raw(f, 13, 3);
    std::size_t r = 0;
    std::vector<std::size_t> nu;
    for (const auto& sink : rows) {
        nu.push_back(sink.size());
        for (const auto& row : sink) {
            for (std::size_t c = 0; c < 3; ++c) raw(r, c) = row[c];
            ++r;
        }
    }
    TransferFixture fx;
    fx.transfer = netmodel::transfer_from_raw(std::move(raw), {1, 1, 1}, nu);
    fx.sink_names = {"u1", "u2", "u3", "u4", "u5"};
    const std::vector<Demand> all{{0, 0}, {1, 0}, {2, 0}};
    fx.demands = {all, all, all, {{0, 0}, {2, 0}}, {{1, 0}, {2, 0}}};
    return fx;
}

Network example2_network() {
    Network net;
    net.nodes = {"S1", "S2", "S3", "v1", "v2", "v3", "v4", "h1", "g1", "h2", "g2", "h3", "g3", "D1", "D2", "D3"};
    auto link = [&](const char* t, const char* h) { net.edges.push_back(Edge{t, h, 0, 1}); };
    for (const char* s : {"S1", "S2", "S3"}) link(s, "v1");
    link("v1", "v2");
    link("v2", "v3");
    link("v3", "v4");
    for (const char* s : {"D1", "D2", "D3"}) link("v4", s);
    // short paths of three hops
    link("S1", "h1"), link("h1", "g1"), link("g1", "D2");
    link("S2", "h2"), link("h2", "g2"), link("g2", "D3");
    link("S3", "h3"), link("h3", "g3"), link("g3", "D1");
    for (int i = 1; i <= 3; ++i) net.sources.push_back({"S" + std::to_string(i), 1});
    for (std::size_t j = 0; j < 3; ++j) net.sinks.push_back({"D" + std::to_string(j + 1), 1, {{j, 0}}});
    netmodel::canonicalize(net);
    return net;
}

Kernels example2_kernels(const FieldRef& field, const Example2Values& v) {
    const Network net = example2_network();
    Kernels k = Kernels::zero(field, net);
    const Elem one = field->one();
    auto e = [&](const char* t, const char* h) { return edge_at(net, t, h); };

    const char* src[] = {"S1", "S2", "S3"};
    const char* snk[] = {"D1", "D2", "D3"};
    const Elem first[] = {v.a, v.b, v.c};
    const Elem last[] = {v.p, v.t, v.r};
    for (std::size_t i = 0; i < 3; ++i) {
        k.A(i, e(src[i], "v1")) = one;
        k.K(e(src[i], "v1"), e("v1", "v2")) = first[i];
        k.K(e("v3", "v4"), e("v4", snk[i])) = last[i];
        k.B(i, e("v4", snk[i])) = one;
    }
    k.K(e("v1", "v2"), e("v2", "v3")) = one;
    k.K(e("v2", "v3"), e("v3", "v4")) = one;

    struct Short {
        const char *s, *h, *g, *d;
        std::size_t sink;
        Elem gain;
    };
    for (const Short& p : {Short{"S1", "h1", "g1", "D2", 1, v.u}, Short{"S2", "h2", "g2", "D3", 2, v.s},
                           Short{"S3", "h3", "g3", "D1", 0, v.q}}) {
        const std::size_t source = static_cast<std::size_t>(p.s[1] - '1');
        k.A(source, e(p.s, p.h)) = one;
        k.K(e(p.s, p.h), e(p.h, p.g)) = p.gain;
        k.K(e(p.h, p.g), e(p.g, p.d)) = one;
        k.B(p.sink, e(p.g, p.d)) = one;
    }
    return k;
}

FieldRef example2_field() { return Field::build(2, 6, std::vector<std::uint32_t>{1, 1, 0, 0, 0, 0, 1}); }

Example2Values example2_witness() {
    const auto f = example2_field();
    auto el = [&](std::vector<std::uint32_t> c) { return f->from_coeffs(c); };
    const Elem one = f->one();
    return Example2Values{one, one, one, one, one, one, el({1, 0, 1, 1, 1, 1}), el({1, 1, 1, 0, 0, 0}),
                          el({1, 0, 0, 0, 1, 0})};
}

Network category_network(int category) {
    // chain lengths, [source][sink]
    constexpr std::size_t len[3][3] = {{1, 2, 3}, {2, 2, 2}, {3, 1, 3}};
    bool cut[3][3] = {};
    auto zero = [&](int i, int j) { cut[i - 1][j - 1] = true; };
    switch (category) {
        case 0: break;
        case 1: zero(2, 1); break;
        case 2: zero(2, 1), zero(3, 1), zero(1, 2); break;
        case 3: zero(3, 1), zero(1, 2), zero(2, 3); break;
        case 4: zero(3, 1), zero(3, 2), zero(1, 3), zero(2, 3); break;
        default: throw Error(Errc::InvalidArgument, "category must be 0..4");
    }
    Network net;
    for (int i = 1; i <= 3; ++i) net.nodes.push_back("S" + std::to_string(i));
    for (int j = 1; j <= 3; ++j) net.nodes.push_back("D" + std::to_string(j));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (cut[i][j]) continue;
            std::string prev = "S" + std::to_string(i + 1);
            for (std::size_t k = 1; k < len[i][j]; ++k) {
                std::string node = "c" + std::to_string(i + 1) + std::to_string(j + 1) + "_" + std::to_string(k);
                net.nodes.push_back(node);
                net.edges.push_back(Edge{prev, node, 0, 1});
                prev = node;
            }
            net.edges.push_back(Edge{prev, "D" + std::to_string(j + 1), 0, 1});
        }
    for (int i = 1; i <= 3; ++i) net.sources.push_back({"S" + std::to_string(i), 1});
    for (std::size_t j = 0; j < 3; ++j) net.sinks.push_back({"D" + std::to_string(j + 1), 1, {{j, 0}}});
    netmodel::canonicalize(net);
    return net;
}

}  // namespace tnc::fixtures
