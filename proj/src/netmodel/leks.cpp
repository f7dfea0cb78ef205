#include "tnc/netmodel/leks.hpp"

#include <random>
#include <string>

#include "tnc/error.hpp"

namespace tnc::netmodel {

namespace {

struct Adjacency {
    std::vector<bool> alpha;  // mu x |E|
    std::vector<bool> beta;   // |E| x |E|
    std::vector<bool> eps;    // nu x |E|
};

Adjacency adjacency(const Network& net) {
    const std::size_t E = net.edges.size(), mu = net.mu(), nu = net.nu();
    Adjacency adj{std::vector<bool>(mu * E), std::vector<bool>(E * E), std::vector<bool>(nu * E)};
    for (std::size_t i = 0; i < net.sources.size(); ++i) {
        const std::size_t off = net.source_offset(i);
        for (std::size_t l = 0; l < net.sources[i].processes; ++l)
            for (std::size_t e = 0; e < E; ++e)
                if (net.edges[e].tail == net.sources[i].node) adj.alpha[(off + l) * E + e] = true;
    }
    for (std::size_t a = 0; a < E; ++a)
        for (std::size_t b = 0; b < E; ++b)
            if (net.edges[a].head == net.edges[b].tail) adj.beta[a * E + b] = true;
    for (std::size_t j = 0; j < net.sinks.size(); ++j) {
        const std::size_t off = net.sink_offset(j);
        for (std::size_t k = 0; k < net.sinks[j].outputs; ++k)
            for (std::size_t e = 0; e < E; ++e)
                if (net.edges[e].head == net.sinks[j].node) adj.eps[(off + k) * E + e] = true;
    }
    return adj;
}

void check_mask(const Matrix& m, const std::vector<bool>& mask, std::size_t rows, std::size_t cols,
                const char* name) {
    if (m.rows() != rows || m.cols() != cols)
        throw Error(Errc::InvalidArgument, std::string(name) + " has shape " + std::to_string(m.rows()) + "x" +
                                               std::to_string(m.cols()) + ", expected " + std::to_string(rows) +
                                               "x" + std::to_string(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (m(r, c).v != 0 && !mask[r * cols + c])
                throw Error(Errc::InvalidArgument, std::string(name) + " has a kernel at non-adjacent position (" +
                                                       std::to_string(r) + ", " + std::to_string(c) + ")");
}

void fill_random(Matrix& m, const std::vector<bool>& mask, std::mt19937_64& rng) {
    const std::uint64_t q = m.field()->order();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (mask[r * m.cols() + c]) m(r, c) = Elem{rng() % q};
}

Matrix embed_matrix(const Matrix& m, const galois::Embedding& emb) {
    Matrix out(emb.to(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = emb(m(r, c));
    return out;
}

}  // namespace

Kernels Kernels::zero(const FieldRef& field, const Network& net) {
    const std::size_t E = net.edges.size();
    return Kernels{Matrix(field, net.mu(), E), Matrix(field, E, E), Matrix(field, net.nu(), E)};
}

void check_kernels(const Network& net, const Kernels& k) {
    const auto adj = adjacency(net);
    const std::size_t E = net.edges.size();
    check_mask(k.A, adj.alpha, net.mu(), E, "alpha");
    check_mask(k.K, adj.beta, E, E, "beta");
    check_mask(k.B, adj.eps, net.nu(), E, "eps");
    if (!k.K.field()->same_as(*k.A.field()) || !k.B.field()->same_as(*k.A.field()))
        throw Error(Errc::FieldMismatch, "kernel matrices over different fields");
}

LekAssignment::LekAssignment(Kernels fixed) : invariant_(true), sets_{std::move(fixed)} {}

LekAssignment::LekAssignment(long start, std::vector<Kernels> sets)
    : invariant_(false), start_(start), sets_(std::move(sets)) {
    if (sets_.empty()) throw Error(Errc::WindowUnderspecified, "time-indexed assignment with an empty window");
}

const FieldRef& LekAssignment::field() const {
    if (sets_.empty()) throw Error(Errc::InvalidArgument, "empty kernel assignment");
    return sets_.front().field();
}

const Kernels& LekAssignment::at(long t) const {
    if (invariant_) return fixed();
    if (t < start_ || t >= window_end())
        throw Error(Errc::WindowUnderspecified, "no kernels for time " + std::to_string(t) + " (window [" +
                                                    std::to_string(start_) + ", " + std::to_string(window_end() - 1) +
                                                    "])");
    return sets_[static_cast<std::size_t>(t - start_)];
}

const Kernels& LekAssignment::fixed() const {
    if (!invariant_) throw Error(Errc::InvalidArgument, "kernels are time-indexed");
    if (sets_.empty()) throw Error(Errc::InvalidArgument, "empty kernel assignment");
    return sets_.front();
}

void check_leks(const Network& net, const LekAssignment& leks) {
    for (const auto& k : leks.sets()) check_kernels(net, k);
}

Kernels random_kernels(const Network& net, const FieldRef& field, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto adj = adjacency(net);
    Kernels k = Kernels::zero(field, net);
    fill_random(k.A, adj.alpha, rng);
    fill_random(k.K, adj.beta, rng);
    fill_random(k.B, adj.eps, rng);
    return k;
}

LekAssignment random_leks(const Network& net, const FieldRef& field, std::uint64_t seed) {
    return LekAssignment(random_kernels(net, field, seed));
}

LekAssignment random_leks(const Network& net, const FieldRef& field, std::uint64_t seed, long start,
                          std::size_t count) {
    std::seed_seq seq{seed, std::uint64_t{0x7469}};
    std::mt19937_64 rng(seq);
    std::vector<Kernels> sets;
    for (std::size_t i = 0; i < count; ++i) sets.push_back(random_kernels(net, field, rng()));
    return LekAssignment(start, std::move(sets));
}

Kernels embed(const Kernels& k, const galois::Embedding& emb) {
    return Kernels{embed_matrix(k.A, emb), embed_matrix(k.K, emb), embed_matrix(k.B, emb)};
}

LekAssignment embed(const LekAssignment& leks, const galois::Embedding& emb) {
    if (leks.time_invariant()) return LekAssignment(embed(leks.fixed(), emb));
    std::vector<Kernels> sets;
    for (const auto& k : leks.sets()) sets.push_back(embed(k, emb));
    return LekAssignment(leks.window_start(), std::move(sets));
}

Kernels lift(const Network& original, const NormalizedNetwork& normalized, const Kernels& k) {
    check_kernels(original, k);
    const FieldRef& f = k.field();
    Kernels out = Kernels::zero(f, normalized.net);
    const auto& chains = normalized.chains;
    for (std::size_t r = 0; r < k.A.rows(); ++r)
        for (std::size_t e = 0; e < chains.size(); ++e) out.A(r, chains[e].front()) = k.A(r, e);
    for (std::size_t r = 0; r < k.B.rows(); ++r)
        for (std::size_t e = 0; e < chains.size(); ++e) out.B(r, chains[e].back()) = k.B(r, e);
    for (std::size_t a = 0; a < chains.size(); ++a) {
        for (std::size_t b = 0; b < chains.size(); ++b) out.K(chains[a].back(), chains[b].front()) = k.K(a, b);
        for (std::size_t s = 0; s + 1 < chains[a].size(); ++s) out.K(chains[a][s], chains[a][s + 1]) = f->one();
    }
    return out;
}

LekAssignment lift(const Network& original, const NormalizedNetwork& normalized, const LekAssignment& leks) {
    if (leks.time_invariant()) return LekAssignment(lift(original, normalized, leks.fixed()));
    std::vector<Kernels> sets;
    for (const auto& k : leks.sets()) sets.push_back(lift(original, normalized, k));
    return LekAssignment(leks.window_start(), std::move(sets));
}

}  // namespace tnc::netmodel
