#pragma once

#include <cstdint>
#include <vector>

#include "tnc/galois/embedding.hpp"
#include "tnc/galois/matrix.hpp"
#include "tnc/netmodel/network.hpp"

namespace tnc::netmodel {

using galois::Elem;
using galois::FieldRef;
using galois::Matrix;

/// One complete set of local encoding kernels in matrix form:
///   A (mu x |E|)   A(l, e)  = alpha for stacked process l on out-edge e
///   K (|E| x |E|)  K(e', e) = beta from in-edge e' to out-edge e
///   B (nu x |E|)   B(k, e') = eps from in-edge e' to stacked output k
struct Kernels {
    Matrix A;
    Matrix K;
    Matrix B;

    static Kernels zero(const FieldRef& field, const Network& net);
    const FieldRef& field() const { return A.field(); }
    bool operator==(const Kernels&) const = default;
};

/// Throws InvalidArgument when shapes disagree with the network or a nonzero
/// kernel sits at a non-adjacent position.
void check_kernels(const Network& net, const Kernels& k);

/// Kernels that are either fixed or indexed by time. A time-indexed
/// assignment covers the contiguous window [start, start + sets.size()).
class LekAssignment {
public:
    LekAssignment() = default;
    explicit LekAssignment(Kernels fixed);
    LekAssignment(long start, std::vector<Kernels> sets);

    bool time_invariant() const { return invariant_; }
    const FieldRef& field() const;
    long window_start() const { return start_; }
    /// One past the last covered time.
    long window_end() const { return start_ + static_cast<long>(sets_.size()); }
    /// Throws WindowUnderspecified when t lies outside a time-indexed window.
    const Kernels& at(long t) const;
    const Kernels& fixed() const;
    const std::vector<Kernels>& sets() const { return sets_; }

private:
    bool invariant_ = true;
    long start_ = 0;
    std::vector<Kernels> sets_;
};

void check_leks(const Network& net, const LekAssignment& leks);

/// Deterministic uniform kernels at every admissible position.
Kernels random_kernels(const Network& net, const FieldRef& field, std::uint64_t seed);
LekAssignment random_leks(const Network& net, const FieldRef& field, std::uint64_t seed);
/// Time-indexed variant over [start, start + count).
LekAssignment random_leks(const Network& net, const FieldRef& field, std::uint64_t seed, long start,
                          std::size_t count);

Kernels embed(const Kernels& k, const galois::Embedding& emb);
LekAssignment embed(const LekAssignment& leks, const galois::Embedding& emb);

/// Carries kernels of `original` over to its delay-normalized form: alphas and
/// betas into a chain enter at its first edge, betas and eps out of it leave
/// from its last edge, and chain-internal betas are one.
Kernels lift(const Network& original, const NormalizedNetwork& normalized, const Kernels& k);
LekAssignment lift(const Network& original, const NormalizedNetwork& normalized, const LekAssignment& leks);

}  // namespace tnc::netmodel
