#pragma once

#include <cstddef>
#include <vector>

#include "tnc/galois/poly_matrix.hpp"
#include "tnc/netmodel/leks.hpp"

namespace tnc::netmodel {

using galois::Poly;
using galois::PolyMatrix;

/// Transfer matrix Y(D) = M(D) X(D) of a network, nu x mu.
///
/// `raw` is the matrix exactly as produced by the link recursion; `M` is raw
/// divided by D^d_prime_min so that the shortest path contributes at D^0.
struct TransferResult {
    PolyMatrix raw;
    PolyMatrix M;
    long d_prime_min = 0;
    long d_prime_max = 0;
    long d_max = 0;
    std::vector<std::size_t> mu_sizes;  // per source
    std::vector<std::size_t> nu_sizes;  // per sink

    std::size_t source_offset(std::size_t i) const;
    std::size_t sink_offset(std::size_t j) const;
    /// M_ij(D): sink j's rows, source i's columns (nu_j x mu_i).
    PolyMatrix block(std::size_t i, std::size_t j) const;
    PolyMatrix raw_block(std::size_t i, std::size_t j) const;
    const FieldRef& field() const { return M.field(); }
};

/// Wraps a raw transfer matrix whose path bounds are read off its entries.
TransferResult transfer_from_raw(PolyMatrix raw, std::vector<std::size_t> mu_sizes,
                                 std::vector<std::size_t> nu_sizes);

/// M(D)^T = A D (I + K D + K^2 D^2 + ...) B^T, normalized by the smallest
/// source-to-sink path length. Requires a unit-delay network.
TransferResult transfer_matrix(const Network& net, const Kernels& k);

}  // namespace tnc::netmodel
