#pragma once

#include <memory>
#include <vector>

#include "tnc/netmodel/simulate.hpp"
#include "tnc/netmodel/transfer.hpp"
#include "tnc/transform/transform.hpp"

namespace tnc::transform {

using netmodel::Series;

/// Something that carries per-source time series to per-sink time series.
/// Outputs are aligned so that out[j][s] depends on inputs up to slot s
/// through the normalized transfer matrix: out[j][s] = sum_d M_j^{(d)} x[s-d].
class Channel {
public:
    virtual ~Channel() = default;
    virtual Series run(const Series& tx) const = 0;
};

/// Direct convolution with a transfer matrix, embedded into `field`.
class ConvolutionChannel : public Channel {
public:
    ConvolutionChannel(const netmodel::TransferResult& tr, const FieldRef& field);
    Series run(const Series& tx) const override;

private:
    std::vector<Matrix> coeffs_;
    std::vector<std::size_t> mu_sizes_;
    std::vector<std::size_t> nu_sizes_;
};

/// Exact network simulation. Slot s of the transmission is emitted at clock
/// `t0 + s` and the matching output is read d_prime_min clocks later.
/// Kernels are embedded into `field` when they live in a subfield.
class NetworkChannel : public Channel {
public:
    NetworkChannel(netmodel::Network net, const netmodel::LekAssignment& leks, long d_prime_min, long t0,
                   const FieldRef& field);
    Series run(const Series& tx) const override;

private:
    netmodel::Network net_;
    netmodel::LekAssignment leks_;
    long d_prime_min_;
    long t0_;
};

/// inputs[i][t] for generations t = 0..n-1. Stacks newest-first, applies
/// Q_{mu_i}, and returns n + d_max slots in transmission order: the last
/// d_max transformed generations followed by all n.
Series cp_encode(const TransformPlan& plan, const Series& inputs);

/// Drops the first d_max slots, stacks newest-first, applies Q_{nu_j}^-1 and
/// returns per-generation outputs out[j][t]. Throws WindowMismatch unless
/// every sink supplies exactly n + d_max slots.
Series cp_decode(const TransformPlan& plan, const Series& outputs);

/// cp_encode, channel, cp_decode.
Series run_block(const TransformPlan& plan, const Channel& channel, const Series& inputs);

/// sum_i Mhat_ij(t) X_i(t) for every sink and generation, from the full
/// nu x mu eigen blocks.
Series predict(const std::vector<Matrix>& mhat, const std::vector<std::size_t>& mu_sizes,
               const std::vector<std::size_t>& nu_sizes, const Series& inputs);

/// Solves the square system formed by the demanded columns (stacked process
/// indices) of sink j's rows of Mhat(t). Throws NonSquare or
/// SingularAtGeneration.
std::vector<Elem> instantaneous_solve(const Matrix& mhat_j, const std::vector<std::size_t>& demanded_columns,
                                      const std::vector<Elem>& y, std::size_t t);

}  // namespace tnc::transform
