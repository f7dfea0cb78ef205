#pragma once

#include <cstddef>
#include <vector>

#include "tnc/netmodel/leks.hpp"

namespace tnc::netmodel {

/// series[i][s] is the symbol vector of source (or sink) i at time t0 + s.
using Series = std::vector<std::vector<std::vector<Elem>>>;

/// Exact time-domain run of a unit-delay network with all link registers zero
/// at t0:
///   Z(t+1) = A(t)^T X(t) + K(t)^T Z(t),   Y(t) = B(t) Z(t).
/// Inputs must cover `steps` time instants per source; missing trailing
/// instants are read as zero. Returns `steps` output instants per sink.
Series simulate(const Network& net, const LekAssignment& leks, const Series& inputs, long t0,
                std::size_t steps);

/// All-zero series shaped for the network's sources.
Series zero_inputs(const Network& net, const FieldRef& field, std::size_t steps);

}  // namespace tnc::netmodel
