#pragma once

#include <string>
#include <vector>

#include "tnc/netmodel/transfer.hpp"

namespace tnc::fixtures {

using netmodel::Demand;

/// A transfer matrix given directly, with per-sink demands.
struct TransferFixture {
    netmodel::TransferResult transfer;
    std::vector<std::string> sink_names;
    std::vector<std::vector<Demand>> demands;
};

/// Three sources and five sinks over GF(2) with all kernels 1; the raw
/// transfer matrices are entered verbatim.
TransferFixture example1();

/// Kernel values of the three-unicast example. a, b, c scale the first hop
/// of each source onto the shared path; p, t, r scale the last hop towards
/// sinks 1, 2, 3; u, s, q ride the three short paths S1->D2, S2->D3, S3->D1.
struct Example2Values {
    galois::Elem a, b, c, p, t, r, s, q, u;
};

/// Unit-delay topology realizing the nine blocks
///   M11 = ap D^5, M12 = u D^3 + at D^5, M13 = ar D^5,
///   M21 = bp D^5, M22 = bt D^5,         M23 = s D^3 + br D^5,
///   M31 = q D^3 + cp D^5, M32 = ct D^5, M33 = cr D^5.
netmodel::Network example2_network();
netmodel::Kernels example2_kernels(const galois::FieldRef& field, const Example2Values& v);

/// GF(64) under 1 + x + x^6 and the reference kernel values
/// (a = b = c = p = r = t = 1, s = 1+x^2+x^3+x^4+x^5, q = 1+x+x^2, u = 1+x^4).
galois::FieldRef example2_field();
Example2Values example2_witness();
/// Half block parameter n of the reference instance (2n + 1 = 7).
inline constexpr std::size_t example2_half_block = 3;

/// Three-unicast network whose cross pairs follow the zero pattern of
/// category 1..4 (0 gives every pair connected). Each connected pair (i, j)
/// has its own chain S_i -> D_j, of a length chosen so that the interference
/// ratios of categories 1-4 vary from generation to generation. Every block
/// is a monomial, so the all-connected variant never aligns.
netmodel::Network category_network(int category);

}  // namespace tnc::fixtures
