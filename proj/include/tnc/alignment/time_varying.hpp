#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tnc/alignment/alignment.hpp"

namespace tnc::alignment {

/// Time-domain transfer of one block of N = 2n+1 generations sent with a
/// cyclic prefix of d_max generations. M[i][j] maps source i's stacked
/// generations to sink j's, newest-first on both sides, so entry (r, c) is
/// nonzero only when (c - r) mod N <= d_max.
///
/// Generation g leaves the source at clock g (the prefix copy of the last
/// d_max generations at clock g - N) and is read at clock g + d'_min. Kernels
/// are needed on [-d_max, N - 1 + d'_min]; a clock outside the supplied
/// window is read modulo N.
struct TvInstance {
    std::size_t n = 0;
    std::size_t N = 0;
    long d_max = 0;
    long d_prime_min = 0;
    std::array<std::array<Matrix, 3>, 3> M;
};

/// Requires a unit-delay three-unicast network and kernels covering
/// [-d_max, 2n] (WindowUnderspecified otherwise).
TvInstance build_tv(const netmodel::Network& net, const netmodel::LekAssignment& leks, std::size_t n);

struct TvAssignment {
    Matrix theta;  // N x (n+1), becomes V1
    Matrix A;      // (n+1) x n
    Matrix B;      // (n+1) x n
    Matrix C;      // n x n
};

struct TvVerdict {
    /// Entries (i, j) of T1 V1 A - V1 B C that are nonzero.
    std::vector<std::pair<std::size_t, std::size_t>> violations;
    std::array<std::size_t, 3> ranks{};
    /// Span(M21 V2) = Span(M31 V3), Span(M32 V3) in Span(M12 V1),
    /// Span(M23 V2) in Span(M13 V1).
    std::array<bool, 3> spans{};
    Matrix V1, V2, V3;
    bool ok = false;
};

/// V2 = M23^-1 M13 V1 A, V3 = M32^-1 M12 V1 B. Throws SingularBlock when some
/// M_ij is not invertible.
TvVerdict check_tv(const TvInstance& inst, const TvAssignment& assignment);

/// Constant-kernel reduction of a full-category instance: theta = Q V1 with
/// Q the N-point DFT matrix, A and B select the first and last n columns,
/// C = I_n.
TvAssignment reduction_assignment(const AlignmentInstance& inst);

}  // namespace tnc::alignment
