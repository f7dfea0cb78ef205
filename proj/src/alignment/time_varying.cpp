#include "tnc/alignment/time_varying.hpp"

#include <string>

#include "tnc/error.hpp"
#include "tnc/galois/dft.hpp"
#include "tnc/netmodel/simulate.hpp"

namespace tnc::alignment {

namespace {

long wrap(long t, long N) { return ((t % N) + N) % N; }

bool span_within(const Matrix& inner, const Matrix& outer) {
    return hconcat(outer, inner).rank() == outer.rank();
}

}  // namespace

TvInstance build_tv(const netmodel::Network& net, const netmodel::LekAssignment& leks, std::size_t n) {
    netmodel::validate(net);
    if (!net.unit_delay()) throw Error(Errc::InvalidArgument, "time-varying instances need a unit-delay network");
    if (net.sources.size() != 3 || net.sinks.size() != 3 || net.mu() != 3 || net.nu() != 3)
        throw Error(Errc::InvalidNetwork, "three single-process sources and three single-output sinks expected");
    netmodel::check_leks(net, leks);

    TvInstance inst;
    inst.n = n;
    inst.N = 2 * n + 1;
    const long N = static_cast<long>(inst.N);
    const auto [lo, hi] = netmodel::path_delay_bounds(net);
    inst.d_prime_min = lo;
    inst.d_max = hi - lo;
    if (inst.d_max >= N)
        throw Error(Errc::BlockTooLong, "d_max = " + std::to_string(inst.d_max) + " needs 2n+1 > d_max");
    const FieldRef& field = leks.field();

    // kernels per clock over the whole run
    const long start = -inst.d_max, end = N + inst.d_prime_min;
    netmodel::LekAssignment run = leks;
    if (!leks.time_invariant()) {
        if (leks.window_start() > -inst.d_max || leks.window_end() < N)
            throw Error(Errc::WindowUnderspecified, "kernels must cover [" + std::to_string(-inst.d_max) + ", " +
                                                        std::to_string(N - 1) + "]");
        std::vector<netmodel::Kernels> sets;
        for (long t = start; t < end; ++t) {
            const bool inside = t >= leks.window_start() && t < leks.window_end();
            sets.push_back(leks.at(inside ? t : wrap(t, N)));
        }
        run = netmodel::LekAssignment(start, std::move(sets));
    }

    const std::size_t steps = static_cast<std::size_t>(end - start);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) inst.M[i][j] = Matrix(field, inst.N, inst.N);
    for (std::size_t i = 0; i < 3; ++i)
        for (long g = 0; g < N; ++g) {
            auto in = netmodel::zero_inputs(net, field, steps);
            in[i][static_cast<std::size_t>(g - start)][0] = field->one();
            if (g >= N - inst.d_max) in[i][static_cast<std::size_t>(g - N - start)][0] = field->one();
            const auto out = netmodel::simulate(net, run, in, start, steps);
            const std::size_t c = static_cast<std::size_t>(N - 1 - g);
            for (std::size_t j = 0; j < 3; ++j)
                for (long t = 0; t < N; ++t)
                    inst.M[i][j](static_cast<std::size_t>(N - 1 - t), c) =
                        out[j][static_cast<std::size_t>(t + inst.d_prime_min - start)][0];
        }
    return inst;
}

TvVerdict check_tv(const TvInstance& inst, const TvAssignment& as) {
    const std::size_t n = inst.n, N = inst.N;
    if (as.theta.rows() != N || as.theta.cols() != n + 1 || as.A.rows() != n + 1 || as.A.cols() != n ||
        as.B.rows() != n + 1 || as.B.cols() != n || as.C.rows() != n || as.C.cols() != n)
        throw Error(Errc::InvalidArgument, "assignment shapes do not match n = " + std::to_string(n));
    std::array<std::array<Matrix, 3>, 3> inv;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (inst.M[i][j].det().v == 0)
                throw Error(Errc::SingularBlock,
                            "M" + std::to_string(i + 1) + std::to_string(j + 1) + " is singular under this assignment");
            inv[i][j] = inst.M[i][j].inverse();
        }
    auto M = [&](std::size_t i, std::size_t j) -> const Matrix& { return inst.M[i - 1][j - 1]; };
    auto Mi = [&](std::size_t i, std::size_t j) -> const Matrix& { return inv[i - 1][j - 1]; };

    TvVerdict v;
    v.V1 = as.theta;
    v.V2 = Mi(2, 3) * M(1, 3) * v.V1 * as.A;
    v.V3 = Mi(3, 2) * M(1, 2) * v.V1 * as.B;
    const Matrix T1 = Mi(1, 2) * M(3, 2) * Mi(3, 1) * M(2, 1) * Mi(2, 3) * M(1, 3);
    const Matrix g = T1 * v.V1 * as.A - v.V1 * as.B * as.C;
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c)
            if (g(r, c).v != 0) v.violations.emplace_back(r, c);

    v.ranks[0] = hconcat(v.V1, Mi(1, 1) * M(2, 1) * v.V2).rank();
    v.ranks[1] = hconcat(Mi(1, 2) * M(2, 2) * v.V2, v.V1).rank();
    v.ranks[2] = hconcat(Mi(1, 3) * M(3, 3) * v.V3, v.V1).rank();

    const Matrix i21 = M(2, 1) * v.V2, i31 = M(3, 1) * v.V3;
    v.spans[0] = span_within(i21, i31) && span_within(i31, i21);
    v.spans[1] = span_within(M(3, 2) * v.V3, M(1, 2) * v.V1);
    v.spans[2] = span_within(M(2, 3) * v.V2, M(1, 3) * v.V1);

    v.ok = v.violations.empty() && v.spans[0] && v.spans[1] && v.spans[2];
    for (auto r : v.ranks) v.ok = v.ok && r == N;
    return v;
}

TvAssignment reduction_assignment(const AlignmentInstance& inst) {
    if (inst.category != Category::Full || inst.V1.rows() == 0)
        throw Error(Errc::InvalidArgument, "reduction needs a built full-category instance");
    const FieldRef& field = inst.plan.field;
    const std::size_t n = inst.n;
    TvAssignment as;
    as.theta = galois::dft_matrix(field, inst.plan.alpha, inst.N) * inst.V1;
    as.A = Matrix(field, n + 1, n);
    as.B = Matrix(field, n + 1, n);
    for (std::size_t k = 0; k < n; ++k) {
        as.A(k, k) = field->one();
        as.B(k + 1, k) = field->one();
    }
    as.C = Matrix::identity(field, n);
    return as;
}

}  // namespace tnc::alignment
