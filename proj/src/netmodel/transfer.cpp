#include "tnc/netmodel/transfer.hpp"

#include <numeric>

#include "tnc/error.hpp"

namespace tnc::netmodel {

namespace {

std::vector<std::size_t> offsets(const std::vector<std::size_t>& sizes) {
    std::vector<std::size_t> off(sizes.size() + 1, 0);
    std::partial_sum(sizes.begin(), sizes.end(), off.begin() + 1);
    return off;
}

}  // namespace

std::size_t TransferResult::source_offset(std::size_t i) const { return offsets(mu_sizes).at(i); }

std::size_t TransferResult::sink_offset(std::size_t j) const { return offsets(nu_sizes).at(j); }

PolyMatrix TransferResult::block(std::size_t i, std::size_t j) const {
    return M.block(sink_offset(j), source_offset(i), nu_sizes.at(j), mu_sizes.at(i));
}

PolyMatrix TransferResult::raw_block(std::size_t i, std::size_t j) const {
    return raw.block(sink_offset(j), source_offset(i), nu_sizes.at(j), mu_sizes.at(i));
}

TransferResult transfer_from_raw(PolyMatrix raw, std::vector<std::size_t> mu_sizes,
                                 std::vector<std::size_t> nu_sizes) {
    const std::size_t mu = std::accumulate(mu_sizes.begin(), mu_sizes.end(), std::size_t{0});
    const std::size_t nu = std::accumulate(nu_sizes.begin(), nu_sizes.end(), std::size_t{0});
    if (raw.rows() != nu || raw.cols() != mu)
        throw Error(Errc::InvalidArgument, "transfer matrix shape does not match the block partition");
    TransferResult r;
    r.d_prime_min = std::max<long>(raw.min_low_degree(), 0);
    r.d_prime_max = std::max<long>(raw.max_degree(), 0);
    r.d_max = r.d_prime_max - r.d_prime_min;
    r.M = raw.shifted_down(static_cast<std::size_t>(r.d_prime_min));
    r.raw = std::move(raw);
    r.mu_sizes = std::move(mu_sizes);
    r.nu_sizes = std::move(nu_sizes);
    return r;
}

TransferResult transfer_matrix(const Network& net, const Kernels& k) {
    if (!net.unit_delay()) throw Error(Errc::InvalidArgument, "transfer_matrix needs a unit-delay network");
    check_kernels(net, k);
    const FieldRef& f = k.field();
    const std::size_t E = net.edges.size();

    // coefficient of D^{h+1} is B (K^T)^h A^T; K is nilpotent so at most |E| terms
    std::vector<Matrix> coeffs{Matrix(f, net.nu(), net.mu())};
    const Matrix Kt = k.K.transposed();
    Matrix P = k.A.transposed();
    for (std::size_t h = 0; h < E && !P.is_zero(); ++h) {
        coeffs.push_back(k.B * P);
        P = Kt * P;
    }
    if (!P.is_zero()) throw Error(Errc::CycleDetected, "kernel adjacency is not nilpotent");

    TransferResult r;
    r.raw = PolyMatrix::from_coefficients(coeffs);
    std::tie(r.d_prime_min, r.d_prime_max) = path_delay_bounds(net);
    r.d_max = r.d_prime_max - r.d_prime_min;
    r.M = r.raw.shifted_down(static_cast<std::size_t>(r.d_prime_min));
    for (const auto& s : net.sources) r.mu_sizes.push_back(s.processes);
    for (const auto& s : net.sinks) r.nu_sizes.push_back(s.outputs);
    return r;
}

}  // namespace tnc::netmodel
