#include "tnc/transform/pipeline.hpp"

#include <optional>
#include <string>

#include "tnc/error.hpp"
#include "tnc/galois/dft.hpp"
#include "tnc/galois/embedding.hpp"

namespace tnc::transform {

namespace {

std::vector<Elem> stack_newest_first(const std::vector<std::vector<Elem>>& gens, std::size_t first, std::size_t n) {
    std::vector<Elem> v;
    for (std::size_t r = 0; r < n; ++r) {
        const auto& g = gens[first + n - 1 - r];
        v.insert(v.end(), g.begin(), g.end());
    }
    return v;
}

// generation t of a newest-first stack with blocks of size k
std::vector<Elem> generation(const std::vector<Elem>& stacked, std::size_t t, std::size_t n, std::size_t k) {
    const std::size_t r = n - 1 - t;
    return {stacked.begin() + static_cast<long>(r * k), stacked.begin() + static_cast<long>((r + 1) * k)};
}

}  // namespace

ConvolutionChannel::ConvolutionChannel(const netmodel::TransferResult& tr, const FieldRef& field)
    : mu_sizes_(tr.mu_sizes), nu_sizes_(tr.nu_sizes) {
    const bool same = tr.field()->same_as(*field);
    std::optional<galois::Embedding> emb;
    if (!same) emb.emplace(tr.field(), field);
    for (const auto& c : tr.M.coefficients()) {
        if (same) {
            coeffs_.push_back(c);
            continue;
        }
        Matrix m(field, c.rows(), c.cols());
        for (std::size_t r = 0; r < c.rows(); ++r)
            for (std::size_t k = 0; k < c.cols(); ++k) m(r, k) = (*emb)(c(r, k));
        coeffs_.push_back(std::move(m));
    }
}

Series ConvolutionChannel::run(const Series& tx) const {
    if (tx.size() != mu_sizes_.size()) throw Error(Errc::InvalidArgument, "wrong number of sources");
    const galois::Field& F = *coeffs_.front().field();
    const std::size_t L = tx.empty() ? 0 : tx.front().size();
    std::vector<std::size_t> src_off{0};
    for (auto m : mu_sizes_) src_off.push_back(src_off.back() + m);
    Series out(nu_sizes_.size());
    std::size_t row = 0;
    for (std::size_t j = 0; j < nu_sizes_.size(); ++j) {
        out[j].assign(L, std::vector<Elem>(nu_sizes_[j], F.zero()));
        for (std::size_t s = 0; s < L; ++s)
            for (std::size_t d = 0; d < coeffs_.size() && d <= s; ++d)
                for (std::size_t i = 0; i < tx.size(); ++i) {
                    if (tx[i].size() != L) throw Error(Errc::InvalidArgument, "ragged transmission");
                    const auto& x = tx[i][s - d];
                    for (std::size_t r = 0; r < nu_sizes_[j]; ++r)
                        for (std::size_t p = 0; p < mu_sizes_[i]; ++p)
                            out[j][s][r] = F.add(out[j][s][r], F.mul(coeffs_[d](row + r, src_off[i] + p), x[p]));
                }
        row += nu_sizes_[j];
    }
    return out;
}

NetworkChannel::NetworkChannel(netmodel::Network net, const netmodel::LekAssignment& leks, long d_prime_min, long t0,
                               const FieldRef& field)
    : net_(std::move(net)),
      leks_(leks.field()->same_as(*field) ? leks : netmodel::embed(leks, galois::Embedding(leks.field(), field))),
      d_prime_min_(d_prime_min),
      t0_(t0) {}

Series NetworkChannel::run(const Series& tx) const {
    const std::size_t L = tx.empty() ? 0 : tx.front().size();
    const auto sim = netmodel::simulate(net_, leks_, tx, t0_, L + static_cast<std::size_t>(d_prime_min_));
    Series out(sim.size());
    for (std::size_t j = 0; j < sim.size(); ++j)
        out[j].assign(sim[j].begin() + d_prime_min_, sim[j].end());
    return out;
}

Series cp_encode(const TransformPlan& plan, const Series& inputs) {
    const std::size_t n = plan.n, dmax = static_cast<std::size_t>(plan.d_max);
    Series out(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (inputs[i].size() != n)
            throw Error(Errc::WindowMismatch, "source " + std::to_string(i) + " supplies " +
                                                  std::to_string(inputs[i].size()) + " generations, expected " +
                                                  std::to_string(n));
        const std::size_t mu = inputs[i].front().size();
        const auto Q = galois::block_dft_matrix(plan.field, plan.alpha, n, mu);
        const auto xt = Q.apply(stack_newest_first(inputs[i], 0, n));
        for (std::size_t s = 0; s < dmax; ++s) out[i].push_back(generation(xt, n - dmax + s, n, mu));
        for (std::size_t t = 0; t < n; ++t) out[i].push_back(generation(xt, t, n, mu));
    }
    return out;
}

Series cp_decode(const TransformPlan& plan, const Series& outputs) {
    const std::size_t n = plan.n, dmax = static_cast<std::size_t>(plan.d_max);
    Series out(outputs.size());
    for (std::size_t j = 0; j < outputs.size(); ++j) {
        if (outputs[j].size() != n + dmax)
            throw Error(Errc::WindowMismatch, "sink " + std::to_string(j) + " supplies " +
                                                  std::to_string(outputs[j].size()) + " slots, expected n + d_max = " +
                                                  std::to_string(n + dmax));
        const std::size_t nu = outputs[j].front().size();
        const auto Qi = galois::inverse_block_dft_matrix(plan.field, plan.alpha, n, nu);
        const auto y = Qi.apply(stack_newest_first(outputs[j], dmax, n));
        for (std::size_t t = 0; t < n; ++t) out[j].push_back(generation(y, t, n, nu));
    }
    return out;
}

Series run_block(const TransformPlan& plan, const Channel& channel, const Series& inputs) {
    return cp_decode(plan, channel.run(cp_encode(plan, inputs)));
}

Series predict(const std::vector<Matrix>& mhat, const std::vector<std::size_t>& mu_sizes,
               const std::vector<std::size_t>& nu_sizes, const Series& inputs) {
    Series out(nu_sizes.size());
    for (std::size_t t = 0; t < mhat.size(); ++t) {
        std::vector<Elem> x;
        for (std::size_t i = 0; i < mu_sizes.size(); ++i) x.insert(x.end(), inputs[i][t].begin(), inputs[i][t].end());
        const auto y = mhat[t].apply(x);
        std::size_t row = 0;
        for (std::size_t j = 0; j < nu_sizes.size(); ++j) {
            out[j].emplace_back(y.begin() + static_cast<long>(row), y.begin() + static_cast<long>(row + nu_sizes[j]));
            row += nu_sizes[j];
        }
    }
    return out;
}

std::vector<Elem> instantaneous_solve(const Matrix& mhat_j, const std::vector<std::size_t>& demanded_columns,
                                      const std::vector<Elem>& y, std::size_t t) {
    if (demanded_columns.size() != mhat_j.rows())
        throw Error(Errc::NonSquare, "sink has " + std::to_string(mhat_j.rows()) + " outputs but " +
                                         std::to_string(demanded_columns.size()) + " demands");
    const Matrix sub = mhat_j.select_columns(demanded_columns);
    if (sub.det().v == 0)
        throw Error(Errc::SingularAtGeneration, "demanded submatrix is singular at generation " + std::to_string(t));
    return sub.solve(y);
}

}  // namespace tnc::transform
