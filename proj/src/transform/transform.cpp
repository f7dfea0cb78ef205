#include "tnc/transform/transform.hpp"

#include <string>

#include "tnc/error.hpp"
#include "tnc/galois/dft.hpp"
#include "tnc/galois/embedding.hpp"

namespace tnc::transform {

namespace {

Matrix embed_matrix(const Matrix& m, const FieldRef& to) {
    if (m.field()->same_as(*to)) return m;
    galois::Embedding emb(m.field(), to);
    Matrix out(to, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = emb(m(r, c));
    return out;
}

}  // namespace

TransformPlan make_plan(const FieldRef& field, std::size_t n, long d_max) {
    if (n == 0) throw Error(Errc::InvalidArgument, "block length must be positive");
    if (n % field->characteristic() == 0)
        throw Error(Errc::CharacteristicDividesN, "characteristic divides n = " + std::to_string(n));
    if (static_cast<long>(n) <= d_max)
        throw Error(Errc::BlockTooLong, "d_max = " + std::to_string(d_max) + " is not below n = " + std::to_string(n));
    return TransformPlan{n, field, field->element_of_order(n), d_max};
}

void check_plan_invariants(const TransformPlan& plan) {
    if (plan.n == 0) throw Error(Errc::InvalidArgument, "block length must be positive");
    if (plan.n % plan.field->characteristic() == 0)
        throw Error(Errc::CharacteristicDividesN, "characteristic divides n = " + std::to_string(plan.n));
    if (static_cast<long>(plan.n) <= plan.d_max) throw Error(Errc::BlockTooLong, "d_max is not below n");
    if (plan.alpha.v == 0 || !plan.field->contains(plan.alpha) || plan.field->element_order(plan.alpha) != plan.n)
        throw Error(Errc::WrongOrder, "alpha does not have order " + std::to_string(plan.n));
}

BlockCirculant build_circulant(const PolyMatrix& M, std::size_t n) {
    if (n == 0) throw Error(Errc::InvalidArgument, "block length must be positive");
    if (M.max_degree() >= static_cast<long>(n))
        throw Error(Errc::BlockTooLong, "degree " + std::to_string(M.max_degree()) + " needs n > " +
                                            std::to_string(M.max_degree()) + ", got n = " + std::to_string(n));
    BlockCirculant c;
    c.n = n;
    c.base = M.coefficients();
    const std::size_t nu = M.rows(), mu = M.cols();
    c.realized = Matrix(M.field(), n * nu, n * mu);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t d = 0; d < c.base.size(); ++d) c.realized.set_block(r * nu, ((r + d) % n) * mu, c.base[d]);
    return c;
}

std::vector<Matrix> diagonalize(const BlockCirculant& c, const TransformPlan& plan) {
    if (c.n != plan.n) throw Error(Errc::InvalidArgument, "circulant and plan disagree on n");
    const galois::Field& F = *plan.field;
    std::vector<Matrix> base;
    for (const auto& b : c.base) base.push_back(embed_matrix(b, plan.field));
    std::vector<Matrix> out;
    for (std::size_t t = 0; t < plan.n; ++t) {
        const Elem x = F.pow(plan.alpha, plan.n - 1 - t);
        Matrix acc(plan.field, base.front().rows(), base.front().cols());
        Elem xd = F.one();
        for (const auto& b : base) {
            acc = acc + b.scaled(xd);
            xd = F.mul(xd, x);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<Matrix> eigen_blocks(const PolyMatrix& M, const TransformPlan& plan) {
    const galois::Field& F = *plan.field;
    std::vector<Matrix> out;
    if (M.field()->same_as(F)) {
        for (std::size_t t = 0; t < plan.n; ++t) out.push_back(M.eval(F.pow(plan.alpha, plan.n - 1 - t)));
    } else {
        galois::Embedding emb(M.field(), plan.field);
        for (std::size_t t = 0; t < plan.n; ++t) out.push_back(M.eval(emb, F.pow(plan.alpha, plan.n - 1 - t)));
    }
    return out;
}

Matrix reassemble(const std::vector<Matrix>& mhat, const TransformPlan& plan) {
    if (mhat.size() != plan.n) throw Error(Errc::InvalidArgument, "need one eigen block per generation");
    const std::size_t nu = mhat.front().rows(), mu = mhat.front().cols();
    std::vector<Matrix> diag(mhat.rbegin(), mhat.rend());
    return galois::block_dft_matrix(plan.field, plan.alpha, plan.n, nu) * galois::block_diagonal(diag) *
           galois::inverse_block_dft_matrix(plan.field, plan.alpha, plan.n, mu);
}

Matrix realized_in(const BlockCirculant& c, const TransformPlan& plan) { return embed_matrix(c.realized, plan.field); }

}  // namespace tnc::transform
