#pragma once

#include <cstddef>
#include <vector>

#include "tnc/galois/matrix.hpp"
#include "tnc/galois/poly_matrix.hpp"

namespace tnc::transform {

using galois::Elem;
using galois::FieldRef;
using galois::Matrix;
using galois::PolyMatrix;

/// Block length n, operating field and an element alpha of order exactly n.
struct TransformPlan {
    std::size_t n = 1;
    FieldRef field;
    Elem alpha;
    long d_max = 0;
};

/// Plan with alpha = element_of_order(n). Throws CharacteristicDividesN,
/// NoSuchElement or BlockTooLong (n <= d_max).
TransformPlan make_plan(const FieldRef& field, std::size_t n, long d_max);
/// Same checks for a plan assembled by hand; also WrongOrder.
void check_plan_invariants(const TransformPlan& plan);

/// Block circulant whose first block row is [A_0, ..., A_L, 0, ..., 0] and
/// whose every further block row is the previous one shifted right.
struct BlockCirculant {
    std::size_t n = 0;
    std::vector<Matrix> base;  // A_0 .. A_L
    Matrix realized;           // n rows x n columns of blocks
};

/// Throws BlockTooLong when deg M >= n.
BlockCirculant build_circulant(const PolyMatrix& M, std::size_t n);

/// Eigen blocks of the circulant: entry t is
///   Mhat(t) = sum_d alpha^{d (n-1-t)} A_d  =  M(alpha^{n-1-t}),
/// computed in the plan's field (base blocks are embedded if needed).
std::vector<Matrix> diagonalize(const BlockCirculant& c, const TransformPlan& plan);

/// Same quantity straight from a polynomial matrix.
std::vector<Matrix> eigen_blocks(const PolyMatrix& M, const TransformPlan& plan);

/// Q_nu blockdiag(Mhat(n-1), ..., Mhat(0)) Q_mu^-1 with Q_k = F (x) I_k.
Matrix reassemble(const std::vector<Matrix>& mhat, const TransformPlan& plan);

/// Circulant realized in the plan's field, for comparison with reassemble.
Matrix realized_in(const BlockCirculant& c, const TransformPlan& plan);

}  // namespace tnc::transform
