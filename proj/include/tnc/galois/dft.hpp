#pragma once

#include <cstddef>

#include "tnc/galois/matrix.hpp"

namespace tnc::galois {

/// F[i][j] = alpha^(i j). Requires ord(alpha) == n and p not dividing n.
Matrix dft_matrix(const FieldRef& field, Elem alpha, std::size_t n);

/// F^-1[i][j] = n^-1 alpha^(-i j).
Matrix inverse_dft_matrix(const FieldRef& field, Elem alpha, std::size_t n);

/// Q_mu = F (x) I_mu and its inverse F^-1 (x) I_mu.
Matrix block_dft_matrix(const FieldRef& field, Elem alpha, std::size_t n, std::size_t mu);
Matrix inverse_block_dft_matrix(const FieldRef& field, Elem alpha, std::size_t n, std::size_t mu);

}  // namespace tnc::galois
