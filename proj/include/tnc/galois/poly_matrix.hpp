#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tnc/galois/matrix.hpp"
#include "tnc/galois/poly.hpp"

namespace tnc::galois {

/// Matrix with entries in GF(q)[D]. M(D) = sum_d coefficient(d) D^d.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(FieldRef field, std::size_t rows, std::size_t cols);
    /// Builds sum_d coeffs[d] D^d.
    static PolyMatrix from_coefficients(std::span<const Matrix> coeffs);

    const FieldRef& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Largest entry degree; -1 for the zero matrix.
    long max_degree() const;
    /// Smallest exponent carrying a nonzero coefficient; -1 for zero.
    long min_low_degree() const;
    Matrix coefficient(std::size_t d) const;
    std::vector<Matrix> coefficients() const;

    Matrix eval(Elem x) const;
    Matrix eval(const Embedding& emb, Elem x) const;

    PolyMatrix select_columns(std::span<const std::size_t> idx) const;
    PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    PolyMatrix shifted_up(std::size_t k) const;
    PolyMatrix shifted_down(std::size_t k) const;
    PolyMatrix operator*(const PolyMatrix& o) const;

    /// Fraction-free (Bareiss) determinant over GF(q)[D].
    Poly det() const;

    bool operator==(const PolyMatrix& o) const;

private:
    FieldRef field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Poly> data_;
};

}  // namespace tnc::galois
