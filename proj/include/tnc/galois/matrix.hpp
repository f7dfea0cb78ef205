#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tnc/galois/field.hpp"

namespace tnc::galois {

/// Dense matrix over a finite field, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldRef field, std::size_t rows, std::size_t cols);

    static Matrix identity(FieldRef field, std::size_t n);
    static Matrix column(FieldRef field, std::span<const Elem> values);
    static Matrix diagonal(FieldRef field, std::span<const Elem> values);

    const FieldRef& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool column_is_zero(std::size_t c) const;
    std::vector<Elem> column_values(std::size_t c) const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(Elem s) const;
    Matrix transposed() const;

    /// Columns `idx` in the given order.
    Matrix select_columns(std::span<const std::size_t> idx) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    std::vector<Elem> apply(std::span<const Elem> x) const;

    std::size_t rank() const;
    Elem det() const;
    /// Throws Errc::Singular when not invertible.
    Matrix inverse() const;
    /// Solves A x = b for square nonsingular A.
    std::vector<Elem> solve(std::span<const Elem> b) const;
    /// Solves A x = b when A has full column rank and b lies in its column
    /// space; returns nullopt otherwise.
    std::optional<std::vector<Elem>> solve_exact(std::span<const Elem> b) const;

    bool operator==(const Matrix& o) const;

private:
    void require_same_field(const Matrix& o) const;

    FieldRef field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix vconcat(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix block_diagonal(std::span<const Matrix> blocks);

}  // namespace tnc::galois
