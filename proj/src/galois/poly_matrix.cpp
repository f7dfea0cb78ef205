#include "tnc/galois/poly_matrix.hpp"

#include <algorithm>
#include <utility>

#include "tnc/error.hpp"
#include "tnc/galois/embedding.hpp"

namespace tnc::galois {

PolyMatrix::PolyMatrix(FieldRef field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Poly(field)) {}

PolyMatrix PolyMatrix::from_coefficients(std::span<const Matrix> coeffs) {
    if (coeffs.empty()) throw Error(Errc::InvalidArgument, "no coefficient matrices");
    const auto& first = coeffs.front();
    PolyMatrix m(first.field(), first.rows(), first.cols());
    for (std::size_t r = 0; r < m.rows_; ++r) {
        for (std::size_t c = 0; c < m.cols_; ++c) {
            std::vector<Elem> v(coeffs.size());
            for (std::size_t d = 0; d < coeffs.size(); ++d) v[d] = coeffs[d](r, c);
            m(r, c) = Poly(m.field_, std::move(v));
        }
    }
    return m;
}

long PolyMatrix::max_degree() const {
    long d = -1;
    for (const auto& p : data_) d = std::max(d, p.degree());
    return d;
}

long PolyMatrix::min_low_degree() const {
    long d = -1;
    for (const auto& p : data_) {
        const long l = p.low_degree();
        if (l >= 0 && (d < 0 || l < d)) d = l;
    }
    return d;
}

Matrix PolyMatrix::coefficient(std::size_t d) const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).coeff(d);
    return m;
}

std::vector<Matrix> PolyMatrix::coefficients() const {
    const long deg = std::max<long>(max_degree(), 0);
    std::vector<Matrix> out;
    for (long d = 0; d <= deg; ++d) out.push_back(coefficient(static_cast<std::size_t>(d)));
    return out;
}

Matrix PolyMatrix::eval(Elem x) const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m(i / cols_, i % cols_) = data_[i].eval(x);
    return m;
}

Matrix PolyMatrix::eval(const Embedding& emb, Elem x) const {
    Matrix m(emb.to(), rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m(i / cols_, i % cols_) = data_[i].eval(emb, x);
    return m;
}

PolyMatrix PolyMatrix::select_columns(std::span<const std::size_t> idx) const {
    PolyMatrix m(field_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < idx.size(); ++j) m(r, j) = (*this)(r, idx[j]);
    return m;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(Errc::InvalidArgument, "block out of range");
    PolyMatrix m(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
    return m;
}

PolyMatrix PolyMatrix::shifted_up(std::size_t k) const {
    PolyMatrix m = *this;
    for (auto& p : m.data_) p = p.shifted_up(k);
    return m;
}

PolyMatrix PolyMatrix::shifted_down(std::size_t k) const {
    PolyMatrix m = *this;
    for (auto& p : m.data_) p = p.shifted_down(k);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw Error(Errc::InvalidArgument, "dimension mismatch in *");
    PolyMatrix m(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) {
            Poly acc(field_);
            for (std::size_t k = 0; k < cols_; ++k) acc = acc + (*this)(i, k) * o(k, j);
            m(i, j) = std::move(acc);
        }
    return m;
}

Poly PolyMatrix::det() const {
    if (rows_ != cols_) throw Error(Errc::NonSquare, "determinant of a non-square polynomial matrix");
    const std::size_t n = rows_;
    if (n == 0) return Poly::constant(field_, field_->one());
    std::vector<Poly> a = data_;
    auto at = [&](std::size_t r, std::size_t c) -> Poly& { return a[r * n + c]; };
    Poly prev = Poly::constant(field_, field_->one());
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && at(piv, k).is_zero()) ++piv;
            if (piv == n) return Poly(field_);
            for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(piv, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                auto [q, r] = num.divmod(prev);
                if (!r.is_zero()) throw Error(Errc::InvalidArgument, "Bareiss division was not exact");
                at(i, j) = std::move(q);
            }
            at(i, k) = Poly(field_);
        }
        prev = at(k, k);
    }
    Poly d = at(n - 1, n - 1);
    if (negate) d = d.scaled(field_->neg(field_->one()));
    return d;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

}  // namespace tnc::galois
