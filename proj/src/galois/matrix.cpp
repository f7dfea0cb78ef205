#include "tnc/galois/matrix.hpp"

#include <utility>

#include "tnc/error.hpp"

namespace tnc::galois {

namespace {

struct Echelon {
    Matrix m;
    std::vector<std::size_t> pivot_cols;
    Elem det_scale;  // product of pivots with sign from swaps
};

// Row reduction to reduced row echelon form over the first `ncols` columns.
Echelon reduce(Matrix m, std::size_t ncols) {
    const Field& f = *m.field();
    Echelon out{std::move(m), {}, f.one()};
    Matrix& a = out.m;
    std::size_t row = 0;
    for (std::size_t c = 0; c < ncols && row < a.rows(); ++c) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, c) == f.zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row) {
            for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(piv, k), a(row, k));
            out.det_scale = f.neg(out.det_scale);
        }
        const Elem pv = a(row, c);
        out.det_scale = f.mul(out.det_scale, pv);
        const Elem pinv = f.inv(pv);
        for (std::size_t k = 0; k < a.cols(); ++k) a(row, k) = f.mul(a(row, k), pinv);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row) continue;
            const Elem factor = a(r, c);
            if (factor == f.zero()) continue;
            for (std::size_t k = 0; k < a.cols(); ++k) a(r, k) = f.sub(a(r, k), f.mul(factor, a(row, k)));
        }
        out.pivot_cols.push_back(c);
        ++row;
    }
    return out;
}

}  // namespace

Matrix::Matrix(FieldRef field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Elem{0}) {}

Matrix Matrix::identity(FieldRef field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field->one();
    return m;
}

Matrix Matrix::column(FieldRef field, std::span<const Elem> values) {
    Matrix m(std::move(field), values.size(), 1);
    for (std::size_t i = 0; i < values.size(); ++i) m(i, 0) = values[i];
    return m;
}

Matrix Matrix::diagonal(FieldRef field, std::span<const Elem> values) {
    Matrix m(std::move(field), values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

void Matrix::require_same_field(const Matrix& o) const {
    if (!field_ || !o.field_ || !field_->same_as(*o.field_))
        throw Error(Errc::FieldMismatch, "matrices over different fields");
}

bool Matrix::is_zero() const {
    for (auto e : data_)
        if (e.v != 0) return false;
    return true;
}

bool Matrix::column_is_zero(std::size_t c) const {
    for (std::size_t r = 0; r < rows_; ++r)
        if ((*this)(r, c).v != 0) return false;
    return true;
}

std::vector<Elem> Matrix::column_values(std::size_t c) const {
    std::vector<Elem> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::InvalidArgument, "dimension mismatch in +");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_->add(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::InvalidArgument, "dimension mismatch in -");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_->sub(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_same_field(o);
    if (cols_ != o.rows_) throw Error(Errc::InvalidArgument, "dimension mismatch in *");
    const Field& f = *field_;
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Elem a = (*this)(i, k);
            if (a.v == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Elem b = o(k, j);
                if (b.v == 0) continue;
                r(i, j) = f.add(r(i, j), f.mul(a, b));
            }
        }
    }
    return r;
}

Matrix Matrix::scaled(Elem s) const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_->mul(data_[i], s);
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const {
    Matrix r(field_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(i, idx[j]);
    return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(Errc::InvalidArgument, "block out of range");
    Matrix r(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error(Errc::InvalidArgument, "block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::vector<Elem> Matrix::apply(std::span<const Elem> x) const {
    if (x.size() != cols_) throw Error(Errc::InvalidArgument, "dimension mismatch in apply");
    const Field& f = *field_;
    std::vector<Elem> y(rows_, f.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
        Elem acc = f.zero();
        for (std::size_t k = 0; k < cols_; ++k) acc = f.add(acc, f.mul((*this)(i, k), x[k]));
        y[i] = acc;
    }
    return y;
}

std::size_t Matrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    return reduce(*this, cols_).pivot_cols.size();
}

Elem Matrix::det() const {
    if (rows_ != cols_) throw Error(Errc::NonSquare, "determinant of a non-square matrix");
    if (rows_ == 0) return field_->one();
    auto e = reduce(*this, cols_);
    if (e.pivot_cols.size() < rows_) return field_->zero();
    return e.det_scale;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw Error(Errc::NonSquare, "inverse of a non-square matrix");
    auto e = reduce(hconcat(*this, identity(field_, rows_)), cols_);
    if (e.pivot_cols.size() < rows_) throw Error(Errc::Singular, "matrix is singular");
    return e.m.block(0, cols_, rows_, rows_);
}

std::vector<Elem> Matrix::solve(std::span<const Elem> b) const {
    if (rows_ != cols_) throw Error(Errc::NonSquare, "solve needs a square matrix");
    auto x = solve_exact(b);
    if (!x) throw Error(Errc::Singular, "matrix is singular");
    return *x;
}

std::optional<std::vector<Elem>> Matrix::solve_exact(std::span<const Elem> b) const {
    if (b.size() != rows_) throw Error(Errc::InvalidArgument, "dimension mismatch in solve");
    auto e = reduce(hconcat(*this, column(field_, b)), cols_);
    if (e.pivot_cols.size() < cols_) return std::nullopt;
    // consistency: rows below the pivots must vanish in the augmented column
    for (std::size_t r = cols_; r < rows_; ++r)
        if (e.m(r, cols_).v != 0) return std::nullopt;
    std::vector<Elem> x(cols_);
    for (std::size_t r = 0; r < cols_; ++r) x[r] = e.m(r, cols_);
    return x;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    if (rows_ * cols_ == 0) return true;
    if (!field_->same_as(*o.field_)) return false;
    return data_ == o.data_;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw Error(Errc::InvalidArgument, "row mismatch in hconcat");
    Matrix r(a.field() ? a.field() : b.field(), a.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw Error(Errc::InvalidArgument, "column mismatch in vconcat");
    Matrix r(a.field() ? a.field() : b.field(), a.rows() + b.rows(), a.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    const Field& f = *a.field();
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
    return r;
}

Matrix block_diagonal(std::span<const Matrix> blocks) {
    if (blocks.empty()) return {};
    std::size_t nr = 0, nc = 0;
    for (const auto& b : blocks) {
        nr += b.rows();
        nc += b.cols();
    }
    Matrix r(blocks.front().field(), nr, nc);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        r.set_block(r0, c0, b);
        r0 += b.rows();
        c0 += b.cols();
    }
    return r;
}

}  // namespace tnc::galois
