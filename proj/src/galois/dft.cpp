#include "tnc/galois/dft.hpp"

#include <string>

#include "tnc/error.hpp"

namespace tnc::galois {

namespace {

void check_dft_params(const Field& f, Elem alpha, std::size_t n) {
    if (n == 0) throw Error(Errc::InvalidArgument, "DFT size must be positive");
    if (n % f.characteristic() == 0)
        throw Error(Errc::CharacteristicDividesN,
                    "characteristic " + std::to_string(f.characteristic()) + " divides n = " + std::to_string(n));
    if (alpha.v == 0 || f.element_order(alpha) != n)
        throw Error(Errc::WrongOrder, "alpha does not have multiplicative order " + std::to_string(n));
}

}  // namespace

Matrix dft_matrix(const FieldRef& field, Elem alpha, std::size_t n) {
    const Field& f = *field;
    check_dft_params(f, alpha, n);
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Elem row_base = f.pow(alpha, i);
        Elem e = f.one();
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = e;
            e = f.mul(e, row_base);
        }
    }
    return m;
}

Matrix inverse_dft_matrix(const FieldRef& field, Elem alpha, std::size_t n) {
    const Field& f = *field;
    check_dft_params(f, alpha, n);
    const Elem n_inv = f.inv(f.from_int(static_cast<std::int64_t>(n)));
    const Elem alpha_inv = f.inv(alpha);
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Elem row_base = f.pow(alpha_inv, i);
        Elem e = n_inv;
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = e;
            e = f.mul(e, row_base);
        }
    }
    return m;
}

Matrix block_dft_matrix(const FieldRef& field, Elem alpha, std::size_t n, std::size_t mu) {
    return kron(dft_matrix(field, alpha, n), Matrix::identity(field, mu));
}

Matrix inverse_block_dft_matrix(const FieldRef& field, Elem alpha, std::size_t n, std::size_t mu) {
    return kron(inverse_dft_matrix(field, alpha, n), Matrix::identity(field, mu));
}

}  // namespace tnc::galois
