#pragma once

// Shared helpers for the unit suites: seeded generators and independent
// oracles that do not go through the code paths they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "tnc/galois/field.hpp"
#include "tnc/galois/matrix.hpp"
#include "tnc/galois/poly.hpp"
#include "tnc/galois/poly_matrix.hpp"

namespace tnc::test {

using galois::Elem;
using galois::Field;
using galois::FieldRef;
using galois::Matrix;
using galois::Poly;
using galois::PolyMatrix;

inline Elem random_elem(const Field& f, std::mt19937_64& rng) { return Elem{rng() % f.order()}; }

inline Elem random_nonzero(const Field& f, std::mt19937_64& rng) { return Elem{1 + rng() % (f.order() - 1)}; }

inline Matrix random_matrix(const FieldRef& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_elem(*f, rng);
    return m;
}

inline Poly random_poly(const FieldRef& f, std::size_t max_degree, std::mt19937_64& rng) {
    std::vector<Elem> c(max_degree + 1);
    for (auto& e : c) e = random_elem(*f, rng);
    return Poly(f, std::move(c));
}

inline PolyMatrix random_poly_matrix(const FieldRef& f, std::size_t n, std::size_t max_degree,
                                     std::mt19937_64& rng) {
    PolyMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(f, rng() % (max_degree + 1), rng);
    return m;
}

/// Leibniz expansion over all permutations: the symbolic determinant oracle.
inline Poly leibniz_det(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    const FieldRef& f = m.field();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Poly total(f);
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Poly term = Poly::constant(f, f->one());
        for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
        total = (inversions % 2 == 0) ? total + term : total - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Leibniz determinant of a scalar matrix.
inline Elem leibniz_det(const Matrix& m) {
    PolyMatrix pm(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) pm(i, j) = Poly::constant(m.field(), m(i, j));
    return leibniz_det(pm).coeff(0);
}

}  // namespace tnc::test
