#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tnc/galois/field.hpp"

namespace tnc::galois {

class Embedding;

/// Polynomial in the delay variable D over GF(q). Coefficients are stored
/// lowest degree first and kept normalized (no trailing zeros), so the zero
/// polynomial has an empty coefficient list.
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldRef field) : field_(std::move(field)) {}
    Poly(FieldRef field, std::vector<Elem> coeffs);

    static Poly constant(FieldRef field, Elem c);
    /// c * D^k
    static Poly monomial(FieldRef field, Elem c, std::size_t k);

    const FieldRef& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Smallest exponent with a nonzero coefficient; -1 for zero.
    long low_degree() const;
    Elem coeff(std::size_t d) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Elem s) const;
    /// Multiplies by D^k.
    Poly shifted_up(std::size_t k) const;
    /// Divides by D^k; the low k coefficients must be zero.
    Poly shifted_down(std::size_t k) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    Elem eval(Elem x) const;
    /// Evaluates at a point of an extension field, mapping coefficients first.
    Elem eval(const Embedding& emb, Elem x) const;
    Poly embedded(const Embedding& emb) const;

    /// e.g. "D^25", "1 + D^2", "(1+x)*D^3".
    std::string to_string() const;

    bool operator==(const Poly& o) const;

private:
    void normalize();
    const Field& f() const { return *field_; }

    FieldRef field_;
    std::vector<Elem> coeffs_;
};

}  // namespace tnc::galois
