#pragma once

#include <vector>

#include "tnc/galois/field.hpp"

namespace tnc::galois {

/// Field homomorphism GF(p^m) -> GF(p^{m a}).
///
/// The polynomial-basis variable x of the small field is sent to the root of
/// the small modulus inside the large field that has the smallest exponent
/// with respect to the large field's generator restricted to the subfield.
/// That keeps the map deterministic and additive as well as multiplicative.
class Embedding {
public:
    Embedding(FieldRef from, FieldRef to);

    const FieldRef& from() const { return from_; }
    const FieldRef& to() const { return to_; }
    bool is_identity() const { return identity_; }

    Elem operator()(Elem a) const;

private:
    FieldRef from_;
    FieldRef to_;
    bool identity_ = false;
    std::vector<Elem> basis_images_;  // images of 1, x, x^2, ...
};

/// Smallest extension GF(p^{m a}) with a <= max_degree whose multiplicative
/// group has an element of order n; returns a = 0 when none exists.
std::uint32_t extension_degree_for_order(const FieldSpec& base, std::uint64_t n, std::uint32_t max_degree);

}  // namespace tnc::galois
