#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tnc::galois {

/// Parameters of GF(p^m) in polynomial basis.
///
/// `modulus` holds the m+1 coefficients of a monic irreducible polynomial over
/// GF(p), lowest degree first.
struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t m = 1;
    std::vector<std::uint32_t> modulus;

    std::uint64_t order() const;
    bool operator==(const FieldSpec&) const = default;
};

/// An element of GF(p^m), packed as the integer sum c_i * p^i of its
/// polynomial-basis coefficients. Comparison follows that integer, which is
/// the order used everywhere a "smallest" element is selected.
struct Elem {
    std::uint64_t v = 0;

    constexpr auto operator<=>(const Elem&) const = default;
};

class Field;
using FieldRef = std::shared_ptr<const Field>;

/// Immutable finite field GF(p^m). All arithmetic is exact and thread safe.
class Field {
public:
    /// Builds and verifies a field. Without a modulus the smallest monic
    /// irreducible of degree m is selected (coefficients compared from the
    /// highest degree down, so GF(64) gets 1 + x + x^6).
    static FieldRef build(std::uint32_t p, std::uint32_t m,
                          std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
    static FieldRef build(const FieldSpec& spec) { return build(spec.p, spec.m, spec.modulus); }

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t characteristic() const { return spec_.p; }
    std::uint32_t degree() const { return spec_.m; }
    std::uint64_t order() const { return q_; }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t k) const;
    Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(Elem a) const;
    bool contains(Elem a) const { return a.v < q_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    /// a^e for signed e; a must be nonzero when e < 0.
    Elem pow_signed(Elem a, std::int64_t e) const;

    /// Smallest element of multiplicative order q-1.
    Elem generator() const { return generator_; }
    /// Multiplicative order of a nonzero element.
    std::uint64_t element_order(Elem a) const;
    /// generator^((q-1)/n): deterministic element of exact order n.
    Elem element_of_order(std::uint64_t n) const;
    /// Distinct prime factors of q-1, ascending.
    const std::vector<std::uint64_t>& group_order_primes() const { return qm1_primes_; }

    /// Human readable rendering, e.g. "1+x^2".
    std::string to_string(Elem a) const;

    bool same_as(const Field& other) const { return this == &other || spec_ == other.spec_; }

private:
    explicit Field(FieldSpec spec);

    FieldSpec spec_;
    std::uint64_t q_ = 0;
    std::uint64_t mod_bits_ = 0;  // p == 2 only: modulus as a bit mask
    std::vector<std::uint64_t> qm1_primes_;
    Elem generator_{};
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, std::uint32_t exp);

/// Trial-division irreducibility test for a polynomial over GF(p),
/// coefficients lowest degree first.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

}  // namespace tnc::galois
