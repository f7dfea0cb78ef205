#include "tnc/galois/field.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "tnc/error.hpp"

namespace tnc::galois {

namespace {

// Largest supported field order. Keeps packed products and the trial
// division used for q-1 comfortably inside 64-bit arithmetic.
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;

using Digits = std::vector<std::uint32_t>;

// Polynomials over GF(p) as digit vectors, lowest degree first.
void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits poly_mod_p(Digits a, const Digits& b, std::uint32_t p) {
    trim(a);
    // b is monic when called from the irreducibility test
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = (c * b[i]) % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Digits unpack(std::uint64_t v, std::uint32_t p, std::uint32_t m) {
    Digits d(m, 0);
    for (std::uint32_t i = 0; i < m && v != 0; ++i) {
        d[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
    }
    return d;
}

std::uint64_t pack(const Digits& d, std::uint32_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b != 0) {
        if (b & 1U) r ^= a;
        a <<= 1U;
        b >>= 1U;
    }
    return r;
}

}  // namespace

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / base)
            throw Error(Errc::InvalidArgument, "integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
    Digits f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // normalize to monic
    std::uint64_t lead_inv = 1;
    for (std::uint32_t k = 1; k < p; ++k)
        if ((static_cast<std::uint64_t>(k) * f.back()) % p == 1) lead_inv = k;
    for (auto& c : f) c = static_cast<std::uint32_t>((c * lead_inv) % p);

    // every monic divisor of degree d, 1 <= d <= deg/2
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
        for (std::uint64_t low = 0; low < count; ++low) {
            Digits g = unpack(low, p, static_cast<std::uint32_t>(d));
            g.push_back(1);
            if (poly_mod_p(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::uint64_t FieldSpec::order() const { return ipow(p, m); }

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    q_ = spec_.order();
    if (spec_.p == 2) {
        for (std::uint32_t i = 0; i <= spec_.m; ++i)
            if (spec_.modulus[i] != 0) mod_bits_ |= std::uint64_t{1} << i;
    }
    qm1_primes_ = prime_factors(q_ - 1);
    if (q_ == 2) {
        generator_ = one();
        return;
    }
    for (std::uint64_t v = 1; v < q_; ++v) {
        if (element_order(Elem{v}) == q_ - 1) {
            generator_ = Elem{v};
            break;
        }
    }
}

FieldRef Field::build(std::uint32_t p, std::uint32_t m,
                      std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (m < 1) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
    std::uint64_t q = 0;
    try {
        q = ipow(p, m);
    } catch (const Error&) {
        q = kMaxOrder + 1;
    }
    if (q > kMaxOrder)
        throw Error(Errc::InvalidArgument, "field order exceeds the supported 2^32");

    FieldSpec spec{p, m, {}};
    if (modulus) {
        auto& mod = *modulus;
        if (mod.size() != m + 1 || mod.back() != 1)
            throw Error(Errc::InvalidArgument, "modulus must be monic of degree " + std::to_string(m));
        for (auto c : mod)
            if (c >= p) throw Error(Errc::InvalidArgument, "modulus coefficient out of range");
        if (!is_irreducible(p, mod)) throw Error(Errc::ReducibleModulus, "modulus is reducible");
        spec.modulus = mod;
    } else {
        const std::uint64_t count = ipow(p, m);
        for (std::uint64_t low = 0; low < count; ++low) {
            Digits cand = unpack(low, p, m);
            cand.push_back(1);
            if (is_irreducible(p, cand)) {
                spec.modulus = std::move(cand);
                break;
            }
        }
    }
    return FieldRef(new Field(std::move(spec)));
}

Elem Field::from_int(std::int64_t k) const {
    const auto p = static_cast<std::int64_t>(spec_.p);
    return Elem{static_cast<std::uint64_t>(((k % p) + p) % p)};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > spec_.m) {
        for (std::size_t i = spec_.m; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) throw Error(Errc::InvalidArgument, "element has too many coefficients");
    }
    Digits d(spec_.m, 0);
    for (std::size_t i = 0; i < std::min<std::size_t>(coeffs.size(), spec_.m); ++i) {
        if (coeffs[i] >= spec_.p) throw Error(Errc::InvalidArgument, "element coefficient out of range");
        d[i] = coeffs[i];
    }
    return Elem{pack(d, spec_.p)};
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const { return unpack(a.v, spec_.p, spec_.m); }

Elem Field::add(Elem a, Elem b) const {
    if (spec_.p == 2) return Elem{a.v ^ b.v};
    if (spec_.m == 1) return Elem{(a.v + b.v) % spec_.p};
    Digits x = unpack(a.v, spec_.p, spec_.m);
    Digits y = unpack(b.v, spec_.p, spec_.m);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % spec_.p;
    return Elem{pack(x, spec_.p)};
}

Elem Field::neg(Elem a) const {
    if (spec_.p == 2) return a;
    if (spec_.m == 1) return Elem{(spec_.p - a.v) % spec_.p};
    Digits x = unpack(a.v, spec_.p, spec_.m);
    for (auto& c : x) c = (spec_.p - c) % spec_.p;
    return Elem{pack(x, spec_.p)};
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return zero();
    const std::uint32_t m = spec_.m;
    if (spec_.p == 2) {
        std::uint64_t r = clmul(a.v, b.v);
        for (std::uint32_t k = 2 * m - 1; k-- > m;)
            if (r & (std::uint64_t{1} << k)) r ^= mod_bits_ << (k - m);
        return Elem{r};
    }
    const std::uint64_t p = spec_.p;
    if (m == 1) return Elem{(a.v * b.v) % p};
    const Digits x = unpack(a.v, spec_.p, m);
    const Digits y = unpack(b.v, spec_.p, m);
    std::vector<std::uint64_t> r(2 * m - 1, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        if (x[i] == 0) continue;
        for (std::uint32_t j = 0; j < m; ++j) r[i + j] = (r[i + j] + std::uint64_t{x[i]} * y[j]) % p;
    }
    for (std::uint32_t k = 2 * m - 1; k-- > m;) {
        const std::uint64_t c = r[k];
        if (c == 0) continue;
        for (std::uint32_t i = 0; i <= m; ++i) {
            const std::uint64_t s = (c * spec_.modulus[i]) % p;
            r[k - m + i] = (r[k - m + i] + p - s) % p;
        }
    }
    Digits d(m);
    for (std::uint32_t i = 0; i < m; ++i) d[i] = static_cast<std::uint32_t>(r[i]);
    return Elem{pack(d, spec_.p)};
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem r = one();
    Elem base = a;
    while (e != 0) {
        if (e & 1U) r = mul(r, base);
        base = mul(base, base);
        e >>= 1U;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a.v == 0) throw Error(Errc::Singular, "inverse of zero");
    return pow(a, q_ - 2);
}

Elem Field::pow_signed(Elem a, std::int64_t e) const {
    if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
    const auto k = static_cast<std::uint64_t>(-(e + 1)) + 1;
    return inv(pow(a, k % (q_ - 1)));
}

std::uint64_t Field::element_order(Elem a) const {
    if (a.v == 0) throw Error(Errc::InvalidArgument, "zero has no multiplicative order");
    std::uint64_t ord = q_ - 1;
    for (auto f : qm1_primes_) {
        while (ord % f == 0 && pow(a, ord / f) == one()) ord /= f;
    }
    return ord;
}

Elem Field::element_of_order(std::uint64_t n) const {
    if (n == 0 || (q_ - 1) % n != 0)
        throw Error(Errc::NoSuchElement,
                    "no element of order " + std::to_string(n) + " in a field of order " + std::to_string(q_));
    return pow(generator_, (q_ - 1) / n);
}

std::string Field::to_string(Elem a) const {
    if (a.v == 0) return "0";
    const Digits d = coeffs(a);
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        const bool show_coeff = d[i] != 1 || i == 0;
        if (show_coeff) out += std::to_string(d[i]);
        if (i >= 1) {
            if (show_coeff) out += "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace tnc::galois
