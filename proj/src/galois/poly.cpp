#include "tnc/galois/poly.hpp"

#include <algorithm>

#include "tnc/error.hpp"
#include "tnc/galois/embedding.hpp"

namespace tnc::galois {

Poly::Poly(FieldRef field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    normalize();
}

Poly Poly::constant(FieldRef field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldRef field, Elem c, std::size_t k) {
    std::vector<Elem> v(k + 1, Elem{0});
    v[k] = c;
    return Poly(std::move(field), std::move(v));
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().v == 0) coeffs_.pop_back();
}

long Poly::low_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i].v != 0) return static_cast<long>(i);
    return -1;
}

Elem Poly::coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Elem{0}; }

Poly Poly::operator+(const Poly& o) const {
    const FieldRef& fr = field_ ? field_ : o.field_;
    std::vector<Elem> r(std::max(coeffs_.size(), o.coeffs_.size()), Elem{0});
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = fr->add(coeff(i), o.coeff(i));
    return Poly(fr, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    const FieldRef& fr = field_ ? field_ : o.field_;
    std::vector<Elem> r(std::max(coeffs_.size(), o.coeffs_.size()), Elem{0});
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = fr->sub(coeff(i), o.coeff(i));
    return Poly(fr, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    const FieldRef& fr = field_ ? field_ : o.field_;
    if (is_zero() || o.is_zero()) return Poly(fr);
    std::vector<Elem> r(coeffs_.size() + o.coeffs_.size() - 1, Elem{0});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].v == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] = fr->add(r[i + j], fr->mul(coeffs_[i], o.coeffs_[j]));
    }
    return Poly(fr, std::move(r));
}

Poly Poly::scaled(Elem s) const {
    std::vector<Elem> r(coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f().mul(coeffs_[i], s);
    return Poly(field_, std::move(r));
}

Poly Poly::shifted_up(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Elem> r(k, Elem{0});
    r.insert(r.end(), coeffs_.begin(), coeffs_.end());
    return Poly(field_, std::move(r));
}

Poly Poly::shifted_down(std::size_t k) const {
    if (is_zero()) return *this;
    for (std::size_t i = 0; i < std::min(k, coeffs_.size()); ++i)
        if (coeffs_[i].v != 0) throw Error(Errc::InvalidArgument, "shifted_down would drop nonzero terms");
    if (k >= coeffs_.size()) return Poly(field_);
    return Poly(field_, std::vector<Elem>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division by zero");
    const FieldRef& fr = field_ ? field_ : divisor.field_;
    std::vector<Elem> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    if (rem.size() <= dd) return {Poly(fr), *this};
    std::vector<Elem> quo(rem.size() - dd, Elem{0});
    const Elem lead_inv = fr->inv(divisor.coeffs_.back());
    for (std::size_t k = rem.size(); k-- > dd;) {
        const Elem c = fr->mul(rem[k], lead_inv);
        if (c.v == 0) continue;
        quo[k - dd] = c;
        for (std::size_t i = 0; i <= dd; ++i)
            rem[k - dd + i] = fr->sub(rem[k - dd + i], fr->mul(c, divisor.coeffs_[i]));
    }
    return {Poly(fr, std::move(quo)), Poly(fr, std::move(rem))};
}

Elem Poly::eval(Elem x) const {
    Elem acc{0};
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = f().add(f().mul(acc, x), coeffs_[i]);
    return acc;
}

Elem Poly::eval(const Embedding& emb, Elem x) const {
    const Field& big = *emb.to();
    Elem acc{0};
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = big.add(big.mul(acc, x), emb(coeffs_[i]));
    return acc;
}

Poly Poly::embedded(const Embedding& emb) const {
    std::vector<Elem> r(coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = emb(coeffs_[i]);
    return Poly(emb.to(), std::move(r));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Elem c = coeffs_[i];
        if (c.v == 0) continue;
        if (!out.empty()) out += " + ";
        std::string cs = f().to_string(c);
        const bool compound = cs.find('+') != std::string::npos || cs.find('x') != std::string::npos;
        if (compound && i > 0) cs = "(" + cs + ")";
        if (i == 0) {
            out += cs;
        } else {
            if (c != f().one()) out += cs + "*";
            out += "D";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

bool Poly::operator==(const Poly& o) const {
    if (coeffs_ != o.coeffs_) return false;
    if (coeffs_.empty()) return true;
    return field_->same_as(*o.field_);
}

}  // namespace tnc::galois
