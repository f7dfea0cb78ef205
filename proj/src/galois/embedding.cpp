#include "tnc/galois/embedding.hpp"

#include "tnc/error.hpp"

namespace tnc::galois {

Embedding::Embedding(FieldRef from, FieldRef to) : from_(std::move(from)), to_(std::move(to)) {
    if (from_->same_as(*to_)) {
        identity_ = true;
        return;
    }
    const auto& fs = from_->spec();
    const auto& ts = to_->spec();
    if (fs.p != ts.p || ts.m % fs.m != 0)
        throw Error(Errc::NotSubfield, "GF(" + std::to_string(fs.p) + "^" + std::to_string(fs.m) +
                                           ") is not a subfield of GF(" + std::to_string(ts.p) + "^" +
                                           std::to_string(ts.m) + ")");

    // Prime fields embed trivially.
    if (fs.m == 1) {
        basis_images_ = {to_->one()};
        return;
    }

    const std::uint64_t q_small = from_->order();
    const std::uint64_t q_big = to_->order();
    const Elem h = to_->pow(to_->generator(), (q_big - 1) / (q_small - 1));

    auto eval_modulus = [&](Elem x) {
        Elem acc = to_->zero();
        for (std::size_t i = fs.modulus.size(); i-- > 0;)
            acc = to_->add(to_->mul(acc, x), to_->from_int(fs.modulus[i]));
        return acc;
    };

    Elem root = to_->zero();
    bool found = false;
    Elem cand = to_->one();
    for (std::uint64_t k = 0; k < q_small - 1; ++k) {
        if (eval_modulus(cand) == to_->zero()) {
            root = cand;
            found = true;
            break;
        }
        cand = to_->mul(cand, h);
    }
    if (!found) throw Error(Errc::NotSubfield, "modulus has no root in the extension field");

    basis_images_.resize(fs.m);
    Elem pw = to_->one();
    for (std::uint32_t i = 0; i < fs.m; ++i) {
        basis_images_[i] = pw;
        pw = to_->mul(pw, root);
    }
}

Elem Embedding::operator()(Elem a) const {
    if (identity_) return a;
    const auto c = from_->coeffs(a);
    Elem acc = to_->zero();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        acc = to_->add(acc, to_->mul(to_->from_int(c[i]), basis_images_[i]));
    }
    return acc;
}

std::uint32_t extension_degree_for_order(const FieldSpec& base, std::uint64_t n, std::uint32_t max_degree) {
    for (std::uint32_t a = 1; a <= max_degree; ++a) {
        std::uint64_t q = 0;
        try {
            q = ipow(base.p, base.m * a);
        } catch (const Error&) {
            return 0;
        }
        if ((q - 1) % n == 0) return a;
    }
    return 0;
}

}  // namespace tnc::galois
