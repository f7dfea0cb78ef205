#include <doctest.h>

#include <random>
#include <set>

#include "test_support.hpp"
#include "tnc/error.hpp"
#include "tnc/galois/dft.hpp"
#include "tnc/galois/embedding.hpp"

using namespace tnc;
using namespace tnc::galois;
using tnc::test::random_elem;
using tnc::test::random_nonzero;

namespace {

Errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::InvalidArgument;
}

// Every product of two monic polynomials of degrees d1 + d2 = 2 over GF(2),
// enumerated directly: the reducible quadratics.
std::set<std::vector<std::uint32_t>> reducible_quadratics_gf2() {
    std::set<std::vector<std::uint32_t>> out;
    for (std::uint32_t a = 0; a < 2; ++a)
        for (std::uint32_t b = 0; b < 2; ++b)
            out.insert({(a * b) % 2, (a + b) % 2, 1});  // (x + a)(x + b)
    return out;
}

}  // namespace

TEST_CASE("build_field: prime field default modulus") {
    auto f = Field::build(2, 1);
    CHECK(f->order() == 2);
    CHECK(f->spec().modulus == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("build_field: GF(64) with 1 + x + x^6 is accepted and is the default") {
    auto f = Field::build(2, 6, std::vector<std::uint32_t>{1, 1, 0, 0, 0, 0, 1});
    CHECK(f->order() == 64);
    CHECK(Field::build(2, 6)->spec() == f->spec());
    // x itself is primitive under a primitive modulus
    CHECK(f->generator() == Elem{2});
}

TEST_CASE("build_field: errors") {
    const auto reducible = reducible_quadratics_gf2();
    CHECK(reducible.count({1, 0, 1}) == 1);
    CHECK(error_of([] { Field::build(2, 2, std::vector<std::uint32_t>{1, 0, 1}); }) == Errc::ReducibleModulus);
    CHECK(error_of([] { Field::build(4, 1); }) == Errc::NotPrime);
    CHECK(error_of([] { Field::build(2, 2, std::vector<std::uint32_t>{1, 1, 0}); }) == Errc::InvalidArgument);
    // the exhaustive set agrees with the trial-division test on all quadratics
    for (std::uint32_t c0 = 0; c0 < 2; ++c0)
        for (std::uint32_t c1 = 0; c1 < 2; ++c1) {
            std::vector<std::uint32_t> poly{c0, c1, 1};
            CHECK(is_irreducible(2, poly) == (reducible.count(poly) == 0));
        }
}

TEST_CASE("build_field: odd characteristic") {
    auto f = Field::build(3, 2);
    CHECK(f->order() == 9);
    CHECK(is_irreducible(3, f->spec().modulus));
    auto g = Field::build(5, 1);
    CHECK(g->mul(Elem{3}, Elem{4}) == Elem{2});
    CHECK(g->inv(Elem{2}) == Elem{3});
}

TEST_CASE("element_of_order") {
    auto f = Field::build(2, 6);
    const Elem beta = f->generator();
    const Elem a = f->element_of_order(7);
    CHECK(a == f->pow(beta, 9));
    CHECK(f->element_order(a) == 7);
    CHECK(f->element_of_order(1) == f->one());
    auto gf8 = Field::build(2, 3);
    CHECK(error_of([&] { (void)gf8->element_of_order(5); }) == Errc::NoSuchElement);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (auto [p, m] : {std::pair{2u, 6u}, std::pair{3u, 3u}, std::pair{5u, 2u}, std::pair{2u, 12u}}) {
        auto f = Field::build(p, m);
        for (int i = 0; i < 10000; ++i) {
            const Elem a = random_elem(*f, rng), b = random_elem(*f, rng), c = random_elem(*f, rng);
            REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            REQUIRE(f->mul(a, b) == f->mul(b, a));
            REQUIRE(f->sub(f->add(a, b), b) == a);
            if (a.v != 0) REQUIRE(f->mul(a, f->inv(a)) == f->one());
        }
    }
}

TEST_CASE("Frobenius: a^q = a") {
    std::mt19937_64 rng(11);
    for (auto [p, m] : {std::pair{2u, 6u}, std::pair{3u, 4u}, std::pair{7u, 2u}}) {
        auto f = Field::build(p, m);
        for (int i = 0; i < 200; ++i) {
            const Elem a = random_elem(*f, rng);
            CHECK(f->pow(a, f->order()) == a);
        }
    }
}

TEST_CASE("generator has full order and powers enumerate the group") {
    auto f = Field::build(3, 3);
    std::set<std::uint64_t> seen;
    Elem e = f->one();
    for (std::uint64_t k = 0; k + 1 < f->order(); ++k) {
        seen.insert(e.v);
        e = f->mul(e, f->generator());
    }
    CHECK(seen.size() == f->order() - 1);
    CHECK(e == f->one());
}

TEST_CASE("dft_matrix round trip") {
    auto gf2 = Field::build(2, 1);
    auto one = dft_matrix(gf2, gf2->one(), 1);
    CHECK(one.rows() == 1);
    CHECK(one(0, 0) == gf2->one());

    auto f = Field::build(2, 6);
    const Elem a = f->pow(f->generator(), 9);
    auto F = dft_matrix(f, a, 7);
    auto Fi = inverse_dft_matrix(f, a, 7);
    CHECK(F * Fi == Matrix::identity(f, 7));
    CHECK(Fi * F == Matrix::identity(f, 7));

    // p | n is rejected before the order check
    auto gf4 = Field::build(2, 2);
    CHECK(error_of([&] { (void)dft_matrix(gf4, gf4->one(), 2); }) == Errc::CharacteristicDividesN);
    CHECK(error_of([&] { (void)dft_matrix(f, f->generator(), 7); }) == Errc::WrongOrder);
}

TEST_CASE("dft round trip for every divisor order") {
    for (auto [p, m] : {std::pair{2u, 4u}, std::pair{3u, 2u}, std::pair{2u, 6u}}) {
        auto f = Field::build(p, m);
        for (std::uint64_t n = 1; n < f->order(); ++n) {
            if ((f->order() - 1) % n != 0) continue;
            const Elem a = f->element_of_order(n);
            CHECK(dft_matrix(f, a, n) * inverse_dft_matrix(f, a, n) == Matrix::identity(f, n));
        }
    }
}

TEST_CASE("Kronecker block DFT") {
    auto f = Field::build(2, 4);
    const Elem a = f->element_of_order(5);
    for (std::size_t mu = 1; mu <= 3; ++mu) {
        auto Q = block_dft_matrix(f, a, 5, mu);
        auto Qi = inverse_block_dft_matrix(f, a, 5, mu);
        CHECK(Q * Qi == Matrix::identity(f, 5 * mu));
        // block (r, c) of Q is alpha^(r c) I
        CHECK(Q.block(3 * mu, 2 * mu, mu, mu) == Matrix::identity(f, mu).scaled(f->pow(a, 6)));
    }
}

TEST_CASE("poly basics") {
    auto f = Field::build(2, 3);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        Poly a = tnc::test::random_poly(f, rng() % 6, rng);
        Poly b = tnc::test::random_poly(f, rng() % 6, rng);
        const Elem x = random_elem(*f, rng);
        CHECK((a * b).eval(x) == f->mul(a.eval(x), b.eval(x)));
        if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
        if (!b.is_zero()) {
            auto [q, r] = a.divmod(b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
    CHECK(Poly::monomial(f, f->one(), 25).to_string() == "D^25");
    CHECK((Poly::monomial(f, f->one(), 2) + Poly::constant(f, f->one())).to_string() == "1 + D^2");
}

TEST_CASE("poly_eval_matrix") {
    auto gf2 = Field::build(2, 1);
    std::mt19937_64 rng(5);
    PolyMatrix zero(gf2, 3, 2);
    CHECK(zero.eval(gf2->one()).is_zero());

    // [[D^3, D^4], [0, D]] at D = 1
    PolyMatrix u5(gf2, 2, 2);
    u5(0, 0) = Poly::monomial(gf2, gf2->one(), 3);
    u5(0, 1) = Poly::monomial(gf2, gf2->one(), 4);
    u5(1, 1) = Poly::monomial(gf2, gf2->one(), 1);
    auto at1 = u5.eval(gf2->one());
    CHECK(at1(0, 0) == gf2->one());
    CHECK(at1(0, 1) == gf2->one());
    CHECK(at1(1, 0) == gf2->zero());
    CHECK(at1(1, 1) == gf2->one());
    CHECK(at1.det() == gf2->one());
    CHECK(u5.det() == Poly::monomial(gf2, gf2->one(), 4));

    auto f = Field::build(2, 4);
    for (int i = 0; i < 20; ++i) {
        auto m = tnc::test::random_poly_matrix(f, 3, 4, rng);
        const Poly d = tnc::test::leibniz_det(m);
        CHECK(m.det() == d);
        const Elem x = random_elem(*f, rng);
        CHECK(m.eval(x).det() == d.eval(x));
    }
}

TEST_CASE("determinant homomorphism up to 5x5, degree <= 6") {
    std::mt19937_64 rng(17);
    for (auto [p, m] : {std::pair{2u, 6u}, std::pair{3u, 2u}}) {
        auto f = Field::build(p, m);
        for (std::size_t n = 1; n <= 5; ++n) {
            for (int trial = 0; trial < 4; ++trial) {
                auto pm = tnc::test::random_poly_matrix(f, n, 6, rng);
                const Poly d = pm.det();
                CHECK(d == tnc::test::leibniz_det(pm));
                for (int k = 0; k < 5; ++k) {
                    const Elem x = random_elem(*f, rng);
                    CHECK(pm.eval(x).det() == d.eval(x));
                }
            }
        }
    }
}

TEST_CASE("scalar matrix rank, inverse and solve") {
    std::mt19937_64 rng(23);
    auto f = Field::build(3, 2);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = tnc::test::random_matrix(f, 4, 4, rng);
        CHECK(a.det() == tnc::test::leibniz_det(a));
        if (a.det().v != 0) {
            CHECK(a * a.inverse() == Matrix::identity(f, 4));
            std::vector<Elem> x(4);
            for (auto& e : x) e = random_elem(*f, rng);
            CHECK(a.solve(a.apply(x)) == x);
            CHECK(a.rank() == 4);
        } else {
            CHECK(a.rank() < 4);
            CHECK(error_of([&] { (void)a.inverse(); }) == Errc::Singular);
        }
        auto b = tnc::test::random_matrix(f, 4, 3, rng);
        CHECK((a * b).rank() <= std::min(a.rank(), b.rank()));
    }
}

TEST_CASE("embedding is a field homomorphism") {
    std::mt19937_64 rng(29);
    for (auto [p, m, a] : {std::tuple{2u, 2u, 3u}, std::tuple{2u, 3u, 2u}, std::tuple{3u, 2u, 2u},
                           std::tuple{2u, 6u, 2u}, std::tuple{2u, 1u, 4u}}) {
        auto small = Field::build(p, m);
        auto big = Field::build(p, m * a);
        Embedding emb(small, big);
        CHECK(emb(small->one()) == big->one());
        for (int i = 0; i < 300; ++i) {
            const Elem x = random_elem(*small, rng), y = random_elem(*small, rng);
            REQUIRE(emb(small->add(x, y)) == big->add(emb(x), emb(y)));
            REQUIRE(emb(small->mul(x, y)) == big->mul(emb(x), emb(y)));
        }
    }
    auto gf8 = Field::build(2, 3);
    auto gf16 = Field::build(2, 4);
    CHECK(error_of([&] { Embedding e(gf8, gf16); }) == Errc::NotSubfield);
    CHECK(extension_degree_for_order(Field::build(2, 1)->spec(), 7, 12) == 3);
    CHECK(extension_degree_for_order(Field::build(2, 1)->spec(), 9, 12) == 6);
    CHECK(extension_degree_for_order(Field::build(2, 1)->spec(), 4, 12) == 0);
}
