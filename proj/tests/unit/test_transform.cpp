#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "tnc/error.hpp"
#include "tnc/fixtures/fixtures.hpp"
#include "tnc/galois/dft.hpp"
#include "tnc/netmodel/random_network.hpp"
#include "tnc/transform/pipeline.hpp"

using namespace tnc;
using namespace tnc::transform;
using galois::Field;
using galois::Poly;

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

PolyMatrix random_block_poly(const FieldRef& f, std::size_t rows, std::size_t cols, std::size_t deg,
                             std::mt19937_64& rng) {
    std::vector<Matrix> c;
    for (std::size_t d = 0; d <= deg; ++d) c.push_back(test::random_matrix(f, rows, cols, rng));
    return PolyMatrix::from_coefficients(c);
}

Series random_generations(const std::vector<std::size_t>& sizes, std::size_t n, const galois::Field& f,
                          std::mt19937_64& rng) {
    Series s(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        s[i].resize(n);
        for (auto& x : s[i]) {
            x.resize(sizes[i]);
            for (auto& e : x) e = test::random_elem(f, rng);
        }
    }
    return s;
}

}  // namespace

TEST_CASE("build_circulant layout") {
    auto f = Field::build(2, 3);
    std::mt19937_64 rng(1);
    const auto a0 = test::random_matrix(f, 2, 3, rng);
    const auto c0 = build_circulant(PolyMatrix::from_coefficients(std::vector<Matrix>{a0}), 4);
    CHECK(c0.realized == galois::block_diagonal(std::vector<Matrix>(4, a0)));

    auto gf2 = Field::build(2, 1);
    PolyMatrix ones(gf2, 1, 1);
    ones(0, 0) = Poly(gf2, {gf2->one(), gf2->one()});
    const auto c = build_circulant(ones, 3);
    const std::uint64_t expect[3][3] = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t k = 0; k < 3; ++k) CHECK(c.realized(r, k).v == expect[r][k]);

    CHECK(error_of([&] { build_circulant(ones.shifted_up(2), 3); }) == Errc::BlockTooLong);
}

TEST_CASE("make_plan checks") {
    auto gf8 = Field::build(2, 3);
    const auto plan = make_plan(gf8, 7, 2);
    CHECK(gf8->element_order(plan.alpha) == 7);
    CHECK(error_of([&] { make_plan(gf8, 7, 7); }) == Errc::BlockTooLong);
    CHECK(error_of([&] { make_plan(gf8, 4, 1); }) == Errc::CharacteristicDividesN);
    CHECK(error_of([&] { make_plan(gf8, 5, 1); }) == Errc::NoSuchElement);
    TransformPlan bad = plan;
    bad.alpha = gf8->one();
    CHECK(error_of([&] { check_plan_invariants(bad); }) == Errc::WrongOrder);
}

TEST_CASE("diagonalize: d_max = 0 gives n equal blocks") {
    auto f = Field::build(2, 4);
    std::mt19937_64 rng(2);
    const auto a0 = test::random_matrix(f, 3, 2, rng);
    const auto plan = make_plan(f, 5, 0);
    const auto blocks = diagonalize(build_circulant(PolyMatrix::from_coefficients(std::vector<Matrix>{a0}), 5), plan);
    for (const auto& b : blocks) CHECK(b == a0);
}

TEST_CASE("reassembly identity on random block circulants") {
    std::mt19937_64 rng(3);
    struct Case {
        std::uint32_t m;
        std::size_t n;
    };
    for (const Case c : {Case{3, 7}, Case{4, 3}, Case{4, 5}, Case{4, 15}, Case{6, 3}, Case{6, 7}}) {
        auto f = Field::build(2, c.m);
        for (int trial = 0; trial < 6; ++trial) {
            const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
            const std::size_t deg = rng() % std::min<std::size_t>(c.n, 5);
            const auto M = random_block_poly(f, rows, cols, deg, rng);
            const auto plan = make_plan(f, c.n, static_cast<long>(deg));
            const auto circ = build_circulant(M, c.n);
            const auto blocks = diagonalize(circ, plan);
            CHECK(reassemble(blocks, plan) == circ.realized);
            CHECK(blocks == eigen_blocks(M, plan));
        }
    }
}

TEST_CASE("reassembly identity across a field extension") {
    std::mt19937_64 rng(4);
    auto gf2 = Field::build(2, 1);
    auto gf8 = Field::build(2, 3);
    const auto M = random_block_poly(gf2, 2, 2, 3, rng);
    const auto plan = make_plan(gf8, 7, 3);
    const auto circ = build_circulant(M, 7);
    CHECK(reassemble(diagonalize(circ, plan), plan) == realized_in(circ, plan));
}

TEST_CASE("first example sink u1: per-generation determinants") {
    const auto fx = fixtures::example1();
    auto gf8 = Field::build(2, 3);
    const auto plan = make_plan(gf8, 7, fx.transfer.d_max);
    CHECK(plan.d_max == 4);
    const auto raw_u1 = fx.transfer.raw.block(0, 0, 3, 3);
    const auto raw_blocks = eigen_blocks(raw_u1, plan);
    const auto norm_blocks = eigen_blocks(fx.transfer.M.block(0, 0, 3, 3), plan);
    for (std::size_t t = 0; t < 7; ++t) {
        const auto x = gf8->pow(plan.alpha, 6 - t);
        CHECK(raw_blocks[t].det() == gf8->pow(x, 5));
        // normalization divides each of the three rows by D
        CHECK(norm_blocks[t].det() == gf8->pow(x, 2));
        CHECK(norm_blocks[t].det().v != 0);
    }
}

TEST_CASE("cp_encode") {
    auto f = Field::build(2, 3);
    std::mt19937_64 rng(5);
    const auto in = random_generations({2}, 7, *f, rng);

    auto plan0 = make_plan(f, 7, 0);
    const auto tx0 = cp_encode(plan0, in);
    CHECK(tx0[0].size() == 7);

    auto plan = make_plan(f, 7, 2);
    const auto tx = cp_encode(plan, in);
    CHECK(tx[0].size() == 9);
    CHECK(tx[0][0] == tx[0][2 + 5]);
    CHECK(tx[0][1] == tx[0][2 + 6]);
    for (std::size_t t = 0; t < 7; ++t) CHECK(tx[0][2 + t] == tx0[0][t]);

    // geometric sums: a constant block maps to one nonzero generation
    Series ones(1, std::vector<std::vector<galois::Elem>>(7, {f->one()}));
    const auto t1 = cp_encode(plan0, ones);
    for (std::size_t t = 0; t < 6; ++t) CHECK(t1[0][t][0] == f->zero());
    CHECK(t1[0][6][0] == f->from_int(7));
}

TEST_CASE("cp_decode") {
    auto f = Field::build(2, 4);
    const auto plan = make_plan(f, 5, 2);
    Series zero(2, std::vector<std::vector<galois::Elem>>(7, std::vector<galois::Elem>(2, f->zero())));
    for (const auto& sink : cp_decode(plan, zero))
        for (const auto& y : sink)
            for (auto e : y) CHECK(e == f->zero());
    zero[1].pop_back();
    CHECK(error_of([&] { cp_decode(plan, zero); }) == Errc::WindowMismatch);
}

TEST_CASE("pipeline oracle: encode, network, decode equals per-generation prediction") {
    std::mt19937_64 rng(6);
    struct Case {
        std::uint32_t base_m, ext_m;
        std::size_t n;
    };
    for (const Case c : {Case{1, 3, 7}, Case{1, 4, 15}, Case{2, 4, 15}, Case{3, 3, 7}}) {
        auto base = Field::build(2, c.base_m);
        auto ext = Field::build(2, c.ext_m);
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            netmodel::RandomNetworkParams p;
            p.nodes = 9;
            p.sources = 2;
            p.sinks = 2;
            p.max_delay = 2;
            p.max_spread = 4;
            const auto net0 = netmodel::random_network(p, seed * 13 + c.n);
            const auto norm = netmodel::normalize_delays(net0);
            const auto k = netmodel::lift(net0, norm, netmodel::random_kernels(net0, base, seed));
            const auto tr = netmodel::transfer_matrix(norm.net, k);
            const auto plan = make_plan(ext, c.n, tr.d_max);

            const NetworkChannel channel(norm.net, netmodel::LekAssignment(k), tr.d_prime_min, -tr.d_max, ext);
            const auto in = random_generations(tr.mu_sizes, c.n, *ext, rng);
            const auto out = run_block(plan, channel, in);
            CHECK(out == predict(eigen_blocks(tr.M, plan), tr.mu_sizes, tr.nu_sizes, in));

            const ConvolutionChannel conv(tr, ext);
            CHECK(run_block(plan, conv, in) == out);
        }
    }
}

TEST_CASE("first example through a convolution channel: every demanded process recovered") {
    const auto fx = fixtures::example1();
    auto gf8 = Field::build(2, 3);
    const auto plan = make_plan(gf8, 7, fx.transfer.d_max);
    const ConvolutionChannel channel(fx.transfer, gf8);
    std::mt19937_64 rng(7);
    const auto mhat = eigen_blocks(fx.transfer.M, plan);
    for (int trial = 0; trial < 10; ++trial) {
        const auto in = random_generations(fx.transfer.mu_sizes, 7, *gf8, rng);
        const auto out = run_block(plan, channel, in);
        for (std::size_t j = 0; j < 5; ++j) {
            std::vector<std::size_t> cols;
            for (auto [src, proc] : fx.demands[j]) cols.push_back(fx.transfer.source_offset(src) + proc);
            for (std::size_t t = 0; t < 7; ++t) {
                const auto rows = mhat[t].block(fx.transfer.sink_offset(j), 0, fx.transfer.nu_sizes[j], 3);
                const auto x = instantaneous_solve(rows, cols, out[j][t], t);
                for (std::size_t k = 0; k < cols.size(); ++k) CHECK(x[k] == in[fx.demands[j][k].first][t][0]);
            }
        }
    }
}

TEST_CASE("instantaneous_solve") {
    auto f = Field::build(2, 3);
    const std::vector<galois::Elem> y{galois::Elem{3}, galois::Elem{5}};
    CHECK(instantaneous_solve(Matrix::identity(f, 2), {0, 1}, y, 0) == y);
    CHECK(error_of([&] { instantaneous_solve(Matrix::identity(f, 2), {0}, y, 0); }) == Errc::NonSquare);

    // first example sink u4 needs columns 0 and 2
    const auto fx = fixtures::example1();
    const auto plan = make_plan(f, 7, 4);
    const auto mhat = eigen_blocks(fx.transfer.M, plan);
    for (std::size_t t = 0; t < 7; ++t) {
        const auto rows = mhat[t].block(fx.transfer.sink_offset(3), 0, 2, 3);
        const std::vector<galois::Elem> x{galois::Elem{6}, galois::Elem{1}};
        const std::vector<galois::Elem> full{x[0], galois::Elem{4}, x[1]};
        CHECK(rows.column_is_zero(1));
        CHECK(instantaneous_solve(rows, {0, 2}, rows.apply(full), t) == x);
    }

    // M(D) = D + alpha^3 vanishes where alpha^{n-1-t} = alpha^3, i.e. t = 3
    PolyMatrix m(f, 1, 1);
    m(0, 0) = Poly(f, {f->pow(plan.alpha, 3), f->one()});
    const auto blocks = eigen_blocks(m, plan);
    for (std::size_t t = 0; t < 7; ++t) {
        if (t == 3)
            CHECK(error_of([&] { instantaneous_solve(blocks[t], {0}, {f->one()}, t); }) ==
                  Errc::SingularAtGeneration);
        else
            CHECK(instantaneous_solve(blocks[t], {0}, {f->one()}, t).size() == 1);
    }
}

TEST_CASE("circulant equivariance under cyclic rotation") {
    std::mt19937_64 rng(8);
    auto f = Field::build(2, 4);
    const auto M = random_block_poly(f, 2, 2, 3, rng);
    const auto tr = netmodel::transfer_from_raw(M, {2}, {2});
    const ConvolutionChannel channel(tr, f);
    const std::size_t n = 5, dmax = static_cast<std::size_t>(tr.d_max);

    // send a sequence with its own cyclic prefix, drop the prefix outputs
    auto circular = [&](const std::vector<std::vector<galois::Elem>>& seq) {
        Series tx(1);
        for (std::size_t s = 0; s < dmax; ++s) tx[0].push_back(seq[n - dmax + s]);
        tx[0].insert(tx[0].end(), seq.begin(), seq.end());
        auto out = channel.run(tx)[0];
        return std::vector<std::vector<galois::Elem>>(out.begin() + static_cast<long>(dmax), out.end());
    };
    auto rotate = [&](std::vector<std::vector<galois::Elem>> v) {
        std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
        return v;
    };
    for (int trial = 0; trial < 10; ++trial) {
        const auto seq = random_generations({2}, n, *f, rng)[0];
        CHECK(circular(rotate(seq)) == rotate(circular(seq)));
    }
}

TEST_CASE("overhead: n + d_max slots per block") {
    auto f = Field::build(2, 4);
    std::mt19937_64 rng(9);
    for (long dmax = 0; dmax < 5; ++dmax) {
        const auto plan = make_plan(f, 15, dmax);
        const auto tx = cp_encode(plan, random_generations({1, 2}, 15, *f, rng));
        for (const auto& s : tx) CHECK(s.size() == 15 + static_cast<std::size_t>(dmax));
    }
}
