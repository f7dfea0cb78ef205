#include "tnc/alignment/alignment.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "tnc/error.hpp"
#include "tnc/galois/embedding.hpp"
#include "tnc/netmodel/network.hpp"
#include "tnc/transform/pipeline.hpp"

namespace tnc::alignment {

namespace {

using Vec = std::vector<Elem>;
using Grid = std::array<std::array<Vec, 3>, 3>;

const char* const pair_name[3][3] = {{"M11", "M12", "M13"}, {"M21", "M22", "M23"}, {"M31", "M32", "M33"}};

// zero cross pairs of each category, as (source, sink)
ZeroPattern pattern_of(Category c) {
    ZeroPattern z{};
    auto set = [&](std::size_t i, std::size_t j) { z[i - 1][j - 1] = true; };
    switch (c) {
        case Category::Full: break;
        case Category::Cat1: set(2, 1); break;
        case Category::Cat2: set(2, 1), set(3, 1), set(1, 2); break;
        case Category::Cat3: set(3, 1), set(1, 2), set(2, 3); break;
        case Category::Cat4: set(3, 1), set(3, 2), set(1, 3), set(2, 3); break;
    }
    return z;
}

Vec mul(const galois::Field& F, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = F.mul(a[k], b[k]);
    return r;
}

Vec div(const galois::Field& F, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = F.div(a[k], b[k]);
    return r;
}

bool has_zero(const Vec& v) {
    return std::any_of(v.begin(), v.end(), [](Elem e) { return e.v == 0; });
}

// diag(d) * m
Matrix scale_rows(const Vec& d, const Matrix& m) {
    const galois::Field& F = *m.field();
    Matrix r = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = F.mul(d[i], m(i, j));
    return r;
}

Matrix random_matrix(const FieldRef& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Elem{rng() % field->order()};
    return m;
}

Matrix columns(const Matrix& m, std::size_t first, std::size_t count) { return m.block(0, first, m.rows(), count); }

// matrix whose column c is cols[c]
Matrix from_columns(const FieldRef& field, const std::vector<Vec>& cols) {
    Matrix m(field, cols.empty() ? 0 : cols.front().size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < cols[c].size(); ++r) m(r, c) = cols[c][r];
    return m;
}

void require_unicast(const netmodel::Network& net) {
    netmodel::validate(net);
    if (net.sources.size() != 3 || net.sinks.size() != 3)
        throw Error(Errc::InvalidNetwork, "alignment needs three sources and three sinks");
    for (const auto& s : net.sources)
        if (s.processes != 1) throw Error(Errc::InvalidNetwork, "source " + s.node + " must carry one process");
    for (std::size_t j = 0; j < 3; ++j) {
        const auto& s = net.sinks[j];
        if (s.outputs != 1) throw Error(Errc::InvalidNetwork, "sink " + s.node + " must have one output");
        if (s.demands != std::vector<netmodel::Demand>{{j, 0}})
            throw Error(Errc::InvalidNetwork, "sink " + s.node + " must demand exactly source " + std::to_string(j + 1));
    }
}

Classification prepare(const netmodel::Network& net) {
    require_unicast(net);
    ZeroPattern zero{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const std::size_t c = netmodel::min_cut(net, i, j);
            if (i == j && c != 1)
                throw Error(Errc::MinCutViolation, "min-cut(S" + std::to_string(i + 1) + ", D" + std::to_string(i + 1) +
                                                       ") = " + std::to_string(c) + ", expected 1");
            zero[i][j] = i != j && c == 0;
        }
    return classify(zero);
}

FieldRef operating_field(const FieldRef& base, std::size_t N) {
    const std::uint32_t p = base->characteristic();
    if (N % p == 0)
        throw Error(Errc::CharacteristicDividesBlock,
                    "p = " + std::to_string(p) + " divides 2n+1 = " + std::to_string(N));
    if ((base->order() - 1) % N == 0) return base;
    const std::uint32_t a = galois::extension_degree_for_order(base->spec(), N, 12);
    if (a == 0) throw Error(Errc::NoSuchElement, "no extension of degree <= 12 has an element of order " + std::to_string(N));
    return galois::Field::build(p, base->degree() * a);
}

struct System {
    Matrix matrix;
    std::size_t take = 0;
};

// decode system at each canonical sink
std::array<System, 3> systems(const AlignmentInstance& inst) {
    const auto& m = inst.mhat;
    auto MV = [&](std::size_t i, std::size_t j, const Matrix& V) { return scale_rows(m[i - 1][j - 1], V); };
    const std::size_t n = inst.n, N = inst.N;
    switch (inst.category) {
        case Category::Full:
            return {System{hconcat(MV(1, 1, inst.V1), MV(2, 1, inst.V2)), n + 1},
                    System{hconcat(MV(2, 2, inst.V2), MV(1, 2, inst.V1)), n},
                    System{hconcat(MV(3, 3, inst.V3), MV(1, 3, inst.V1)), n}};
        case Category::Cat1:
            return {System{hconcat(MV(1, 1, inst.V1), MV(3, 1, inst.V3)), n + 1},
                    System{hconcat(MV(2, 2, inst.V2), MV(1, 2, inst.V1)), n},
                    System{hconcat(MV(3, 3, inst.V3), MV(1, 3, inst.V1)), n}};
        case Category::Cat2:
            return {System{MV(1, 1, inst.V1), n + 1}, System{hconcat(MV(2, 2, inst.V2), MV(3, 2, inst.V3)), n},
                    System{hconcat(MV(3, 3, inst.V3), MV(1, 3, inst.V1)), n}};
        case Category::Cat3:
            return {System{hconcat(MV(1, 1, inst.V1), MV(2, 1, inst.V2)), n + 1},
                    System{hconcat(MV(2, 2, inst.V2), MV(3, 2, inst.V3)), n},
                    System{hconcat(MV(3, 3, inst.V3), MV(1, 3, inst.V1)), n}};
        case Category::Cat4:
            return {System{hconcat(MV(1, 1, inst.V1), MV(2, 1, inst.V2)), n + 1},
                    System{hconcat(MV(2, 2, inst.V2), MV(1, 2, inst.V1)), n}, System{MV(3, 3, inst.V3), N}};
    }
    return {};
}

}  // namespace

const char* to_string(Category c) {
    switch (c) {
        case Category::Full: return "full";
        case Category::Cat1: return "cat1";
        case Category::Cat2: return "cat2";
        case Category::Cat3: return "cat3";
        case Category::Cat4: return "cat4";
    }
    return "?";
}

Classification classify(const ZeroPattern& zero) {
    std::array<std::size_t, 3> perm{0, 1, 2};
    do {
        ZeroPattern z{};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) z[i][j] = i != j && zero[perm[i]][perm[j]];
        for (Category c : {Category::Full, Category::Cat1, Category::Cat2, Category::Cat3, Category::Cat4})
            if (z == pattern_of(c)) return Classification{c, perm};
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::string desc;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j && zero[i][j]) desc += " S" + std::to_string(i + 1) + "-D" + std::to_string(j + 1);
    throw Error(Errc::UnsupportedPattern, "zero min-cut pattern{" + desc + " } matches no listed category");
}

AlignmentInstance instance_from_eigenvalues(const TransformPlan& plan, std::size_t n, Category category,
                                            const Grid& mhat, std::uint64_t seed) {
    const std::size_t N = 2 * n + 1;
    if (plan.n != N) throw Error(Errc::InvalidArgument, "plan length must be 2n+1");
    const auto zero = pattern_of(category);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (mhat[i][j].size() != N) throw Error(Errc::InvalidArgument, "eigenvalue vectors must have length 2n+1");
            if (zero[i][j] && std::any_of(mhat[i][j].begin(), mhat[i][j].end(), [](Elem e) { return e.v != 0; }))
                throw Error(Errc::InvalidArgument, std::string(pair_name[i][j]) + " must vanish in this category");
        }

    AlignmentInstance inst;
    inst.n = n;
    inst.N = N;
    inst.plan = plan;
    inst.category = category;
    inst.mhat = mhat;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (!zero[i][j] && has_zero(mhat[i][j])) inst.singular.push_back(pair_name[i][j]);
    if (!inst.singular.empty()) return inst;

    const FieldRef& field = plan.field;
    const galois::Field& F = *field;
    const auto& m = mhat;
    std::mt19937_64 rng(seed);
    auto random = [&](std::size_t r, std::size_t c) { return random_matrix(field, r, c, rng); };

    switch (category) {
        case Category::Full: {
            inst.a = mul(F, mul(F, m[1][0], m[2][1]), m[0][2]);
            inst.b = mul(F, mul(F, m[2][0], m[1][2]), m[0][1]);
            inst.T = div(F, inst.a, inst.b);
            inst.R = div(F, m[0][2], m[1][2]);
            inst.S = div(F, m[0][1], m[2][1]);
            // powers[k] = T^k W
            std::vector<Vec> powers{Vec(N, F.one())};
            for (std::size_t k = 1; k <= n; ++k) powers.push_back(mul(F, powers.back(), inst.T));
            std::vector<Vec> c1, c2, c3;
            for (std::size_t k = 0; k <= n; ++k) c1.push_back(powers[k]);
            for (std::size_t k = 0; k < n; ++k) c2.push_back(mul(F, inst.R, powers[k]));
            for (std::size_t k = 1; k <= n; ++k) c3.push_back(mul(F, inst.S, powers[k]));
            inst.V1 = from_columns(field, c1);
            inst.V2 = from_columns(field, c2);
            inst.V3 = from_columns(field, c3);
            break;
        }
        case Category::Cat1:
            inst.V1 = random(N, n + 1);
            inst.A = random(n + 1, n);
            inst.B = random(n + 1, n);
            inst.V2 = scale_rows(div(F, m[0][2], m[1][2]), inst.V1 * inst.A);
            inst.V3 = scale_rows(div(F, m[0][1], m[2][1]), inst.V1 * inst.B);
            break;
        case Category::Cat2:
            inst.V1 = random(N, n + 1);
            inst.A = random(n + 1, n);
            inst.V2 = scale_rows(div(F, m[0][2], m[1][2]), inst.V1 * inst.A);
            inst.V3 = random(N, n);
            break;
        case Category::Cat3:
            inst.V1 = random(N, n + 1);
            inst.V2 = random(N, n);
            inst.V3 = random(N, n);
            break;
        case Category::Cat4:
            inst.V1 = random(N, n + 1);
            inst.V2 = random(N, n);
            inst.V3 = Matrix::identity(field, N);
            break;
    }
    return inst;
}

AlignmentInstance build_instance(const netmodel::Network& net, const netmodel::LekAssignment& leks, std::size_t n,
                                 std::uint64_t seed, std::optional<FieldRef> field) {
    const Classification cls = prepare(net);
    if (!leks.time_invariant()) throw Error(Errc::InvalidArgument, "alignment instances need time-invariant kernels");
    const std::size_t N = 2 * n + 1;
    const FieldRef kernel_field = leks.field();
    const FieldRef F = operating_field(field ? *field : kernel_field, N);
    if (!kernel_field->same_as(*F) && F->characteristic() != kernel_field->characteristic())
        throw Error(Errc::FieldMismatch, "operating field has a different characteristic");

    const auto norm = netmodel::normalize_delays(net);
    const auto lifted = netmodel::lift(net, norm, leks.fixed());
    const auto tr = netmodel::transfer_matrix(norm.net, lifted);
    const TransformPlan plan = transform::make_plan(F, N, tr.d_max);
    const auto blocks = transform::eigen_blocks(tr.M, plan);

    Grid mhat;
    for (std::size_t ci = 0; ci < 3; ++ci)
        for (std::size_t cj = 0; cj < 3; ++cj) {
            const std::size_t i = cls.perm[ci], j = cls.perm[cj];
            // row r holds M(alpha^r), which is eigen block n-1-r
            for (std::size_t r = 0; r < N; ++r)
                mhat[ci][cj].push_back(blocks[N - 1 - r](tr.sink_offset(j), tr.source_offset(i)));
        }

    AlignmentInstance inst = instance_from_eigenvalues(plan, n, cls.category, mhat, seed);
    inst.perm = cls.perm;
    inst.net = norm.net;
    inst.kernels = kernel_field->same_as(*F) ? lifted : netmodel::embed(lifted, galois::Embedding(kernel_field, F));
    inst.d_prime_min = tr.d_prime_min;
    return inst;
}

AlignmentReport check_alignment(const AlignmentInstance& inst) {
    AlignmentReport rep;
    if (!inst.singular.empty()) {
        std::string names;
        for (const auto& s : inst.singular) names += (names.empty() ? "" : ", ") + s;
        rep.conditions.push_back({"nonzero eigenvalues of " + names, 0, 1, false});
        return rep;
    }
    const galois::Field& F = *inst.plan.field;
    const auto& m = inst.mhat;
    const std::size_t n = inst.n, N = inst.N;
    auto M = [&](std::size_t i, std::size_t j) -> const Vec& { return m[i - 1][j - 1]; };
    auto inv = [&](std::size_t i, std::size_t j) {
        Vec r(N);
        for (std::size_t k = 0; k < N; ++k) r[k] = F.inv(M(i, j)[k]);
        return r;
    };
    auto cond = [&](std::string name, const Matrix& x, std::size_t required) {
        const std::size_t rank = x.rank();
        rep.conditions.push_back({std::move(name), rank, required, rank == required});
    };
    auto ident = [&](std::string name, const Matrix& lhs, const Matrix& rhs) {
        rep.identities.push_back({std::move(name), lhs == rhs});
    };
    const Matrix &V1 = inst.V1, &V2 = inst.V2, &V3 = inst.V3;

    switch (inst.category) {
        case Category::Full:
            ident("M21 V2 = M31 V3", scale_rows(M(2, 1), V2), scale_rows(M(3, 1), V3));
            ident("M32 V3 = columns 2..n+1 of M12 V1", scale_rows(M(3, 2), V3), columns(scale_rows(M(1, 2), V1), 1, n));
            ident("M23 V2 = columns 1..n of M13 V1", scale_rows(M(2, 3), V2), columns(scale_rows(M(1, 3), V1), 0, n));
            cond("rank[V1 | M11^-1 M21 V2]", hconcat(V1, scale_rows(mul(F, inv(1, 1), M(2, 1)), V2)), N);
            cond("rank[M12^-1 M22 V2 | V1]", hconcat(scale_rows(mul(F, inv(1, 2), M(2, 2)), V2), V1), N);
            cond("rank[M13^-1 M33 V3 | V1]", hconcat(scale_rows(mul(F, inv(1, 3), M(3, 3)), V3), V1), N);
            break;
        case Category::Cat1:
            ident("M23 V2 = M13 V1 A", scale_rows(M(2, 3), V2), scale_rows(M(1, 3), V1) * inst.A);
            ident("M32 V3 = M12 V1 B", scale_rows(M(3, 2), V3), scale_rows(M(1, 2), V1) * inst.B);
            cond("rank[V1 | M11^-1 M31 V3]", hconcat(V1, scale_rows(mul(F, inv(1, 1), M(3, 1)), V3)), N);
            cond("rank[M12^-1 M22 V2 | V1]", hconcat(scale_rows(mul(F, inv(1, 2), M(2, 2)), V2), V1), N);
            cond("rank[M13^-1 M33 V3 | V1]", hconcat(scale_rows(mul(F, inv(1, 3), M(3, 3)), V3), V1), N);
            break;
        case Category::Cat2:
            ident("M23 V2 = M13 V1 A", scale_rows(M(2, 3), V2), scale_rows(M(1, 3), V1) * inst.A);
            cond("rank[M11 V1]", scale_rows(M(1, 1), V1), n + 1);
            cond("rank[M32^-1 M22 V2 | V3]", hconcat(scale_rows(mul(F, inv(3, 2), M(2, 2)), V2), V3), 2 * n);
            cond("rank[M33^-1 M13 V1 | V3]", hconcat(scale_rows(mul(F, inv(3, 3), M(1, 3)), V1), V3), N);
            break;
        case Category::Cat3:
            cond("rank[V1 | M11^-1 M21 V2]", hconcat(V1, scale_rows(mul(F, inv(1, 1), M(2, 1)), V2)), N);
            cond("rank[M33^-1 M13 V1 | V3]", hconcat(scale_rows(mul(F, inv(3, 3), M(1, 3)), V1), V3), N);
            cond("rank[M32^-1 M22 V2 | V3]", hconcat(scale_rows(mul(F, inv(3, 2), M(2, 2)), V2), V3), 2 * n);
            break;
        case Category::Cat4:
            cond("rank[V1 | M11^-1 M21 V2]", hconcat(V1, scale_rows(mul(F, inv(1, 1), M(2, 1)), V2)), N);
            cond("rank[M12^-1 M22 V2 | V1]", hconcat(scale_rows(mul(F, inv(1, 2), M(2, 2)), V2), V1), N);
            cond("rank[M33]", scale_rows(M(3, 3), V3), N);
            break;
    }
    rep.feasible = std::all_of(rep.conditions.begin(), rep.conditions.end(), [](const Condition& c) { return c.ok; }) &&
                   std::all_of(rep.identities.begin(), rep.identities.end(), [](const Identity& i) { return i.holds; });
    return rep;
}

std::array<std::size_t, 3> symbol_counts(const AlignmentInstance& inst) {
    return {inst.n + 1, inst.n, inst.category == Category::Cat4 ? inst.N : inst.n};
}

std::array<Fraction, 3> throughputs(const AlignmentInstance& inst) {
    const auto k = symbol_counts(inst);
    return {Fraction{k[0], inst.N}, Fraction{k[1], inst.N}, Fraction{k[2], inst.N}};
}

Recovery encode_decode(const AlignmentInstance& inst, const std::array<std::vector<Elem>, 3>& x) {
    if (!inst.singular.empty() || inst.V1.rows() == 0)
        throw Error(Errc::InvalidArgument, "instance has no precoders");
    const auto counts = symbol_counts(inst);
    const std::size_t N = inst.N;
    const Matrix* V[3] = {&inst.V1, &inst.V2, &inst.V3};
    transform::Series inputs(3);
    for (std::size_t c = 0; c < 3; ++c) {
        if (x[c].size() != counts[c])
            throw Error(Errc::InvalidArgument, "pair " + std::to_string(c + 1) + " takes " + std::to_string(counts[c]) +
                                                   " symbols, got " + std::to_string(x[c].size()));
        const auto stacked = V[c]->apply(x[c]);
        auto& series = inputs[inst.perm[c]];
        for (std::size_t t = 0; t < N; ++t) series.push_back({stacked[N - 1 - t]});
    }

    const transform::NetworkChannel channel(inst.net, netmodel::LekAssignment(inst.kernels), inst.d_prime_min, 0,
                                            inst.plan.field);
    const auto out = transform::run_block(inst.plan, channel, inputs);

    Recovery rec;
    const auto sys = systems(inst);
    for (std::size_t c = 0; c < 3; ++c) {
        Vec y(N);
        for (std::size_t r = 0; r < N; ++r) y[r] = out[inst.perm[c]][N - 1 - r][0];
        const auto sol = sys[c].matrix.solve_exact(y);
        if (!sol) throw Error(Errc::SingularDecodeSystem, "decode system at sink " + std::to_string(c + 1) + " is singular");
        rec.symbols[c].assign(sol->begin(), sol->begin() + static_cast<long>(sys[c].take));
    }
    rec.throughput = throughputs(inst);
    rec.channel_uses = N + static_cast<std::size_t>(inst.plan.d_max);
    return rec;
}

SearchResult align_search(const netmodel::Network& net, std::size_t n, const FieldRef& field, std::uint64_t seed,
                          std::size_t budget) {
    prepare(net);
    // kernels are drawn fresh, so any field of the same characteristic works;
    // take the smallest one with an element of order 2n+1
    const std::size_t N = 2 * n + 1;
    FieldRef F = field;
    if (N % field->characteristic() != 0 && (field->order() - 1) % N != 0) {
        const auto p = field->characteristic();
        std::uint32_t m = 1;
        while (m <= 32 && (galois::ipow(p, m) - 1) % N != 0) ++m;
        if (m > 32) throw Error(Errc::NoSuchElement, "no field of characteristic " + std::to_string(p) +
                                                        " and degree <= 32 has an element of order " + std::to_string(N));
        F = galois::Field::build(p, m);
    }
    F = operating_field(F, N);
    for (std::size_t k = 0; k < budget; ++k) {
        std::seed_seq seq{seed, std::uint64_t{k}};
        std::mt19937_64 rng(seq);
        const std::uint64_t kernel_seed = rng(), precoder_seed = rng();
        netmodel::LekAssignment leks(netmodel::random_kernels(net, F, kernel_seed));
        AlignmentInstance inst = build_instance(net, leks, n, precoder_seed, F);
        AlignmentReport rep = check_alignment(inst);
        if (rep.feasible) return SearchResult{std::move(leks), std::move(inst), std::move(rep), k + 1, seed};
    }
    throw Error(Errc::NotFound, "no aligning assignment in " + std::to_string(budget) + " attempts (seed " +
                                    std::to_string(seed) + ")");
}

}  // namespace tnc::alignment
