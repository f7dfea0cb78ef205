#include "tnc/feasibility/feasibility.hpp"

#include <set>
#include <string>

#include "tnc/error.hpp"
#include "tnc/galois/embedding.hpp"
#include "tnc/transform/pipeline.hpp"

namespace tnc::feasibility {

Demands demands_of(const netmodel::Network& net) {
    Demands d;
    for (const auto& s : net.sinks) d.push_back(s.demands);
    return d;
}

std::vector<Violation> zero_interference(const TransferResult& tr, const Demands& demands) {
    if (demands.size() != tr.nu_sizes.size()) throw Error(Errc::InvalidArgument, "one demand list per sink expected");
    std::vector<Violation> out;
    for (std::size_t j = 0; j < demands.size(); ++j) {
        const std::set<Demand> wanted(demands[j].begin(), demands[j].end());
        const std::size_t r0 = tr.sink_offset(j);
        for (std::size_t i = 0; i < tr.mu_sizes.size(); ++i)
            for (std::size_t p = 0; p < tr.mu_sizes[i]; ++p) {
                if (wanted.count({i, p})) continue;
                const std::size_t col = tr.source_offset(i) + p;
                for (std::size_t r = 0; r < tr.nu_sizes[j]; ++r)
                    if (!tr.raw(r0 + r, col).is_zero()) {
                        out.push_back({i, p, j});
                        break;
                    }
            }
    }
    return out;
}

std::vector<SinkSubmatrix> invertibility(const TransferResult& tr, const Demands& demands) {
    if (demands.size() != tr.nu_sizes.size()) throw Error(Errc::InvalidArgument, "one demand list per sink expected");
    std::vector<SinkSubmatrix> out;
    for (std::size_t j = 0; j < demands.size(); ++j) {
        if (demands[j].size() != tr.nu_sizes[j])
            throw Error(Errc::NonSquare, "sink " + std::to_string(j) + " has " + std::to_string(tr.nu_sizes[j]) +
                                             " outputs but " + std::to_string(demands[j].size()) + " demands");
        SinkSubmatrix s;
        for (auto [i, p] : demands[j]) s.columns.push_back(tr.source_offset(i) + p);
        s.submatrix = tr.raw.block(tr.sink_offset(j), 0, tr.nu_sizes[j], tr.raw.cols()).select_columns(s.columns);
        s.det = s.submatrix.det();
        s.invertible = !s.det.is_zero();
        out.push_back(std::move(s));
    }
    return out;
}

FResult compute_f(const std::vector<Poly>& dets) {
    if (dets.empty()) throw Error(Errc::InvalidArgument, "no determinants");
    Poly f = Poly::constant(dets.front().field(), dets.front().field()->one());
    for (std::size_t j = 0; j < dets.size(); ++j) {
        if (dets[j].is_zero()) throw Error(Errc::ZeroDeterminant, "sink " + std::to_string(j) + " has det = 0");
        f = f * dets[j];
    }
    FResult r{f, f.eval(f.field()->one()), false};
    r.divisible_by_d_minus_1 = r.f_at_one.v == 0;
    return r;
}

PlanVerdict check_plan(const Poly& f, const TransformPlan& plan) {
    const galois::Field& F = *plan.field;
    std::optional<galois::Embedding> emb;
    if (!f.field()->same_as(F)) emb.emplace(f.field(), plan.field);
    Elem x = F.one();
    for (std::size_t t = 0; t < plan.n; ++t) {
        const Elem v = emb ? f.eval(*emb, x) : f.eval(x);
        if (v.v == 0) return PlanVerdict{false, t};
        x = F.mul(x, plan.alpha);
    }
    return PlanVerdict{};
}

TransformPlan find_plan(const Poly& f, std::size_t n_min, long d_max, SearchLimits limits) {
    const auto& base = f.field();
    if (f.is_zero() || f.eval(base->one()).v == 0)
        throw Error(Errc::Unfixable, "f(1) = 0, so (D - 1) divides f");
    const std::size_t lower = std::max<std::size_t>({n_min, static_cast<std::size_t>(std::max<long>(d_max, 0)) + 1, 1});
    const std::uint32_t p = base->characteristic();
    for (std::uint32_t a = 1; a <= limits.max_ext_degree; ++a) {
        const std::uint64_t m = std::uint64_t{base->degree()} * a;
        if (m > 32) break;
        const std::uint64_t q = galois::ipow(p, static_cast<std::uint32_t>(m));
        if (q - 1 < lower) continue;
        const galois::FieldRef field = a == 1 ? base : galois::Field::build(p, static_cast<std::uint32_t>(m));
        for (std::uint64_t n = lower; n <= limits.max_n && n <= q - 1; ++n) {
            if ((q - 1) % n != 0 || n % p == 0) continue;
            TransformPlan plan{n, field, field->element_of_order(n), d_max};
            if (check_plan(f, plan).ok) return plan;
        }
    }
    throw Error(Errc::SearchExhausted, "no plan with extension degree <= " + std::to_string(limits.max_ext_degree) +
                                           " and n <= " + std::to_string(limits.max_n));
}

FeasibilityReport analyze(const TransferResult& tr, const Demands& demands) {
    FeasibilityReport r;
    r.violations = zero_interference(tr, demands);
    r.zero_interference_ok = r.violations.empty();
    r.sinks = invertibility(tr, demands);
    r.invertible = true;
    std::vector<Poly> dets;
    for (const auto& s : r.sinks) {
        r.invertible = r.invertible && s.invertible;
        dets.push_back(s.det);
    }
    if (r.invertible) r.f = compute_f(dets);
    return r;
}

EquivalenceReport nontransform_equivalence(const TransferResult& tr, const Demands& demands, const TransformPlan& plan,
                                           SearchLimits limits) {
    EquivalenceReport rep;
    const auto fr = analyze(tr, demands);
    rep.nontransform_feasible = fr.feasible();
    if (rep.nontransform_feasible) {
        rep.unfixable = fr.f->divisible_by_d_minus_1;
        if (!rep.unfixable) {
            try {
                rep.found_plan = find_plan(fr.f->f, 1, tr.d_max, limits);
            } catch (const Error& e) {
                if (e.code() != Errc::SearchExhausted) throw;
            }
            rep.forward_ok = rep.found_plan.has_value() && check_plan(fr.f->f, *rep.found_plan).ok;
        }
    }

    // the transform code at this plan: instantaneous solvability at every t
    const auto mhat = transform::eigen_blocks(tr.M, plan);
    rep.transform_feasible = true;
    for (std::size_t j = 0; j < demands.size(); ++j) {
        const std::set<Demand> wanted(demands[j].begin(), demands[j].end());
        std::vector<std::size_t> cols;
        for (auto [i, p] : demands[j]) cols.push_back(tr.source_offset(i) + p);
        for (std::size_t t = 0; t < plan.n; ++t) {
            const auto rows = mhat[t].block(tr.sink_offset(j), 0, tr.nu_sizes[j], tr.M.cols());
            for (std::size_t i = 0; i < tr.mu_sizes.size(); ++i)
                for (std::size_t p = 0; p < tr.mu_sizes[i]; ++p)
                    if (!wanted.count({i, p}) && !rows.column_is_zero(tr.source_offset(i) + p))
                        rep.transform_feasible = false;
            if (cols.size() != rows.rows() || rows.select_columns(cols).det().v == 0) rep.transform_feasible = false;
        }
    }
    if (rep.transform_feasible) {
        // Mhat(n-1) = M(1)
        rep.dets_at_one_nonzero = true;
        for (std::size_t j = 0; j < demands.size(); ++j) {
            std::vector<std::size_t> cols;
            for (auto [i, p] : demands[j]) cols.push_back(tr.source_offset(i) + p);
            const auto rows = mhat[plan.n - 1].block(tr.sink_offset(j), 0, tr.nu_sizes[j], tr.M.cols());
            if (rows.select_columns(cols).det().v == 0) rep.dets_at_one_nonzero = false;
        }
        // reassembling the eigen blocks recovers the circulant, so a column
        // that is zero in every Mhat(t) is zero in every coefficient
        const auto circ = transform::build_circulant(tr.M, plan.n);
        const auto back = transform::reassemble(mhat, plan);
        rep.zero_columns_carry_over = back == transform::realized_in(circ, plan);
        const std::size_t mu = tr.M.cols();
        for (std::size_t c = 0; c < mu && rep.zero_columns_carry_over; ++c)
            for (std::size_t r = 0; r < tr.M.rows(); ++r) {
                bool all_hat_zero = true;
                for (const auto& m : mhat) all_hat_zero = all_hat_zero && m(r, c).v == 0;
                if (!all_hat_zero) continue;
                for (std::size_t blk = 0; blk < plan.n; ++blk)
                    if (back(r, blk * mu + c).v != 0) rep.zero_columns_carry_over = false;
            }
        rep.backward_ok = rep.dets_at_one_nonzero && rep.zero_columns_carry_over;
    }
    return rep;
}

bool order_divides_some_power(std::uint64_t p, std::uint64_t n, std::uint64_t m_limit) {
    if (n == 1) return m_limit >= 1;
    std::uint64_t x = 1;
    for (std::uint64_t m = 1; m <= m_limit; ++m) {
        x = (x * (p % n)) % n;
        if (x == 1) return true;
    }
    return false;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto q : galois::prime_factors(n)) r = r / q * (q - 1);
    return r;
}

}  // namespace tnc::feasibility
