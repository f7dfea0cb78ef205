#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tnc/netmodel/transfer.hpp"
#include "tnc/transform/transform.hpp"

namespace tnc::feasibility {

using galois::Elem;
using galois::Poly;
using galois::PolyMatrix;
using netmodel::Demand;
using netmodel::TransferResult;
using transform::TransformPlan;

using Demands = std::vector<std::vector<Demand>>;  // per sink

/// Demands as recorded on the network's sinks.
Demands demands_of(const netmodel::Network& net);

/// An undemanded (source, process) that still reaches a sink.
struct Violation {
    std::size_t source = 0;
    std::size_t process = 0;
    std::size_t sink = 0;
    bool operator==(const Violation&) const = default;
};

std::vector<Violation> zero_interference(const TransferResult& tr, const Demands& demands);

struct SinkSubmatrix {
    std::vector<std::size_t> columns;  // stacked process indices, in demand order
    PolyMatrix submatrix;              // from the raw transfer matrix
    Poly det;
    bool invertible = false;
};

/// Square submatrix of demanded columns at every sink and its determinant.
/// Uses the raw (unnormalized) matrix, so determinants carry the full path
/// delays. Throws NonSquare when a sink's demand count differs from its
/// output count.
std::vector<SinkSubmatrix> invertibility(const TransferResult& tr, const Demands& demands);

struct FResult {
    Poly f;
    Elem f_at_one;
    /// (D - 1) | f, i.e. f(1) = 0.
    bool divisible_by_d_minus_1 = false;
};

/// Product of the per-sink determinants. Throws ZeroDeterminant if any is zero.
FResult compute_f(const std::vector<Poly>& dets);

struct PlanVerdict {
    bool ok = true;
    std::optional<std::size_t> failing_t;  // first t with f(alpha^t) = 0
};

/// f(alpha^t) != 0 for every 0 <= t < n, evaluated in the plan's field.
PlanVerdict check_plan(const Poly& f, const TransformPlan& plan);

struct SearchLimits {
    std::uint32_t max_ext_degree = 12;
    std::size_t max_n = 4096;
};

/// Smallest extension degree a, then smallest n >= max(n_min, d_max + 1)
/// dividing p^{ma} - 1 with p not dividing n, whose roots of unity avoid
/// the roots of f. Throws Unfixable when f(1) = 0 and SearchExhausted.
TransformPlan find_plan(const Poly& f, std::size_t n_min, long d_max = 0, SearchLimits limits = {});

struct FeasibilityReport {
    std::vector<Violation> violations;
    std::vector<SinkSubmatrix> sinks;
    std::optional<FResult> f;  // absent when some determinant vanishes
    bool zero_interference_ok = false;
    bool invertible = false;
    /// Zero interference and invertibility: a feasible code without transform.
    bool feasible() const { return zero_interference_ok && invertible; }
};

FeasibilityReport analyze(const TransferResult& tr, const Demands& demands);

/// Both directions of the transform / non-transform equivalence on a
/// concrete code.
struct EquivalenceReport {
    // non-transform feasible with f(1) != 0 implies a plan exists
    bool nontransform_feasible = false;
    bool unfixable = false;  // f(1) = 0
    std::optional<TransformPlan> found_plan;
    bool forward_ok = false;
    // given a transform plan: det(M'_j(1)) != 0 for all j, and columns that
    // vanish in every Mhat(t) vanish in every M^(d)
    bool transform_feasible = false;
    bool dets_at_one_nonzero = false;
    bool zero_columns_carry_over = false;
    bool backward_ok = false;
};

EquivalenceReport nontransform_equivalence(const TransferResult& tr, const Demands& demands, const TransformPlan& plan,
                                           SearchLimits limits = {});

/// True iff n divides p^m - 1 for some 1 <= m <= m_limit.
bool order_divides_some_power(std::uint64_t p, std::uint64_t n, std::uint64_t m_limit);
std::uint64_t euler_phi(std::uint64_t n);

}  // namespace tnc::feasibility
