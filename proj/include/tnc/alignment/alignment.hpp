#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tnc/netmodel/leks.hpp"
#include "tnc/netmodel/transfer.hpp"
#include "tnc/transform/transform.hpp"

namespace tnc::alignment {

using galois::Elem;
using galois::FieldRef;
using galois::Matrix;
using transform::TransformPlan;

/// Which cross pairs carry no flow. Indices are canonical pair labels.
///   full: none
///   cat1: S2-D1
///   cat2: S2-D1, S3-D1, S1-D2
///   cat3: S3-D1, S1-D2, S2-D3
///   cat4: S3-D1, S3-D2, S1-D3, S2-D3
enum class Category { Full, Cat1, Cat2, Cat3, Cat4 };

const char* to_string(Category c);

/// zero[i][j] marks source i -> sink j (0-based) as disconnected.
using ZeroPattern = std::array<std::array<bool, 3>, 3>;

struct Classification {
    Category category = Category::Full;
    /// Canonical pair c is the network's pair perm[c].
    std::array<std::size_t, 3> perm{0, 1, 2};
};

/// Maps a cross-pair zero pattern onto a listed category by relabelling the
/// three pairs. Throws UnsupportedPattern when no relabelling fits (this
/// includes the pattern where every cross pair is disconnected).
Classification classify(const ZeroPattern& zero);

struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    bool operator==(const Fraction&) const = default;
};

/// Eigenvalue-domain alignment instance on N = 2n + 1 generations.
///
/// Generations are stacked newest-first, so row r of every length-N vector
/// or N-row matrix belongs to generation N-1-r. mhat[i][j][r] is the
/// eigenvalue of source i -> sink j at that row, which is M_ij(alpha^r).
/// All indices are canonical (see Classification::perm).
struct AlignmentInstance {
    std::size_t n = 0;
    std::size_t N = 0;
    TransformPlan plan;
    Category category = Category::Full;
    std::array<std::size_t, 3> perm{0, 1, 2};
    std::array<std::array<std::vector<Elem>, 3>, 3> mhat;
    // full category only
    std::vector<Elem> a, b, T, R, S;
    Matrix V1, V2, V3;
    Matrix A, B;  // mixing matrices of cat1 / cat2, (n+1) x n
    /// Names of eigenvalue vectors that had to be inverted but contain a
    /// zero; when nonempty the precoders are not built.
    std::vector<std::string> singular;

    // channel for encode_decode: unit-delay network with kernels in the
    // plan's field
    netmodel::Network net;
    netmodel::Kernels kernels;
    long d_prime_min = 0;
};

/// Builds an instance from eigenvalues that are already known. Entries of a
/// disconnected pair must be all zero. Random precoder entries come from
/// `seed`.
AlignmentInstance instance_from_eigenvalues(const TransformPlan& plan, std::size_t n, Category category,
                                            const std::array<std::array<std::vector<Elem>, 3>, 3>& mhat,
                                            std::uint64_t seed);

/// Requires 3 unicast sources and sinks with one process / output each,
/// min-cut(S_i, D_i) = 1 (MinCutViolation otherwise) and p not dividing
/// 2n+1 (CharacteristicDividesBlock). Kernels must be time-invariant.
/// Without `field` the smallest extension of the kernel field holding an
/// element of order 2n+1 is used.
AlignmentInstance build_instance(const netmodel::Network& net, const netmodel::LekAssignment& leks, std::size_t n,
                                 std::uint64_t seed = 0, std::optional<FieldRef> field = std::nullopt);

struct Condition {
    std::string name;
    std::size_t rank = 0;
    std::size_t required = 0;
    bool ok = false;
};

struct Identity {
    std::string name;
    bool holds = false;
};

struct AlignmentReport {
    std::vector<Condition> conditions;
    /// Structural identities of the construction (interference alignment and
    /// column-subset absorption), checked entry by entry.
    std::vector<Identity> identities;
    bool feasible = false;
};

AlignmentReport check_alignment(const AlignmentInstance& inst);

struct Recovery {
    std::array<std::vector<Elem>, 3> symbols;  // per canonical sink
    std::array<Fraction, 3> throughput;
    std::size_t channel_uses = 0;
};

/// Number of source symbols per canonical pair: n+1, n, n (2n+1 for the
/// third pair of cat4).
std::array<std::size_t, 3> symbol_counts(const AlignmentInstance& inst);
std::array<Fraction, 3> throughputs(const AlignmentInstance& inst);

/// Precodes, runs the cyclic-prefix pipeline through the network, and solves
/// at each sink. Throws SingularDecodeSystem if a sink system is singular.
Recovery encode_decode(const AlignmentInstance& inst, const std::array<std::vector<Elem>, 3>& x);

struct SearchResult {
    netmodel::LekAssignment leks;
    AlignmentInstance instance;
    AlignmentReport report;
    std::size_t attempts = 0;
    std::uint64_t seed = 0;
};

/// Seeded retry loop: attempt k draws kernels and precoder entries from a
/// generator keyed by (seed, k). When `field` has no element of order 2n+1
/// the search runs in the smallest field of the same characteristic that
/// does. Throws NotFound once the budget is spent.
SearchResult align_search(const netmodel::Network& net, std::size_t n, const FieldRef& field, std::uint64_t seed,
                          std::size_t budget);

}  // namespace tnc::alignment
