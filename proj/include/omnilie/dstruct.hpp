#pragma once

// Subspace analysis in E_n: isotropy for the R^n-valued pairing,
// orthogonals, inclusion-maximality, bracket closure, D-structure
// verdicts, and a best-effort search for D-structures.

#include "omnilie/exec.hpp"
#include "omnilie/liealg.hpp"
#include "omnilie/omni.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace omnilie::dstruct {

using omni::OmniElement;
using omni::OmniSubspace;

bool is_isotropic(const OmniSubspace& f);

/// { e : <e, f> = 0 for all f in F }.
OmniSubspace omni_orthogonal(const OmniSubspace& f);

/// A null vector e = rational + sqrt(radicand) * surd extending F.
/// `surd` is empty when the witness is rational. Over R the extension
/// exists even when the radicand is not a rational square.
struct NullWitness {
    OmniElement rational;
    std::optional<OmniElement> surd;
    Rat radicand = 0;

    bool is_rational() const { return !surd.has_value(); }
};

/// True iff e is outside F, orthogonal to F, and <e,e> = 0, all decided
/// exactly (surd witnesses are expanded in the basis {1, sqrt(d)}).
bool verify_witness(const OmniSubspace& f, const NullWitness& w);

enum class Maximality { maximal, not_maximal, undetermined };
std::string_view to_string(Maximality m);

struct MaximalityVerdict {
    Maximality status = Maximality::undetermined;
    std::optional<NullWitness> witness;
    /// dim(F^perp) - dim(F)
    std::size_t extension_dim = 0;
};

struct MaximalityOptions {
    std::uint64_t seed = 0;
    /// Random 2-planes tried when the extension space has dimension >= 3.
    std::size_t samples = 64;
};

/// Inclusion-maximality among isotropic subspaces. Throws
/// std::invalid_argument when F is not isotropic.
MaximalityVerdict maximality_check(const OmniSubspace& f, const MaximalityOptions& opts = {});

/// Exact search for a nonzero null vector s*w1 + t*w2 (real s, t).
std::optional<NullWitness> null_vector_in_plane(const OmniElement& w1, const OmniElement& w2);

struct ClosureFailure {
    std::size_t i = 0;
    std::size_t j = 0;
    OmniElement x, y;
    /// [[x, y]], which is not in F.
    OmniElement bracket;
};

struct ClosureResult {
    bool closed = true;
    std::optional<ClosureFailure> failure;
};

/// Checks [[b_i, b_j]] in F for canonical basis pairs i < j.
ClosureResult bracket_closed(const OmniSubspace& f);

struct Classification {
    bool isotropic = false;
    /// Present only for isotropic input.
    std::optional<MaximalityVerdict> maximality;
    ClosureResult closure;
    bool d_structure = false;
    /// For D-structures: on every basis triple the jacobiator has zero
    /// matrix part, vector part T(b1,b2,b3), and T vanishes.
    std::optional<bool> restricted_jacobi;
};

Classification classify(const OmniSubspace& f, const MaximalityOptions& opts = {});

/// The unique B with F = F_B, or nullopt when F is not the graph of a map
/// R^n -> gl(n) (projection to R^n not bijective).
std::optional<liealg::BilinearOp> recover_bilinear(const OmniSubspace& f);

/// Linear maps lambda: gl(n) -> R^n whose graph is isotropic, as a subspace
/// of R^(n^3). Coordinate p*n + k is lambda(E_p)_k where E_p is the p-th
/// elementary matrix in row-major order.
exactla::Subspace isotropic_graph_space(std::size_t n);

enum class Strategy { exhaustive, graph, greedy };
std::optional<Strategy> parse_strategy(std::string_view name);
std::string_view to_string(Strategy s);

struct SearchResult {
    /// Canonically ordered, deduplicated.
    std::vector<OmniSubspace> d_structures;
    /// Isotropic and closed but maximality undetermined.
    std::vector<OmniSubspace> undetermined;
    std::size_t evaluated = 0;
    bool budget_exhausted = false;
};

/// exhaustive: every coordinate-maximal isotropic coordinate subspace
///             (complete for n = 1).
/// graph:      the horizontal subspace, graphs of catalog algebras of
///             dimension n, and graphs of random Lie algebras.
/// greedy:     random walks that add null vectors while staying isotropic
///             and closed.
/// `budget` caps the number of classified candidates. The result depends
/// only on (n, strategy, seed, budget).
SearchResult search_d_structures(std::size_t n, Strategy strategy, std::uint64_t seed, std::size_t budget,
                                 Exec exec = Exec::parallel);

}  // namespace omnilie::dstruct
