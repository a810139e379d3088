#pragma once

// Finite-dimensional (R, A) C-algebras over Q: tensors for the algebra,
// module action, pairing, bracket, and anchor, with exact checkers for
// the structural prerequisites and for axioms 0-5.
//
// Every axiom is R-multilinear in its arguments (axiom 3 also in the
// A-argument), so checking on basis tuples is a complete decision.

#include "omnilie/exactla.hpp"
#include "omnilie/exec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace omnilie::calgebra {

using exactla::RatMat;

/// Dense 3-index tensor over Q.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t d0, std::size_t d1, std::size_t d2) : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2) {}

    std::size_t dim0() const { return d0_; }
    std::size_t dim1() const { return d1_; }
    std::size_t dim2() const { return d2_; }
    Rat& at(std::size_t i, std::size_t j, std::size_t k) { return data_.at((i * d1_ + j) * d2_ + k); }
    const Rat& at(std::size_t i, std::size_t j, std::size_t k) const { return data_.at((i * d1_ + j) * d2_ + k); }

    /// sum_{i,j} x_i y_j T(i, j, .)
    RatVec contract(std::span<const Rat> x, std::span<const Rat> y) const;

    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
    std::vector<Rat> data_;
};

struct CAlgebraInstance {
    std::size_t dim_a = 0;
    std::size_t dim_e = 0;
    /// a_p a_q = sum_r mul_a(p,q,r) a_r
    Tensor3 mul_a;
    /// a_p e_i = sum_j act(p,i,j) e_j
    Tensor3 act;
    /// <e_i, e_j> = sum_p pairing(i,j,p) a_p
    Tensor3 pairing;
    /// [[e_i, e_j]] = sum_k bracket(i,j,k) e_k
    Tensor3 bracket;
    /// rho(e_i) acts on A-coordinates as the dim_a x dim_a matrix rho[i].
    std::vector<RatMat> rho;

    RatVec mul(std::span<const Rat> f, std::span<const Rat> g) const { return mul_a.contract(f, g); }
    RatVec scalar(std::span<const Rat> f, std::span<const Rat> e) const { return act.contract(f, e); }
    RatVec pair(std::span<const Rat> e1, std::span<const Rat> e2) const { return pairing.contract(e1, e2); }
    RatVec brk(std::span<const Rat> e1, std::span<const Rat> e2) const { return bracket.contract(e1, e2); }
    RatMat anchor(std::span<const Rat> e) const;
};

/// Throws DimensionError when tensor shapes disagree with dim_a / dim_e.
void check_shapes(const CAlgebraInstance& c);

struct CheckResult {
    std::string name;
    bool passed = true;
    /// Number of basis tuples examined.
    std::size_t cases = 0;
    /// First failing basis tuple (0-based indices; order documented per check).
    std::vector<std::size_t> witness;
    /// Left side minus right side at the witness.
    RatVec residual;
};

struct Report {
    std::vector<CheckResult> checks;
    bool passed() const;
    const CheckResult* find(std::string_view name) const;
};

/// Prerequisite checks. Names and witness order:
///   mul_a.commutative (p,q)      mul_a.associative (p,q,r)
///   module.law (p,q,i)           pairing.symmetric (i,j)
///   pairing.a_bilinear (p,i,j)   bracket.antisymmetric (i,j)
///   rho.leibniz (i,p,q)          rho.a_linear (p,i,q)
///   beta.injective ()            residual = a nonzero e with <e, .> = 0
Report validate_instance(const CAlgebraInstance& c, Exec exec = Exec::parallel);

/// Df with <Df, e_j> = 1/2 rho(e_j) f for all j, or nullopt when no such
/// element exists. Unique when beta is injective.
std::optional<RatVec> gradient(const CAlgebraInstance& c, std::span<const Rat> f);

/// 1/3 <[[e1,e2]], e3> + cyclic
RatVec cartan_T(const CAlgebraInstance& c, std::span<const Rat> e1, std::span<const Rat> e2,
                std::span<const Rat> e3);

struct AxiomOptions {
    /// dim_e x dim_a matrix used as D instead of solving for it. The
    /// defining relation is then checked as axiom0.defining.
    std::optional<RatMat> forced_gradient;
};

/// Axiom checks. Names and witness order:
///   axiom0 (p)  gradient of a_p exists   [axiom0.defining (p,j) when forced]
///   axiom1 (i,j,k)  [[[[e_i,e_j]],e_k]] + c.p. - D T(e_i,e_j,e_k)
///   axiom2 (i,j)    rho[[e_i,e_j]] - [rho e_i, rho e_j]      (row-major matrix)
///   axiom3 (i,j,p)  [[e_i, a_p e_j]] - a_p[[e_i,e_j]] - (rho(e_i)a_p) e_j + <e_i,e_j> D a_p
///   axiom4.rho_d (p)     rho(D a_p)                           (row-major matrix)
///   axiom4.pairing (p,q) <D a_p, D a_q>
///   axiom5 (i,j,k)  rho(e)<h1,h2> - <[[e,h1]] + D<e,h1>, h2> - <h1, [[e,h2]] + D<e,h2>>
///                   with (e,h1,h2) = (e_i,e_j,e_k)
/// When axiom0 fails, the remaining axioms are not evaluated.
Report check_axioms(const CAlgebraInstance& c, const AxiomOptions& opts = {}, Exec exec = Exec::parallel);

/// Recomputes the residual a check reports for a given witness tuple.
RatVec residual(const CAlgebraInstance& c, std::string_view check, std::span<const std::size_t> witness,
                const AxiomOptions& opts = {});

/// E_n as a C-algebra: A = R^n with zero product, E = gl(n) + R^n with zero
/// A-action, derivations of A identified with gl(n), rho(A, v) = A, pairing
/// and bracket of the omni-Lie algebra. E-coordinates follow the omni
/// flattening (row-major A, then v).
CAlgebraInstance build_omni_instance(std::size_t n);

/// dim_e x dim_a matrix of f -> Df, or nullopt when some basis gradient is undefined.
std::optional<RatMat> gradient_matrix(const CAlgebraInstance& c);

}  // namespace omnilie::calgebra
