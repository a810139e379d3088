#pragma once

// Courant's bracket on polynomial sections of T + T* over R^n, the Cartan
// calculus it needs, Dirac-structure checks, sampled C-algebra axioms, and
// the linearization at the origin that recovers the omni-Lie algebra.
//
// Sign conventions:
//   pi#(theta)_i   = sum_j pi_ij theta_j
//   omega_b(xi)_j  = sum_i xi_i omega_ij
//   (i_xi omega)_j = sum_i xi_i omega_ij
//   iota(A, v)     = (xi_{A^T}, v . dx), xi_M = sum_i (M x)_i d_i
// The transpose in iota is forced by [xi_M, xi_N] = xi_{[N,M]}.

#include "omnilie/exactla.hpp"
#include "omnilie/exec.hpp"
#include "omnilie/omni.hpp"
#include "omnilie/poly.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace omnilie::courant {

using poly::Poly;

/// sum_i xi[i] d/dx_i
struct VectorField {
    std::vector<Poly> c;

    static VectorField zero(std::size_t nvars);
    /// Constant field sum_i v_i d_i.
    static VectorField constant(std::span<const Rat> v);
    /// d/dx_i
    static VectorField coordinate(std::size_t nvars, std::size_t i);
    /// (M x) . d
    static VectorField linear(const exactla::RatMat& m);

    std::size_t nvars() const { return c.size(); }
    bool is_zero() const;
    friend bool operator==(const VectorField&, const VectorField&) = default;
};

/// sum_i theta[i] dx_i
struct OneForm {
    std::vector<Poly> c;

    static OneForm zero(std::size_t nvars);
    static OneForm constant(std::span<const Rat> v);
    /// dx_i
    static OneForm coordinate(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return c.size(); }
    bool is_zero() const;
    friend bool operator==(const OneForm&, const OneForm&) = default;
};

/// Square matrix of polynomials; used for 2-forms (omega_ij = omega(d_i, d_j))
/// and bivectors (pi_ij = pi(dx_i, dx_j)).
struct PolyMatrix {
    std::size_t n = 0;
    std::vector<Poly> e;

    static PolyMatrix zero(std::size_t nvars);
    Poly& at(std::size_t i, std::size_t j) { return e.at(i * n + j); }
    const Poly& at(std::size_t i, std::size_t j) const { return e.at(i * n + j); }
    bool is_skew() const;
    bool is_zero() const;
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;
};

struct TwoForm {
    PolyMatrix m;
};

struct Bivector {
    PolyMatrix m;
};

/// Alternating 3-tensor t(i,j,k).
struct ThreeForm {
    std::size_t n = 0;
    std::vector<Poly> e;

    const Poly& at(std::size_t i, std::size_t j, std::size_t k) const { return e.at((i * n + j) * n + k); }
    bool is_zero() const;
};

struct Section {
    VectorField xi;
    OneForm theta;

    static Section zero(std::size_t nvars);
    std::size_t nvars() const { return xi.nvars(); }
    bool is_zero() const { return xi.is_zero() && theta.is_zero(); }
    friend bool operator==(const Section&, const Section&) = default;
};

Section operator+(const Section& a, const Section& b);
Section operator-(const Section& a, const Section& b);
Section operator*(const Poly& f, const Section& s);

/// xi(p) = sum_i xi_i d_i p
Poly apply(const VectorField& xi, const Poly& p);
VectorField vf_bracket(const VectorField& x1, const VectorField& x2);
OneForm exterior_d(const Poly& f);
/// (d theta)_ij = d_i theta_j - d_j theta_i
TwoForm exterior_d1(const OneForm& theta);
/// (d omega)_ijk = d_i omega_jk - d_j omega_ik + d_k omega_ij
ThreeForm exterior_d2(const TwoForm& omega);
Poly interior(const VectorField& x, const OneForm& t);
OneForm interior(const VectorField& x, const TwoForm& w);
/// i_xi d theta + d i_xi theta
OneForm lie_derivative_1form(const VectorField& x, const OneForm& t);

enum class BracketVariant {
    courant,
    /// Drops the -1/2 d(i_xi1 theta2 - i_xi2 theta1) term (negative control).
    uncorrected,
};

Section courant_bracket(const Section& s1, const Section& s2, BracketVariant variant = BracketVariant::courant);
/// 1/2 (theta2(xi1) + theta1(xi2))
Poly courant_pairing(const Section& s1, const Section& s2);
/// D f = (0, df), from <Df, e> = 1/2 rho(e) f with rho(xi, theta) = xi.
Section gradient(const Poly& f);

VectorField sharp(const Bivector& pi, const OneForm& theta);
OneForm flat(const TwoForm& omega, const VectorField& xi);

/// B + B^perp for a constant subspace B of R^n.
struct Foliation {
    exactla::Subspace b;
};

using DiracCandidate = std::variant<Bivector, TwoForm, Foliation>;

struct DiracReport {
    std::string kind;
    std::size_t nvars = 0;
    std::size_t generators = 0;
    /// Fibre rank of the generated subbundle; n for a maximal isotropic one.
    std::size_t rank = 0;
    bool isotropic = false;
    bool closed = false;
    bool passed = false;
    /// Generator pair (i, j) whose bracket leaves the subbundle, and the
    /// part of the bracket that does not lie in it.
    std::optional<std::array<std::size_t, 2>> failing_pair;
    std::optional<Section> residual;
    /// Two-form candidates only: whether d omega vanishes.
    std::optional<bool> form_closed;
    std::string justification;
};

/// Throws std::invalid_argument for ill-formed candidates (non-skew
/// matrices, mismatched dimensions).
DiracReport dirac_check(const DiracCandidate& candidate);

struct SchoutenResult {
    /// (i, j, k) with i < j < k, 0-based, and Jac(x_i, x_j, x_k).
    std::vector<std::array<std::size_t, 3>> index;
    std::vector<Poly> value;
    bool is_zero() const;
};

/// Jacobiator of {f, g} = sum_ab pi_ab d_a f d_b g on coordinate functions.
SchoutenResult schouten_oracle(const Bivector& pi);

/// [s1, f s2] - f [s1, s2] - (xi1 f) s2 + <s1, s2> (0, df)
Section leibniz_check(const Section& s1, const Section& s2, const Poly& f,
                      BracketVariant variant = BracketVariant::courant);

Section random_section(std::size_t nvars, std::size_t degree_bound, Rng& rng);

struct AxiomSampleFailure {
    std::size_t trial = 0;
    std::string axiom;
    Section s1, s2, s3;
    Poly f, g;
    /// Section-valued identities set `residual`; scalar ones (axiom4
    /// pairing, axiom5) set `residual_scalar`.
    std::optional<Section> residual;
    std::optional<Poly> residual_scalar;
};

struct AxiomSampleReport {
    std::size_t nvars = 0;
    std::size_t degree_bound = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    /// Trials passing every axiom.
    std::size_t passed = 0;
    /// Names of checked identities, in order.
    std::vector<std::string> axioms;
    std::optional<AxiomSampleFailure> first_failure;
};

/// For each seeded trial (stream (seed, nvars, trial)) draws s1, s2, s3, f, g
/// and checks: antisymmetry, axiom1 (jacobiator = (0, dT)), axiom2, axiom3
/// (leibniz_check), axiom4 (rho D f = 0 and <Df, Dg> = 0), axiom5.
AxiomSampleReport axioms_sample_check(std::size_t nvars, std::size_t degree_bound, std::size_t trials,
                                      std::uint64_t seed, BracketVariant variant = BracketVariant::courant,
                                      Exec exec = Exec::parallel);

/// iota(A, v) = (xi_{A^T}, v . dx)
Section linearize(const omni::OmniElement& e);
/// Inverse of iota on (homogeneous linear field, constant form) sections.
std::optional<omni::OmniElement> delinearize(const Section& s);

struct LinearizeReport {
    Section lhs;  // courant_bracket(iota e1, iota e2)
    Section rhs;  // iota(omni_bracket(e1, e2))
    bool bracket_ok = false;
    Poly pairing;  // courant_pairing(iota e1, iota e2)
    /// pairing is homogeneous linear with coefficient vector omni_pairing(e1, e2).
    bool pairing_ok = false;
    RatVec pairing_coefficients;
    RatVec omni_pairing;
    bool ok() const { return bracket_ok && pairing_ok; }
};

LinearizeReport linearize_roundtrip(const omni::OmniElement& e1, const omni::OmniElement& e2);

}  // namespace omnilie::courant
