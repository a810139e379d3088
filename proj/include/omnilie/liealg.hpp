#pragma once

// Bilinear operations on R^n given by structure constants.
//
// Catalog conventions (1-based basis names, brackets not listed are zero
// up to skew-symmetry):
//   abelian(n)   all zero
//   heisenberg3  [e1,e2] = e3
//   so3          [ei,ej] = eps_ijk ek   ([e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2)
//   sl2          basis (h,e,f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
//   affine1      [e1,e2] = e2
//   nonlie3      [e1,e2] = e2, [e2,e3] = e3, [e3,e1] = e1 (fails Jacobi)

#include "omnilie/exactla.hpp"
#include "omnilie/omni.hpp"
#include "omnilie/random.hpp"

#include <string>
#include <string_view>

namespace omnilie::liealg {

using exactla::RatMat;

class BilinearOp {
public:
    BilinearOp() = default;
    explicit BilinearOp(std::size_t n) : n_(n), c_(n * n * n) {}

    std::size_t n() const { return n_; }
    /// B(e_i, e_j) = sum_k c(i,j,k) e_k, 0-based.
    Rat& c(std::size_t i, std::size_t j, std::size_t k) { return c_.at((i * n_ + j) * n_ + k); }
    const Rat& c(std::size_t i, std::size_t j, std::size_t k) const { return c_.at((i * n_ + j) * n_ + k); }

    /// Sets c(i,j,k) = val and c(j,i,k) = -val.
    void set_skew(std::size_t i, std::size_t j, std::size_t k, const Rat& val);

    RatVec apply(std::span<const Rat> u, std::span<const Rat> w) const;

    friend bool operator==(const BilinearOp&, const BilinearOp&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Rat> c_;
};

bool is_skew(const BilinearOp& b);

/// B(B(ei,ej),ek) + B(B(ej,ek),ei) + B(B(ek,ei),ej). Rejects non-skew input.
RatVec jacobi_defect(const BilinearOp& b, std::size_t i, std::size_t j, std::size_t k);
/// Skew and every defect over i<j<k vanishes.
bool is_lie(const BilinearOp& b);

/// Matrix of w -> B(v, w).
RatMat ad_matrix(const BilinearOp& b, std::span<const Rat> v);

/// Generators (ad(e_i), e_i), i = 0..n-1.
std::vector<omni::OmniElement> graph_generators(const BilinearOp& b);
/// The graph F_B of ad_B inside E_n.
omni::OmniSubspace graph_subspace(const BilinearOp& b);

/// Names: "abelian(N)", "heisenberg3", "so3", "sl2", "affine1", "nonlie3".
/// Throws std::invalid_argument on unknown names.
BilinearOp catalog(std::string_view name);
std::vector<std::string> catalog_names();

/// B'(u, w) = g B(g^-1 u, g^-1 w). g must be invertible.
BilinearOp change_basis(const BilinearOp& b, const RatMat& g);
BilinearOp direct_sum(const BilinearOp& x, const BilinearOp& y);

/// Skew tensor with entries drawn from Rng::small_rat, each nonzero with
/// probability ~1/2.
BilinearOp random_skew(std::size_t n, Rng& rng);
/// Basis change (integer entries in [-2,2], invertible) of a direct sum of
/// catalog Lie algebras of total dimension n.
BilinearOp random_lie(std::size_t n, Rng& rng);

}  // namespace omnilie::liealg
