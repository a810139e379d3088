#pragma once

// The omni-Lie algebra E_n = gl(n) x R^n.
//
// Flattening convention used by every subspace computation: an element
// (A, v) maps to R^(n^2 + n) as the row-major entries of A followed by v.
// So coordinate r*n + c is A(r,c) and coordinate n^2 + i is v_i.

#include "omnilie/exactla.hpp"
#include "omnilie/exec.hpp"
#include "omnilie/random.hpp"

#include <cstdint>
#include <optional>

namespace omnilie::omni {

using exactla::RatMat;

class OmniElement {
public:
    OmniElement() = default;
    /// Zero element of E_n.
    explicit OmniElement(std::size_t n) : a_(n, n), v_(n) {}
    OmniElement(RatMat a, RatVec v);

    static OmniElement matrix(RatMat a);
    static OmniElement vector(RatVec v);
    static OmniElement from_flat(std::size_t n, std::span<const Rat> flat);
    /// Basis element number k of the flattening.
    static OmniElement basis(std::size_t n, std::size_t k);

    std::size_t n() const { return v_.size(); }
    const RatMat& a() const { return a_; }
    const RatVec& v() const { return v_; }
    RatVec flat() const;
    bool is_zero() const { return a_.is_zero() && exactla::is_zero(v_); }

    friend bool operator==(const OmniElement&, const OmniElement&) = default;

private:
    RatMat a_;
    RatVec v_;
};

inline std::size_t flat_dim(std::size_t n) { return n * n + n; }

OmniElement operator+(const OmniElement& x, const OmniElement& y);
OmniElement operator-(const OmniElement& x, const OmniElement& y);
OmniElement operator*(const Rat& s, const OmniElement& x);

/// ([A1,A2], 1/2 (A1 v2 - A2 v1))
OmniElement omni_bracket(const OmniElement& e1, const OmniElement& e2);
/// 1/2 (A1 v2 + A2 v1)
RatVec omni_pairing(const OmniElement& e1, const OmniElement& e2);
/// 1/3 (<[e1,e2],e3> + <[e2,e3],e1> + <[e3,e1],e2>)
RatVec cartan_form(const OmniElement& e1, const OmniElement& e2, const OmniElement& e3);
/// [[e1,e2],e3] + cyclic, evaluated literally.
OmniElement jacobiator(const OmniElement& e1, const OmniElement& e2, const OmniElement& e3);

/// A subspace of E_n stored in canonical form under the flattening.
class OmniSubspace {
public:
    explicit OmniSubspace(std::size_t n = 0) : n_(n), sub_(flat_dim(n)) {}
    OmniSubspace(std::size_t n, exactla::Subspace sub);

    static OmniSubspace span(std::size_t n, const std::vector<OmniElement>& gens);
    /// gl(n) + {0}
    static OmniSubspace horizontal(std::size_t n);
    /// {0} + R^n
    static OmniSubspace vertical(std::size_t n);
    static OmniSubspace whole(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t dim() const { return sub_.dim(); }
    const exactla::Subspace& sub() const { return sub_; }
    /// Canonical basis rows decoded as elements.
    std::vector<OmniElement> basis() const;
    bool contains(const OmniElement& e) const;

    friend bool operator==(const OmniSubspace&, const OmniSubspace&) = default;
    friend auto operator<=>(const OmniSubspace& x, const OmniSubspace& y)
    {
        if (auto c = x.n_ <=> y.n_; c != 0) return c;
        return x.sub_ <=> y.sub_;
    }

private:
    std::size_t n_;
    exactla::Subspace sub_;
};

OmniElement random_element(std::size_t n, Rng& rng);

struct AnomalyFailure {
    std::size_t index;
    OmniElement e1, e2, e3;
    OmniElement jacobiator;
    RatVec cartan;
};

struct AnomalySweep {
    std::size_t n = 0;
    std::size_t trials = 0;
    std::size_t passed = 0;
    /// Lowest-index failure, if any.
    std::optional<AnomalyFailure> first_failure;
};

/// Checks jacobiator(e1,e2,e3) == (0, cartan_form(e1,e2,e3)) on `trials`
/// seeded random triples. Triple i is drawn from stream (seed, n, i).
AnomalySweep anomaly_sweep(std::size_t n, std::size_t trials, std::uint64_t seed,
                           Exec exec = Exec::parallel);

}  // namespace omnilie::omni
