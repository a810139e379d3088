#pragma once

// Sparse multivariate polynomials over Q. No truncation: every operation
// here is exact and closed on polynomials.

#include "omnilie/exactla.hpp"
#include "omnilie/random.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace omnilie::poly {

using Monomial = std::vector<std::uint32_t>;

class Poly {
public:
    explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rat& c);
    /// x_i, 0-based.
    static Poly var(std::size_t nvars, std::size_t i);
    static Poly term(const Rat& c, Monomial exps);

    std::size_t nvars() const { return nvars_; }
    /// No stored coefficient is zero.
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    Rat coeff(const Monomial& m) const;
    /// Coefficient of the constant monomial.
    Rat constant_term() const;

    /// d/dx_i
    Poly derivative(std::size_t i) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rat(-1); }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void add_term(const Monomial& m, const Rat& c);
    void check_vars(const Poly& o) const;

    std::size_t nvars_;
    std::map<Monomial, Rat> terms_;
};

/// Monomials of total degree <= bound in graded order.
std::vector<Monomial> monomials_up_to(std::size_t nvars, std::size_t bound);

/// Each monomial of degree <= bound present with probability 1/2, with a
/// coefficient from Rng::small_rat.
Poly random_poly(std::size_t nvars, std::size_t degree_bound, Rng& rng);

}  // namespace omnilie::poly
