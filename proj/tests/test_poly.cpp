#include "doctest.h"

#include "omnilie/poly.hpp"
#include "omnilie/random.hpp"

using namespace omnilie;
using namespace omnilie::poly;

TEST_CASE("basic arithmetic")
{
    auto x = Poly::var(2, 0), y = Poly::var(2, 1);
    auto p = x * x + Rat(2) * x * y - Poly::constant(2, Rat(3));
    CHECK(p.degree() == 2);
    CHECK(p.coeff({1, 1}) == 2);
    CHECK(p.constant_term() == -3);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() < 0);
    CHECK(p.derivative(0) == Rat(2) * x + Rat(2) * y);
    CHECK(p.derivative(1) == Rat(2) * x);
    CHECK(Poly::term(Rat(0), {3, 1}).is_zero());
    CHECK_THROWS(x + Poly::var(3, 0));
}

TEST_CASE("ring laws and Leibniz rule on random polynomials")
{
    Rng rng{51, 1};
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = rng.uniform(1, 3);
        auto a = random_poly(n, 2, rng), b = random_poly(n, 2, rng), c = random_poly(n, 2, rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a.degree() <= 2);
        for (std::size_t i = 0; i < n; ++i) CHECK((a * b).derivative(i) == a.derivative(i) * b + a * b.derivative(i));
    }
}

TEST_CASE("monomial enumeration")
{
    CHECK(monomials_up_to(1, 2).size() == 3);
    CHECK(monomials_up_to(2, 2).size() == 6);
    CHECK(monomials_up_to(3, 2).size() == 10);
}
