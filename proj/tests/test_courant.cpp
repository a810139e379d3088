#include "doctest.h"

#include "omnilie/courant.hpp"
#include "omnilie/random.hpp"

using namespace omnilie;
using namespace omnilie::courant;

namespace {

Poly x(std::size_t n, std::size_t i) { return Poly::var(n, i); }
Poly k(std::size_t n, Rat c) { return Poly::constant(n, c); }

Bivector bivector3(const Poly& p12, const Poly& p13, const Poly& p23)
{
    auto m = PolyMatrix::zero(3);
    m.at(0, 1) = p12, m.at(1, 0) = -p12;
    m.at(0, 2) = p13, m.at(2, 0) = -p13;
    m.at(1, 2) = p23, m.at(2, 1) = -p23;
    return {m};
}

TwoForm two_form3(const Poly& w12, const Poly& w13, const Poly& w23) { return {bivector3(w12, w13, w23).m}; }

// pi_ij = g * sum_k eps_ijk d_k phi, Poisson for every g, phi.
Bivector nambu(const Poly& phi, const Poly& g)
{
    return bivector3(g * phi.derivative(2), -(g * phi.derivative(1)), g * phi.derivative(0));
}

}  // namespace

TEST_CASE("Courant bracket example and pairing")
{
    Section s1{VectorField::coordinate(1, 0), OneForm::zero(1)};
    Section s2{VectorField::zero(1), OneForm{{x(1, 0)}}};
    auto b = courant_bracket(s1, s2);
    CHECK(b.xi.is_zero());
    CHECK(b.theta.c[0] == k(1, Rat(1, 2)));
    CHECK(courant_pairing(s1, s2) == Rat(1, 2) * x(1, 0));
    auto u = courant_bracket(s1, s2, BracketVariant::uncorrected);
    CHECK(u.theta.c[0] == k(1, Rat(1)));
}

TEST_CASE("Cartan calculus identities")
{
    Rng rng{61, 1};
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = rng.uniform(1, 3);
        auto f = poly::random_poly(n, 3, rng);
        auto s = random_section(n, 2, rng);
        CHECK(exterior_d1(exterior_d(f)).m.is_zero());
        CHECK(exterior_d2(exterior_d1(s.theta)).is_zero());
        // L_X df = d(X f)
        CHECK(lie_derivative_1form(s.xi, exterior_d(f)) == exterior_d(apply(s.xi, f)));
        CHECK(interior(s.xi, exterior_d(f)) == apply(s.xi, f));
        auto s2 = random_section(n, 2, rng);
        CHECK((courant_bracket(s, s2) + courant_bracket(s2, s)).is_zero());
        CHECK(leibniz_check(s, s2, f).is_zero());
        CHECK(gradient(f).xi.is_zero());
    }
}

TEST_CASE("sampled axioms hold for the Courant bracket")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        auto r = axioms_sample_check(n, 2, 20, 3);
        CHECK(r.passed == 20);
        CHECK_FALSE(r.first_failure);
        CHECK(r.axioms.size() == 7);
    }
}

TEST_CASE("uncorrected bracket fails the sampled axioms")
{
    auto r = axioms_sample_check(2, 2, 10, 3, BracketVariant::uncorrected);
    CHECK(r.passed < 10);
    REQUIRE(r.first_failure);
    CHECK((r.first_failure->residual || r.first_failure->residual_scalar));
}

TEST_CASE("bivector pool agrees with the Schouten oracle")
{
    Rng rng{61, 2};
    std::vector<std::pair<Bivector, bool>> pool;  // candidate, known Poisson
    const auto x1 = x(3, 0), x2 = x(3, 1), x3 = x(3, 2);
    pool.push_back({bivector3(x3, -x2, x1), true});  // so(3)
    pool.push_back({bivector3(k(3, 1), k(3, 0), k(3, 2)), true});
    pool.push_back({bivector3(x1 * x2, k(3, 0), k(3, 0)), true});
    pool.push_back({bivector3(x3, k(3, 0), x2), false});
    pool.push_back({bivector3(x2, x3, x1), false});
    for (int t = 0; t < 12; ++t) pool.push_back({nambu(poly::random_poly(3, 3, rng), poly::random_poly(3, 1, rng)), true});
    for (int t = 0; t < 8; ++t) {
        auto m = PolyMatrix::zero(2);
        auto p = poly::random_poly(2, 3, rng);
        m.at(0, 1) = p, m.at(1, 0) = -p;
        pool.push_back({{m}, true});
    }
    for (int t = 0; t < 8; ++t)
        pool.push_back({bivector3(poly::random_poly(3, 1, rng), poly::random_poly(3, 1, rng), poly::random_poly(3, 1, rng)),
                        false});  // random linear entries: agreement only
    REQUIRE(pool.size() >= 20);

    std::size_t positives = 0, negatives = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const auto& [pi, poisson] = pool[i];
        auto d = dirac_check(pi);
        auto s = schouten_oracle(pi);
        CAPTURE(i);
        CHECK(d.isotropic);
        CHECK(d.rank == pi.m.n);
        CHECK(d.passed == s.is_zero());
        if (i < 5 + 12 + 8) CHECK(d.passed == poisson);
        (d.passed ? positives : negatives) += 1;
        if (!d.passed) {
            REQUIRE(d.residual);
            CHECK_FALSE(d.residual->is_zero());
        }
    }
    CHECK(positives >= 15);
    CHECK(negatives >= 2);
}

TEST_CASE("two-form pool: Dirac iff closed")
{
    Rng rng{61, 3};
    const auto x1 = x(3, 0), x2 = x(3, 1), x3 = x(3, 2);
    std::vector<TwoForm> pool{two_form3(k(3, 1), k(3, 0), k(3, Rat(-1, 2))), two_form3(x3, k(3, 0), k(3, 0)),
                              two_form3(x1 * x2, x3, k(3, 0))};
    for (int t = 0; t < 6; ++t) pool.push_back(exterior_d1(random_section(3, 2, rng).theta));
    for (int t = 0; t < 6; ++t)
        pool.push_back(two_form3(poly::random_poly(3, 2, rng), poly::random_poly(3, 2, rng), poly::random_poly(3, 2, rng)));
    std::size_t closed = 0, open = 0;
    for (const auto& w : pool) {
        auto d = dirac_check(w);
        REQUIRE(d.form_closed);
        const bool dclosed = exterior_d2(w).is_zero();
        CHECK(*d.form_closed == dclosed);
        CHECK(d.passed == dclosed);
        (dclosed ? closed : open) += 1;
    }
    CHECK(closed >= 7);
    CHECK(open >= 2);
    auto bad = dirac_check(two_form3(x3, k(3, 0), k(3, 0)));
    CHECK_FALSE(bad.passed);
    CHECK(bad.form_closed == false);
    REQUIRE(bad.residual);
}

TEST_CASE("coordinate and generic foliations are Dirac")
{
    for (unsigned mask = 0; mask < 8; ++mask) {
        std::vector<RatVec> vs;
        for (std::size_t i = 0; i < 3; ++i)
            if (mask & (1u << i)) vs.push_back(exactla::unit(3, i));
        auto d = dirac_check(Foliation{exactla::span(vs, 3)});
        CHECK(d.passed);
        CHECK(d.rank == 3);
    }
    auto d = dirac_check(Foliation{exactla::span({RatVec{Rat(1), Rat(2), Rat(-1)}}, 3)});
    CHECK(d.passed);
}

TEST_CASE("ill-formed candidates throw")
{
    auto m = PolyMatrix::zero(2);
    m.at(0, 1) = k(2, 1);
    CHECK_THROWS_AS(dirac_check(Bivector{m}), std::invalid_argument);
}

TEST_CASE("linearization intertwines bracket and pairing")
{
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t i = 0; i < omni::flat_dim(n); ++i) {
            auto e = omni::OmniElement::basis(n, i);
            CHECK(delinearize(linearize(e)) == e);
            for (std::size_t j = 0; j < omni::flat_dim(n); ++j) {
                auto r = linearize_roundtrip(e, omni::OmniElement::basis(n, j));
                CHECK(r.bracket_ok);
                CHECK(r.pairing_ok);
                CHECK(r.lhs == r.rhs);
            }
        }
    Rng rng{61, 4};
    for (int t = 0; t < 30; ++t) {
        auto a = omni::random_element(3, rng), b = omni::random_element(3, rng);
        CHECK(linearize_roundtrip(a, b).ok());
    }
    // A quadratic field is not in the image.
    Section q{VectorField{{x(1, 0) * x(1, 0)}}, OneForm::zero(1)};
    CHECK_FALSE(delinearize(q));
}
