#include "doctest.h"

#include "omnilie/calgebra.hpp"
#include "omnilie/omni.hpp"

using namespace omnilie;
using namespace omnilie::calgebra;

TEST_CASE("omni instance passes prerequisites and every axiom")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        auto c = build_omni_instance(n);
        CHECK(c.dim_a == n);
        CHECK(c.dim_e == omni::flat_dim(n));
        auto v = validate_instance(c);
        CHECK(v.passed());
        auto a = check_axioms(c);
        CHECK(a.passed());
        for (const char* name : {"axiom0", "axiom1", "axiom2", "axiom3", "axiom4.rho_d", "axiom4.pairing", "axiom5"}) {
            const auto* r = a.find(name);
            REQUIRE(r);
            CHECK(r->passed);
            CHECK(r->cases > 0);
        }
    }
}

TEST_CASE("gradient of the omni instance is D v = (0, v)")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        auto c = build_omni_instance(n);
        auto g = gradient_matrix(c);
        REQUIRE(g);
        for (std::size_t p = 0; p < n; ++p) {
            auto d = gradient(c, exactla::unit(n, p));
            REQUIRE(d);
            CHECK(*d == omni::OmniElement::vector(exactla::unit(n, p)).flat());
            CHECK(g->col_vec(p) == *d);
        }
    }
}

TEST_CASE("instance data matches the omni operations")
{
    const std::size_t n = 2;
    auto c = build_omni_instance(n);
    for (std::size_t i = 0; i < c.dim_e; ++i)
        for (std::size_t j = 0; j < c.dim_e; ++j) {
            auto ei = omni::OmniElement::basis(n, i), ej = omni::OmniElement::basis(n, j);
            auto u = exactla::unit(c.dim_e, i), w = exactla::unit(c.dim_e, j);
            CHECK(c.brk(u, w) == omni::omni_bracket(ei, ej).flat());
            CHECK(c.pair(u, w) == omni::omni_pairing(ei, ej));
            for (std::size_t k = 0; k < c.dim_e; ++k) {
                auto ek = omni::OmniElement::basis(n, k);
                CHECK(cartan_T(c, u, w, exactla::unit(c.dim_e, k)) == omni::cartan_form(ei, ej, ek));
            }
        }
}

TEST_CASE("doubling the gradient is caught with re-verifiable witnesses")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        auto c = build_omni_instance(n);
        AxiomOptions opts;
        opts.forced_gradient = exactla::scale(Rat(2), *gradient_matrix(c));
        auto rep = check_axioms(c, opts);
        CHECK_FALSE(rep.passed());
        const auto* def = rep.find("axiom0.defining");
        REQUIRE(def);
        CHECK_FALSE(def->passed);
        for (const auto& chk : rep.checks)
            if (!chk.passed) {
                CHECK_FALSE(exactla::is_zero(chk.residual));
                CHECK(residual(c, chk.name, chk.witness, opts) == chk.residual);
            }
        // The true gradient forced explicitly passes.
        AxiomOptions same;
        same.forced_gradient = *gradient_matrix(c);
        CHECK(check_axioms(c, same).passed());
    }
}

TEST_CASE("broken prerequisites are reported")
{
    auto c = build_omni_instance(1);
    c.pairing.at(0, 1, 0) = Rat(1);
    auto v = validate_instance(c);
    CHECK_FALSE(v.passed());
    REQUIRE(v.find("pairing.symmetric"));
    CHECK_FALSE(v.find("pairing.symmetric")->passed);

    auto d = build_omni_instance(2);
    d.bracket.at(0, 4, 4) += Rat(1);
    auto vd = validate_instance(d);
    CHECK_FALSE(vd.find("bracket.antisymmetric")->passed);
    auto w = vd.find("bracket.antisymmetric")->witness;
    CHECK(residual(d, "bracket.antisymmetric", w) == vd.find("bracket.antisymmetric")->residual);

    auto e = build_omni_instance(1);
    e.rho.pop_back();
    CHECK_THROWS_AS(check_shapes(e), DimensionError);
}

TEST_CASE("a commutative associative algebra with zero bracket")
{
    // A = R (1-dim, a*a = a), E = A with pairing <e,e> = a, zero anchor and bracket.
    CAlgebraInstance c;
    c.dim_a = 1;
    c.dim_e = 1;
    c.mul_a = Tensor3(1, 1, 1);
    c.mul_a.at(0, 0, 0) = 1;
    c.act = Tensor3(1, 1, 1);
    c.act.at(0, 0, 0) = 1;
    c.pairing = Tensor3(1, 1, 1);
    c.pairing.at(0, 0, 0) = 1;
    c.bracket = Tensor3(1, 1, 1);
    c.rho = {exactla::RatMat(1, 1)};
    CHECK(validate_instance(c).passed());
    auto rep = check_axioms(c);
    CHECK(rep.passed());
    CHECK(*gradient(c, RatVec{Rat(1)}) == RatVec{Rat(0)});
}
