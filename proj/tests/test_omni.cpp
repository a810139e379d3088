#include "doctest.h"

#include "omnilie/omni.hpp"
#include "omnilie/random.hpp"

using namespace omnilie;
using namespace omnilie::omni;
using exactla::RatMat;

namespace {

OmniElement mat(std::size_t n, std::size_t r, std::size_t c) { return OmniElement::matrix(RatMat::elementary(n, r, c)); }
OmniElement vec(std::size_t n, std::size_t i) { return OmniElement::vector(exactla::unit(n, i)); }

// Direct evaluation of the three cyclic terms, independent of cartan_form.
RatVec cartan_oracle(const OmniElement& a, const OmniElement& b, const OmniElement& c)
{
    auto t = exactla::add(omni_pairing(omni_bracket(a, b), c), omni_pairing(omni_bracket(b, c), a));
    t = exactla::add(t, omni_pairing(omni_bracket(c, a), b));
    return exactla::scale(Rat(1, 3), t);
}

}  // namespace

TEST_CASE("bracket and pairing on basis elements")
{
    // [(A,0),(0,v)] = (0, 1/2 A v)
    auto b = omni_bracket(mat(2, 0, 1), vec(2, 1));
    CHECK(b.a().is_zero());
    CHECK(b.v() == RatVec{Rat(1, 2), Rat(0)});
    // <(E12,0),(0,e2)> = 1/2 e1
    CHECK(omni_pairing(mat(2, 0, 1), vec(2, 1)) == RatVec{Rat(1, 2), Rat(0)});
    // Matrix part is the commutator.
    auto m = omni_bracket(mat(2, 0, 1), mat(2, 1, 0));
    CHECK(m.a() == exactla::sub(RatMat::elementary(2, 0, 0), RatMat::elementary(2, 1, 1)));
}

TEST_CASE("cartan form examples")
{
    CHECK(exactla::is_zero(cartan_form(mat(2, 0, 1), mat(2, 1, 0), mat(2, 0, 0))));
    CHECK(cartan_form(mat(2, 0, 1), mat(2, 1, 0), vec(2, 0)) == RatVec{Rat(1, 4), Rat(0)});
    auto e = mat(2, 0, 1) + vec(2, 0);
    CHECK(exactla::is_zero(cartan_form(e, e, e)));
    auto j = jacobiator(mat(2, 0, 1), mat(2, 1, 0), vec(2, 0));
    CHECK(j.a().is_zero());
    CHECK(j.v() == RatVec{Rat(1, 4), Rat(0)});
}

TEST_CASE("anomaly identity and algebraic properties on random triples")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        Rng rng{21, n};
        for (int t = 0; t < 60; ++t) {
            auto x = random_element(n, rng), y = random_element(n, rng), z = random_element(n, rng);
            const Rat s = rng.small_rat();
            auto j = jacobiator(x, y, z);
            CHECK(j.a().is_zero());
            CHECK(j.v() == cartan_form(x, y, z));
            CHECK(cartan_form(x, y, z) == cartan_oracle(x, y, z));
            // Antisymmetry and bilinearity.
            CHECK(omni_bracket(x, y) == Rat(-1) * omni_bracket(y, x));
            CHECK(omni_bracket(x + s * z, y) == omni_bracket(x, y) + s * omni_bracket(z, y));
            CHECK(omni_pairing(x, y) == omni_pairing(y, x));
            CHECK(omni_pairing(x + s * z, y) == exactla::add(omni_pairing(x, y), exactla::scale(s, omni_pairing(z, y))));
            // Total antisymmetry of T.
            CHECK(cartan_form(x, y, z) == cartan_form(y, z, x));
            CHECK(cartan_form(x, y, z) == exactla::scale(Rat(-1), cartan_form(y, x, z)));
        }
    }
}

TEST_CASE("anomaly_sweep is deterministic and complete")
{
    auto a = anomaly_sweep(3, 200, 5, Exec::serial);
    auto b = anomaly_sweep(3, 200, 5, Exec::parallel);
    CHECK(a.passed == 200);
    CHECK(b.passed == 200);
    CHECK_FALSE(a.first_failure);
}

TEST_CASE("flattening round trip and subspaces")
{
    Rng rng{21, 9};
    auto x = random_element(3, rng);
    CHECK(x.flat().size() == flat_dim(3));
    CHECK(OmniElement::from_flat(3, x.flat()) == x);
    CHECK(OmniElement::basis(2, 1) == mat(2, 0, 1));
    CHECK(OmniElement::basis(2, 4) == vec(2, 0));
    CHECK(OmniSubspace::horizontal(2).dim() == 4);
    CHECK(OmniSubspace::vertical(2).dim() == 2);
    CHECK(OmniSubspace::whole(2).dim() == 6);
    CHECK(OmniSubspace::horizontal(2).contains(mat(2, 1, 1)));
    CHECK_FALSE(OmniSubspace::horizontal(2).contains(vec(2, 1)));
}

TEST_CASE("dimension mismatch throws")
{
    CHECK_THROWS_AS(omni_bracket(vec(2, 0), vec(3, 0)), DimensionError);
    CHECK_THROWS_AS(omni_pairing(vec(2, 0), vec(3, 0)), DimensionError);
    CHECK_THROWS_AS(OmniElement(RatMat(2, 2), RatVec(3)), DimensionError);
}
