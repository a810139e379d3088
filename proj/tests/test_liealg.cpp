#include "doctest.h"

#include "omnilie/dstruct.hpp"
#include "omnilie/liealg.hpp"
#include "omnilie/random.hpp"

using namespace omnilie;
using namespace omnilie::liealg;
using exactla::RatMat;

TEST_CASE("catalog structure constants")
{
    auto so3 = catalog("so3");
    CHECK(so3.apply(exactla::unit(3, 0), exactla::unit(3, 1)) == exactla::unit(3, 2));
    auto ad3 = ad_matrix(so3, exactla::unit(3, 2));
    CHECK(ad3 == RatMat::from_rows({{Rat(0), Rat(-1), Rat(0)}, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)}}, 3));
    auto sl2 = catalog("sl2");
    CHECK(sl2.apply(exactla::unit(3, 0), exactla::unit(3, 1)) == exactla::scale(Rat(2), exactla::unit(3, 1)));
    CHECK(sl2.apply(exactla::unit(3, 1), exactla::unit(3, 2)) == exactla::unit(3, 0));
    CHECK(catalog_names().size() == 6);
    CHECK_THROWS_AS(catalog("g2"), std::invalid_argument);
}

TEST_CASE("Lie checks on the catalog")
{
    for (const auto& name : catalog_names()) {
        auto b = catalog(name);
        CHECK(is_skew(b));
        CHECK(is_lie(b) == (name != "nonlie3"));
    }
    auto d = jacobi_defect(catalog("nonlie3"), 0, 1, 2);
    CHECK(d == RatVec{Rat(1), Rat(1), Rat(1)});
}

TEST_CASE("jacobi_defect rejects non-skew input")
{
    BilinearOp b(2);
    b.c(0, 0, 1) = 1;
    CHECK_FALSE(is_skew(b));
    CHECK_FALSE(is_lie(b));
    CHECK_THROWS_AS(jacobi_defect(b, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("graph of a skew operation: dimension n and isotropic")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        Rng rng{31, n};
        for (int t = 0; t < 20; ++t) {
            auto b = random_skew(n, rng);
            auto f = graph_subspace(b);
            CHECK(f.dim() == n);
            CHECK(dstruct::is_isotropic(f));
        }
    }
    // A non-skew operation has a non-isotropic graph.
    BilinearOp b(2);
    b.c(0, 0, 1) = 1;
    CHECK_FALSE(dstruct::is_isotropic(graph_subspace(b)));
}

TEST_CASE("change of basis preserves the Lie property")
{
    Rng rng{31, 99};
    for (int t = 0; t < 30; ++t) {
        auto b = random_lie(3, rng);
        CHECK(is_lie(b));
    }
    auto g = RatMat::from_rows({{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(2), Rat(1)}}, 3);
    CHECK(is_lie(change_basis(catalog("so3"), g)));
    CHECK_FALSE(is_lie(change_basis(catalog("nonlie3"), g)));
    CHECK_THROWS_AS(change_basis(catalog("so3"), RatMat(3, 3)), std::invalid_argument);
    CHECK(direct_sum(catalog("affine1"), catalog("so3")).n() == 5);
    CHECK(is_lie(direct_sum(catalog("affine1"), catalog("so3"))));
}
