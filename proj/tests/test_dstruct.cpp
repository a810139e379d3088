#include "doctest.h"

#include "omnilie/dstruct.hpp"
#include "omnilie/liealg.hpp"
#include "omnilie/random.hpp"

using namespace omnilie;
using namespace omnilie::dstruct;
using exactla::RatMat;

namespace {

OmniElement mat(std::size_t n, std::size_t r, std::size_t c) { return OmniElement::matrix(RatMat::elementary(n, r, c)); }
OmniElement vec(std::size_t n, std::size_t i) { return OmniElement::vector(exactla::unit(n, i)); }

}  // namespace

TEST_CASE("orthogonal of isotropic graphs equals the graph")
{
    for (const auto& name : liealg::catalog_names()) {
        auto f = liealg::graph_subspace(liealg::catalog(name));
        CHECK(omni_orthogonal(f) == f);
        auto v = maximality_check(f);
        CHECK(v.status == Maximality::maximal);
        CHECK(v.extension_dim == 0);
    }
    for (std::size_t n = 1; n <= 3; ++n) {
        auto h = OmniSubspace::horizontal(n);
        CHECK(is_isotropic(h));
        CHECK(omni_orthogonal(h) == h);
        CHECK(maximality_check(h).status == Maximality::maximal);
    }
}

TEST_CASE("non-maximal isotropic subspaces get verifying witnesses")
{
    // span{E11} in E_2
    auto f = OmniSubspace::span(2, {mat(2, 0, 0)});
    auto v = maximality_check(f);
    REQUIRE(v.status == Maximality::not_maximal);
    REQUIRE(v.witness);
    CHECK(verify_witness(f, *v.witness));
    // Zero subspace of E_1
    auto z = OmniSubspace::span(1, {});
    auto vz = maximality_check(z);
    REQUIRE(vz.status == Maximality::not_maximal);
    CHECK(verify_witness(z, *vz.witness));
    // Random isotropic sub-subspaces of graphs.
    Rng rng{41, 1};
    for (int t = 0; t < 20; ++t) {
        auto g = liealg::graph_subspace(liealg::random_lie(3, rng));
        auto basis = g.basis();
        basis.pop_back();
        auto s = OmniSubspace::span(3, basis);
        auto vs = maximality_check(s, {static_cast<std::uint64_t>(t)});
        CHECK(vs.status != Maximality::maximal);
        if (vs.witness) CHECK(verify_witness(s, *vs.witness));
    }
}

TEST_CASE("null vector in a plane: rational, surd and none")
{
    // E_1: <(a,v),(a,v)> = a v, so s E11 + t e1 is null on both axes.
    auto w = null_vector_in_plane(mat(1, 0, 0), vec(1, 0));
    REQUIRE(w);
    CHECK(w->is_rational());
    CHECK(exactla::is_zero(omni_pairing(w->rational, w->rational)));

    // x = (E11, e1), y = (-2 E12, e2): q(s,t) = (s^2 - 2 t^2) e1, root s/t = sqrt 2.
    auto x = mat(2, 0, 0) + vec(2, 0);
    auto y = Rat(-2) * mat(2, 0, 1) + vec(2, 1);
    auto ws = null_vector_in_plane(x, y);
    REQUIRE(ws);
    CHECK_FALSE(ws->is_rational());
    CHECK(ws->radicand > 0);
    CHECK(verify_witness(OmniSubspace::span(2, {}), *ws));

    // x = (E11, e1), y = (E12, e2): q(s,t) = (s^2 + t^2) e1 has no real root.
    CHECK_FALSE(null_vector_in_plane(x, mat(2, 0, 1) + vec(2, 1)));
}

TEST_CASE("bracket closure matches Lie property on graphs")
{
    for (const auto& name : liealg::catalog_names()) {
        auto b = liealg::catalog(name);
        auto c = bracket_closed(liealg::graph_subspace(b));
        CHECK(c.closed == liealg::is_lie(b));
        if (!c.closed) {
            REQUIRE(c.failure);
            CHECK_FALSE(liealg::graph_subspace(b).contains(c.failure->bracket));
            CHECK(omni_bracket(c.failure->x, c.failure->y) == c.failure->bracket);
        }
    }
}

TEST_CASE("classification verdicts")
{
    auto so3 = classify(liealg::graph_subspace(liealg::catalog("so3")));
    CHECK(so3.isotropic);
    CHECK(so3.d_structure);
    CHECK(so3.restricted_jacobi == true);
    auto bad = classify(OmniSubspace::span(1, {mat(1, 0, 0) + vec(1, 0)}));
    CHECK_FALSE(bad.isotropic);
    CHECK_FALSE(bad.d_structure);
    CHECK_FALSE(bad.maximality);
    CHECK_THROWS_AS(maximality_check(OmniSubspace::span(1, {mat(1, 0, 0) + vec(1, 0)})), std::invalid_argument);
}

TEST_CASE("recover_bilinear inverts graph_subspace")
{
    for (const auto& name : liealg::catalog_names()) {
        auto b = liealg::catalog(name);
        auto r = recover_bilinear(liealg::graph_subspace(b));
        REQUIRE(r);
        CHECK(*r == b);
    }
    Rng rng{41, 2};
    for (int t = 0; t < 30; ++t) {
        auto b = liealg::random_skew(3, rng);
        CHECK(recover_bilinear(liealg::graph_subspace(b)) == b);
    }
    CHECK_FALSE(recover_bilinear(OmniSubspace::horizontal(2)));
}

TEST_CASE("only the zero map has an isotropic graph over gl(n)")
{
    for (std::size_t n = 1; n <= 3; ++n) CHECK(isotropic_graph_space(n).dim() == 0);
}

TEST_CASE("search strategies")
{
    auto ex = search_d_structures(1, Strategy::exhaustive, 0, 100);
    REQUIRE(ex.d_structures.size() == 2);
    std::vector<OmniSubspace> expect{OmniSubspace::horizontal(1), OmniSubspace::vertical(1)};
    std::sort(expect.begin(), expect.end());
    CHECK(ex.d_structures == expect);
    for (std::size_t n = 1; n <= 3; ++n) {
        for (auto s : {Strategy::exhaustive, Strategy::graph, Strategy::greedy}) {
            auto r = search_d_structures(n, s, 7, 200);
            CHECK(std::is_sorted(r.d_structures.begin(), r.d_structures.end()));
            CHECK(std::adjacent_find(r.d_structures.begin(), r.d_structures.end()) == r.d_structures.end());
            for (const auto& f : r.d_structures) {
                CHECK(f.dim() >= n);
                auto c = classify(f);
                CHECK(c.d_structure);
                CHECK(c.restricted_jacobi == true);
            }
        }
    }
    CHECK(search_d_structures(2, Strategy::exhaustive, 0, 100).d_structures.size() == 4);
    CHECK(parse_strategy("greedy") == Strategy::greedy);
    CHECK_FALSE(parse_strategy("bogus"));
    auto tiny = search_d_structures(3, Strategy::graph, 0, 2);
    CHECK(tiny.budget_exhausted);
    CHECK(tiny.evaluated <= 2);
}
