// Parallel kernels must reproduce their serial reference exactly.
#include "doctest.h"

#include "omnilie/calgebra.hpp"
#include "omnilie/courant.hpp"
#include "omnilie/dstruct.hpp"
#include "omnilie/omni.hpp"

using namespace omnilie;

namespace {

void same_reports(const calgebra::Report& a, const calgebra::Report& b)
{
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].passed == b.checks[i].passed);
        CHECK(a.checks[i].cases == b.checks[i].cases);
        CHECK(a.checks[i].witness == b.checks[i].witness);
        CHECK(a.checks[i].residual == b.checks[i].residual);
    }
}

}  // namespace

TEST_CASE("anomaly sweep")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        auto s = omni::anomaly_sweep(n, 150, 17, Exec::serial);
        auto p = omni::anomaly_sweep(n, 150, 17, Exec::parallel);
        CHECK(s.passed == p.passed);
        CHECK(s.first_failure.has_value() == p.first_failure.has_value());
    }
}

TEST_CASE("C-algebra checks, including failing ones")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        auto c = calgebra::build_omni_instance(n);
        same_reports(calgebra::validate_instance(c, Exec::serial), calgebra::validate_instance(c, Exec::parallel));
        same_reports(calgebra::check_axioms(c, {}, Exec::serial), calgebra::check_axioms(c, {}, Exec::parallel));
        calgebra::AxiomOptions opts;
        opts.forced_gradient = exactla::scale(Rat(2), *calgebra::gradient_matrix(c));
        same_reports(calgebra::check_axioms(c, opts, Exec::serial), calgebra::check_axioms(c, opts, Exec::parallel));
    }
}

TEST_CASE("Courant axiom sampling")
{
    for (auto variant : {courant::BracketVariant::courant, courant::BracketVariant::uncorrected}) {
        auto s = courant::axioms_sample_check(2, 2, 24, 5, variant, Exec::serial);
        auto p = courant::axioms_sample_check(2, 2, 24, 5, variant, Exec::parallel);
        CHECK(s.passed == p.passed);
        REQUIRE(s.first_failure.has_value() == p.first_failure.has_value());
        if (s.first_failure) {
            CHECK(s.first_failure->trial == p.first_failure->trial);
            CHECK(s.first_failure->axiom == p.first_failure->axiom);
            CHECK(s.first_failure->residual == p.first_failure->residual);
            CHECK(s.first_failure->residual_scalar == p.first_failure->residual_scalar);
        }
    }
}

TEST_CASE("D-structure search")
{
    for (auto strat : {dstruct::Strategy::exhaustive, dstruct::Strategy::graph, dstruct::Strategy::greedy})
        for (std::size_t n = 1; n <= 3; ++n) {
            auto s = dstruct::search_d_structures(n, strat, 3, 100, Exec::serial);
            auto p = dstruct::search_d_structures(n, strat, 3, 100, Exec::parallel);
            CHECK(s.d_structures == p.d_structures);
            CHECK(s.undetermined == p.undetermined);
            CHECK(s.evaluated == p.evaluated);
        }
}
