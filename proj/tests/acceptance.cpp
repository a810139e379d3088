// Acceptance suite: one PASS/FAIL line per criterion, with wall time
// against the stated budget. Exit status is nonzero if any line fails.

#include "omnilie/calgebra.hpp"
#include "omnilie/courant.hpp"
#include "omnilie/dstruct.hpp"
#include "omnilie/liealg.hpp"
#include "omnilie/omni.hpp"
#include "omnilie/random.hpp"
#include "omnilie/serialize.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace omnilie;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

std::string fx(const std::string& name) { return std::string(OMNILIE_FIXTURES) + "/" + name; }

Outcome criterion1()
{
    std::size_t passed = 0, total = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        auto s = omni::anomaly_sweep(n, 1000, 0);
        passed += s.passed;
        total += s.trials;
    }
    return {passed == 4000 && total == 4000, std::to_string(passed) + "/" + std::to_string(total) + " triples"};
}

Outcome criterion2()
{
    std::vector<liealg::BilinearOp> ops;
    for (const auto& name : liealg::catalog_names()) ops.push_back(liealg::catalog(name));
    for (std::size_t n = 2; n <= 4; ++n) {
        Rng rng{2, n};
        for (int t = 0; t < 200; ++t) ops.push_back(liealg::random_skew(n, rng));
    }
    std::size_t exceptions = 0, lie = 0, recovered = 0;
    for (const auto& b : ops) {
        const auto f = liealg::graph_subspace(b);
        const bool is_lie = liealg::is_lie(b);
        if (is_lie != dstruct::bracket_closed(f).closed) ++exceptions;
        if (is_lie) {
            ++lie;
            auto r = dstruct::recover_bilinear(f);
            if (r && *r == b) ++recovered;
        }
    }
    return {exceptions == 0 && recovered == lie,
            std::to_string(ops.size()) + " operations, " + std::to_string(exceptions) + " exceptions, " +
                std::to_string(recovered) + "/" + std::to_string(lie) + " Lie cases recovered"};
}

Outcome criterion3()
{
    std::vector<omni::OmniSubspace> cases;
    for (std::size_t n = 1; n <= 3; ++n) cases.push_back(omni::OmniSubspace::horizontal(n));
    cases.push_back(liealg::graph_subspace(liealg::catalog("abelian(1)")));
    cases.push_back(liealg::graph_subspace(liealg::catalog("abelian(3)")));
    for (const auto& name : liealg::catalog_names()) {
        auto b = liealg::catalog(name);
        if (liealg::is_lie(b)) cases.push_back(liealg::graph_subspace(b));
    }
    std::size_t ok = 0;
    for (const auto& f : cases) {
        auto v = dstruct::maximality_check(f);
        if (v.status == dstruct::Maximality::maximal && v.extension_dim == 0 && dstruct::omni_orthogonal(f) == f) ++ok;
    }
    return {ok == cases.size(), std::to_string(ok) + "/" + std::to_string(cases.size()) + " maximal via F^perp = F"};
}

Outcome criterion4()
{
    std::string dims;
    bool ok = true;
    for (std::size_t n = 1; n <= 3; ++n) {
        auto d = dstruct::isotropic_graph_space(n).dim();
        ok = ok && d == 0;
        dims += (n > 1 ? "," : "") + std::to_string(d);
    }
    return {ok, "dims " + dims};
}

Outcome criterion5()
{
    auto r = dstruct::search_d_structures(1, dstruct::Strategy::exhaustive, 0, 1000);
    std::vector<omni::OmniSubspace> expect{omni::OmniSubspace::horizontal(1), omni::OmniSubspace::vertical(1)};
    std::sort(expect.begin(), expect.end());
    return {r.d_structures == expect && r.undetermined.empty(),
            std::to_string(r.d_structures.size()) + " D-structures found"};
}

Outcome criterion6()
{
    bool ok = true;
    std::size_t caught = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        auto c = calgebra::build_omni_instance(n);
        ok = ok && calgebra::validate_instance(c).passed() && calgebra::check_axioms(c).passed();
        auto g = calgebra::gradient_matrix(c);
        ok = ok && g.has_value();
        for (std::size_t p = 0; g && p < n; ++p)
            ok = ok && g->col_vec(p) == omni::OmniElement::vector(exactla::unit(n, p)).flat();
        calgebra::AxiomOptions opts;
        opts.forced_gradient = exactla::scale(Rat(2), *g);
        auto bad = calgebra::check_axioms(c, opts);
        bool witnessed = !bad.passed();
        for (const auto& chk : bad.checks)
            if (!chk.passed)
                witnessed = witnessed && !exactla::is_zero(chk.residual) &&
                            calgebra::residual(c, chk.name, chk.witness, opts) == chk.residual;
        caught += witnessed;
    }
    return {ok && caught == 3, std::string(ok ? "axioms 0-5 hold" : "axiom failure") + ", mutation caught " +
                                   std::to_string(caught) + "/3"};
}

Outcome criterion7()
{
    bool ok = true;
    std::string detail;
    for (std::size_t n = 1; n <= 3; ++n) {
        auto r = courant::axioms_sample_check(n, 2, 100, 0);
        const bool has_axiom1 = std::find(r.axioms.begin(), r.axioms.end(), "axiom1") != r.axioms.end();
        ok = ok && r.passed == 100 && has_axiom1 && !r.first_failure;
        detail += (n > 1 ? ", " : "") + std::string("nvars=") + std::to_string(n) + " " + std::to_string(r.passed) + "/100";
    }
    return {ok, detail};
}

Outcome criterion8()
{
    auto load = [](const char* f) { return io::candidate_from_json(io::read_json_file(fx(f))); };
    std::size_t ok = 0, total = 0;
    auto expect = [&](bool cond) {
        ++total;
        ok += cond;
    };
    {
        auto pi = std::get<courant::Bivector>(load("bivector_so3.json"));
        expect(courant::dirac_check(pi).passed && courant::schouten_oracle(pi).is_zero());
    }
    {
        auto pi = std::get<courant::Bivector>(load("bivector_nonpoisson.json"));
        expect(!courant::dirac_check(pi).passed && !courant::schouten_oracle(pi).is_zero());
    }
    expect(courant::dirac_check(load("omega_const.json")).passed);
    {
        auto d = courant::dirac_check(load("omega_x3.json"));
        expect(!d.passed && d.form_closed == false && d.residual && !d.residual->is_zero());
    }
    for (unsigned mask = 0; mask < 8; ++mask) {
        std::vector<RatVec> vs;
        for (std::size_t i = 0; i < 3; ++i)
            if (mask & (1u << i)) vs.push_back(exactla::unit(3, i));
        expect(courant::dirac_check(courant::Foliation{exactla::span(vs, 3)}).passed);
    }
    return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " controls as expected"};
}

Outcome criterion9()
{
    std::size_t ok = 0, total = 0;
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t i = 0; i < omni::flat_dim(n); ++i)
            for (std::size_t j = 0; j < omni::flat_dim(n); ++j) {
                ++total;
                ok += courant::linearize_roundtrip(omni::OmniElement::basis(n, i), omni::OmniElement::basis(n, j)).ok();
            }
    return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " basis pairs"};
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* title;
        double budget_s;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "anomaly identity J = (0, T)", 5, criterion1},
        {2, "Lie iff graph bracket-closed; B recovered", 10, criterion2},
        {3, "graphs and gl(n)+0 maximal isotropic", 2, criterion3},
        {4, "only the zero graph over gl(n) is isotropic", 1, criterion4},
        {5, "n=1 exhaustive classification", 1, criterion5},
        {6, "C-algebra suite for E_n and gradient mutation", 10, criterion6},
        {7, "Courant axiom sampling", 60, criterion7},
        {8, "Dirac positive/negative controls", 10, criterion8},
        {9, "linearization bridge", 5, criterion9},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = s < c.budget_s;
        const bool pass = o.ok && in_time;
        failures += !pass;
        std::printf("%s criterion %d: %s: %s (%.3f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.title,
                    o.detail.c_str(), s, c.budget_s, in_time ? "" : ", over time");
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
