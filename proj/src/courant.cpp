#include "omnilie/courant.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace omnilie::courant {

namespace {

const Rat kHalf(1, 2);
const Rat kThird(1, 3);

void same_vars(std::size_t a, std::size_t b)
{
    if (a != b) throw DimensionError("courant: variable counts differ");
}

bool all_zero(const std::vector<Poly>& ps)
{
    for (const auto& p : ps)
        if (!p.is_zero()) return false;
    return true;
}

std::vector<Poly> zero_polys(std::size_t count, std::size_t nvars) { return std::vector<Poly>(count, Poly(nvars)); }

}  // namespace

VectorField VectorField::zero(std::size_t nvars) { return {zero_polys(nvars, nvars)}; }

VectorField VectorField::constant(std::span<const Rat> v)
{
    auto out = zero(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.c[i] = Poly::constant(v.size(), v[i]);
    return out;
}

VectorField VectorField::coordinate(std::size_t nvars, std::size_t i)
{
    return constant(exactla::unit(nvars, i));
}

VectorField VectorField::linear(const exactla::RatMat& m)
{
    if (!m.is_square()) throw DimensionError("VectorField::linear: matrix must be square");
    const std::size_t n = m.rows();
    auto out = zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.c[i] += m(i, j) * Poly::var(n, j);
    return out;
}

bool VectorField::is_zero() const { return all_zero(c); }

OneForm OneForm::zero(std::size_t nvars) { return {zero_polys(nvars, nvars)}; }

OneForm OneForm::constant(std::span<const Rat> v)
{
    auto out = zero(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.c[i] = Poly::constant(v.size(), v[i]);
    return out;
}

OneForm OneForm::coordinate(std::size_t nvars, std::size_t i) { return constant(exactla::unit(nvars, i)); }

bool OneForm::is_zero() const { return all_zero(c); }

PolyMatrix PolyMatrix::zero(std::size_t nvars) { return {nvars, zero_polys(nvars * nvars, nvars)}; }

bool PolyMatrix::is_skew() const
{
    if (e.size() != n * n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

bool PolyMatrix::is_zero() const { return all_zero(e); }

bool ThreeForm::is_zero() const { return all_zero(e); }

Section Section::zero(std::size_t nvars) { return {VectorField::zero(nvars), OneForm::zero(nvars)}; }

Section operator+(const Section& a, const Section& b)
{
    same_vars(a.nvars(), b.nvars());
    Section out = a;
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        out.xi.c[i] += b.xi.c[i];
        out.theta.c[i] += b.theta.c[i];
    }
    return out;
}

Section operator-(const Section& a, const Section& b)
{
    same_vars(a.nvars(), b.nvars());
    Section out = a;
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        out.xi.c[i] -= b.xi.c[i];
        out.theta.c[i] -= b.theta.c[i];
    }
    return out;
}

Section operator*(const Poly& f, const Section& s)
{
    same_vars(f.nvars(), s.nvars());
    Section out = s;
    for (std::size_t i = 0; i < s.nvars(); ++i) {
        out.xi.c[i] = f * s.xi.c[i];
        out.theta.c[i] = f * s.theta.c[i];
    }
    return out;
}

Poly apply(const VectorField& xi, const Poly& p)
{
    same_vars(xi.nvars(), p.nvars());
    Poly out(p.nvars());
    for (std::size_t i = 0; i < xi.nvars(); ++i)
        if (!xi.c[i].is_zero()) out += xi.c[i] * p.derivative(i);
    return out;
}

VectorField vf_bracket(const VectorField& x1, const VectorField& x2)
{
    same_vars(x1.nvars(), x2.nvars());
    auto out = VectorField::zero(x1.nvars());
    for (std::size_t k = 0; k < x1.nvars(); ++k) out.c[k] = apply(x1, x2.c[k]) - apply(x2, x1.c[k]);
    return out;
}

OneForm exterior_d(const Poly& f)
{
    auto out = OneForm::zero(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) out.c[i] = f.derivative(i);
    return out;
}

TwoForm exterior_d1(const OneForm& theta)
{
    const std::size_t n = theta.nvars();
    TwoForm out{PolyMatrix::zero(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.m.at(i, j) = theta.c[j].derivative(i) - theta.c[i].derivative(j);
    return out;
}

ThreeForm exterior_d2(const TwoForm& omega)
{
    const std::size_t n = omega.m.n;
    if (!omega.m.is_skew()) throw std::invalid_argument("exterior_d2: 2-form matrix is not skew");
    ThreeForm out{n, zero_polys(n * n * n, n)};
    if (n == 0) return out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out.e[(i * n + j) * n + k] = omega.m.at(j, k).derivative(i) - omega.m.at(i, k).derivative(j) +
                                             omega.m.at(i, j).derivative(k);
    return out;
}

Poly interior(const VectorField& x, const OneForm& t)
{
    same_vars(x.nvars(), t.nvars());
    Poly out(x.nvars());
    for (std::size_t i = 0; i < x.nvars(); ++i) out += x.c[i] * t.c[i];
    return out;
}

OneForm interior(const VectorField& x, const TwoForm& w)
{
    same_vars(x.nvars(), w.m.n);
    auto out = OneForm::zero(x.nvars());
    for (std::size_t j = 0; j < x.nvars(); ++j)
        for (std::size_t i = 0; i < x.nvars(); ++i) out.c[j] += x.c[i] * w.m.at(i, j);
    return out;
}

OneForm lie_derivative_1form(const VectorField& x, const OneForm& t)
{
    auto a = interior(x, exterior_d1(t));
    auto b = exterior_d(interior(x, t));
    for (std::size_t i = 0; i < a.nvars(); ++i) a.c[i] += b.c[i];
    return a;
}

Section courant_bracket(const Section& s1, const Section& s2, BracketVariant variant)
{
    same_vars(s1.nvars(), s2.nvars());
    Section out{vf_bracket(s1.xi, s2.xi), lie_derivative_1form(s1.xi, s2.theta)};
    auto l21 = lie_derivative_1form(s2.xi, s1.theta);
    for (std::size_t i = 0; i < s1.nvars(); ++i) out.theta.c[i] -= l21.c[i];
    if (variant == BracketVariant::courant) {
        auto corr = exterior_d(interior(s1.xi, s2.theta) - interior(s2.xi, s1.theta));
        for (std::size_t i = 0; i < s1.nvars(); ++i) out.theta.c[i] -= kHalf * corr.c[i];
    }
    return out;
}

Poly courant_pairing(const Section& s1, const Section& s2)
{
    same_vars(s1.nvars(), s2.nvars());
    return kHalf * (interior(s1.xi, s2.theta) + interior(s2.xi, s1.theta));
}

Section gradient(const Poly& f) { return {VectorField::zero(f.nvars()), exterior_d(f)}; }

VectorField sharp(const Bivector& pi, const OneForm& theta)
{
    same_vars(pi.m.n, theta.nvars());
    auto out = VectorField::zero(theta.nvars());
    for (std::size_t i = 0; i < pi.m.n; ++i)
        for (std::size_t j = 0; j < pi.m.n; ++j) out.c[i] += pi.m.at(i, j) * theta.c[j];
    return out;
}

OneForm flat(const TwoForm& omega, const VectorField& xi) { return interior(xi, omega); }

namespace {

// Per monomial, the coefficient vector must lie in `space`; returns the
// componentwise remainder (zero iff every coefficient vector lies in it).
std::vector<Poly> residual_mod(const std::vector<Poly>& comps, const exactla::Subspace& space)
{
    const std::size_t n = comps.size();
    std::map<poly::Monomial, RatVec> by_mono;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [m, c] : comps[i].terms()) {
            auto& v = by_mono.try_emplace(m, RatVec(n)).first->second;
            v[i] = c;
        }
    auto out = zero_polys(n, n);
    for (const auto& [m, v] : by_mono) {
        auto r = space.reduce(v);
        for (std::size_t i = 0; i < n; ++i) out[i] += Poly::term(r[i], m);
    }
    return out;
}

struct Generated {
    std::vector<Section> gens;
    std::size_t rank = 0;
};

}  // namespace

DiracReport dirac_check(const DiracCandidate& candidate)
{
    DiracReport rep;
    Generated g;
    std::function<Section(const Section&)> outside;  // part of a section not in the subbundle

    if (const auto* pi = std::get_if<Bivector>(&candidate)) {
        rep.kind = "bivector";
        const std::size_t n = pi->m.n;
        if (pi->m.e.size() != n * n || !pi->m.is_skew()) throw std::invalid_argument("dirac_check: bivector is not skew");
        for (std::size_t i = 0; i < n; ++i) {
            auto dx = OneForm::coordinate(n, i);
            g.gens.push_back({sharp(*pi, dx), dx});
        }
        g.rank = n;  // form parts dx_i are pointwise independent
        outside = [pi](const Section& s) {
            auto sh = sharp(*pi, s.theta);
            Section r = Section::zero(s.nvars());
            for (std::size_t i = 0; i < s.nvars(); ++i) r.xi.c[i] = s.xi.c[i] - sh.c[i];
            return r;
        };
        rep.nvars = n;
    } else if (const auto* om = std::get_if<TwoForm>(&candidate)) {
        rep.kind = "two_form";
        const std::size_t n = om->m.n;
        if (om->m.e.size() != n * n || !om->m.is_skew()) throw std::invalid_argument("dirac_check: 2-form is not skew");
        for (std::size_t i = 0; i < n; ++i) {
            auto d = VectorField::coordinate(n, i);
            g.gens.push_back({d, flat(*om, d)});
        }
        g.rank = n;
        outside = [om](const Section& s) {
            auto fl = flat(*om, s.xi);
            Section r = Section::zero(s.nvars());
            for (std::size_t i = 0; i < s.nvars(); ++i) r.theta.c[i] = s.theta.c[i] - fl.c[i];
            return r;
        };
        rep.form_closed = exterior_d2(*om).is_zero();
        rep.nvars = n;
    } else {
        const auto& fol = std::get<Foliation>(candidate);
        rep.kind = "foliation";
        const std::size_t n = fol.b.ambient_dim();
        auto annihilator = exactla::kernel(fol.b.basis());
        if (fol.b.dim() == 0) annihilator = exactla::full_space(n);
        for (const auto& v : fol.b.basis_vectors()) g.gens.push_back({VectorField::constant(v), OneForm::zero(n)});
        for (const auto& a : annihilator.basis_vectors()) g.gens.push_back({VectorField::zero(n), OneForm::constant(a)});
        g.rank = fol.b.dim() + annihilator.dim();
        outside = [b = fol.b, annihilator](const Section& s) {
            return Section{VectorField{residual_mod(s.xi.c, b)}, OneForm{residual_mod(s.theta.c, annihilator)}};
        };
        rep.nvars = n;
    }

    rep.generators = g.gens.size();
    rep.rank = g.rank;
    rep.isotropic = true;
    for (std::size_t i = 0; i < g.gens.size() && rep.isotropic; ++i)
        for (std::size_t j = i; j < g.gens.size() && rep.isotropic; ++j)
            rep.isotropic = courant_pairing(g.gens[i], g.gens[j]).is_zero();

    rep.closed = true;
    for (std::size_t i = 0; i < g.gens.size() && rep.closed; ++i)
        for (std::size_t j = i + 1; j < g.gens.size() && rep.closed; ++j) {
            auto r = outside(courant_bracket(g.gens[i], g.gens[j]));
            if (!r.is_zero()) {
                rep.closed = false;
                rep.failing_pair = std::array<std::size_t, 2>{i, j};
                rep.residual = std::move(r);
            }
        }
    rep.passed = rep.isotropic && rep.closed && rep.rank == rep.nvars;
    if (!rep.isotropic)
        rep.justification = "generators are not pairwise isotropic";
    else if (!rep.closed)
        rep.justification = "bracket of a generator pair leaves the subbundle; residual is its component outside it";
    else if (rep.rank != rep.nvars)
        rep.justification = "subbundle rank is below n, so it is not maximal isotropic";
    else
        rep.justification =
            "generators pairwise isotropic and their brackets lie in the subbundle; for f, g polynomial, "
            "[f e1, g e2] expands by the Leibniz rule with correction <e1,e2> Df, which vanishes on isotropic "
            "pairs, so closure of generators implies closure of all polynomial sections";
    return rep;
}

bool SchoutenResult::is_zero() const { return all_zero(value); }

SchoutenResult schouten_oracle(const Bivector& pi)
{
    const std::size_t n = pi.m.n;
    auto bracket = [&](const Poly& f, const Poly& g) {
        Poly out(n);
        for (std::size_t a = 0; a < n; ++a) {
            auto fa = f.derivative(a);
            if (fa.is_zero()) continue;
            for (std::size_t b = 0; b < n; ++b) out += pi.m.at(a, b) * fa * g.derivative(b);
        }
        return out;
    };
    SchoutenResult out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                auto xi = Poly::var(n, i), xj = Poly::var(n, j), xk = Poly::var(n, k);
                out.index.push_back({i, j, k});
                out.value.push_back(bracket(bracket(xi, xj), xk) + bracket(bracket(xj, xk), xi) +
                                    bracket(bracket(xk, xi), xj));
            }
    return out;
}

Section leibniz_check(const Section& s1, const Section& s2, const Poly& f, BracketVariant variant)
{
    auto lhs = courant_bracket(s1, f * s2, variant);
    auto r = lhs - f * courant_bracket(s1, s2, variant);
    r = r - apply(s1.xi, f) * s2;
    return r + courant_pairing(s1, s2) * gradient(f);
}

Section random_section(std::size_t nvars, std::size_t degree_bound, Rng& rng)
{
    auto s = Section::zero(nvars);
    for (auto& p : s.xi.c) p = poly::random_poly(nvars, degree_bound, rng);
    for (auto& p : s.theta.c) p = poly::random_poly(nvars, degree_bound, rng);
    return s;
}

namespace {

struct TrialInputs {
    Section s1, s2, s3;
    Poly f, g;
};

TrialInputs draw_trial(std::size_t nvars, std::size_t degree_bound, std::uint64_t seed, std::size_t trial)
{
    Rng rng{seed, nvars, trial};
    TrialInputs in;
    in.s1 = random_section(nvars, degree_bound, rng);
    in.s2 = random_section(nvars, degree_bound, rng);
    in.s3 = random_section(nvars, degree_bound, rng);
    in.f = poly::random_poly(nvars, degree_bound, rng);
    in.g = poly::random_poly(nvars, degree_bound, rng);
    return in;
}

const std::vector<std::string> kAxiomNames = {"antisymmetry", "axiom1", "axiom2", "axiom3",
                                              "axiom4.rho_d",  "axiom4.pairing", "axiom5"};

// First failing identity for a trial, or nullopt.
std::optional<AxiomSampleFailure> run_trial(const TrialInputs& in, BracketVariant variant)
{
    const std::size_t n = in.s1.nvars();
    auto br = [variant](const Section& a, const Section& b) { return courant_bracket(a, b, variant); };
    auto fail = [&](const std::string& name, std::optional<Section> r, std::optional<Poly> p) {
        return AxiomSampleFailure{0, name, in.s1, in.s2, in.s3, in.f, in.g, std::move(r), std::move(p)};
    };

    auto b12 = br(in.s1, in.s2);
    if (auto r = b12 + br(in.s2, in.s1); !r.is_zero()) return fail("antisymmetry", r, std::nullopt);

    auto b23 = br(in.s2, in.s3);
    auto b31 = br(in.s3, in.s1);
    auto jac = br(b12, in.s3) + br(b23, in.s1) + br(b31, in.s2);
    auto t = kThird * (courant_pairing(b12, in.s3) + courant_pairing(b23, in.s1) + courant_pairing(b31, in.s2));
    if (auto r = jac - gradient(t); !r.is_zero()) return fail("axiom1", r, std::nullopt);

    {
        // rho[[s1,s2]] - [rho s1, rho s2]
        auto diff = VectorField::zero(n);
        auto expect = vf_bracket(in.s1.xi, in.s2.xi);
        for (std::size_t i = 0; i < n; ++i) diff.c[i] = b12.xi.c[i] - expect.c[i];
        if (!diff.is_zero()) return fail("axiom2", Section{diff, OneForm::zero(n)}, std::nullopt);
    }

    if (auto r = leibniz_check(in.s1, in.s2, in.f, variant); !r.is_zero()) return fail("axiom3", r, std::nullopt);

    auto df = gradient(in.f);
    auto dg = gradient(in.g);
    if (!df.xi.is_zero()) return fail("axiom4.rho_d", Section{df.xi, OneForm::zero(n)}, std::nullopt);
    if (auto p = courant_pairing(df, dg); !p.is_zero()) return fail("axiom4.pairing", std::nullopt, p);

    // rho(e)<h1,h2> = <[[e,h1]] + D<e,h1>, h2> + <h1, [[e,h2]] + D<e,h2>>, with (e,h1,h2) = (s1,s2,s3)
    auto lhs = apply(in.s1.xi, courant_pairing(in.s2, in.s3));
    auto x1 = br(in.s1, in.s2) + gradient(courant_pairing(in.s1, in.s2));
    auto x2 = br(in.s1, in.s3) + gradient(courant_pairing(in.s1, in.s3));
    auto rhs = courant_pairing(x1, in.s3) + courant_pairing(in.s2, x2);
    if (auto p = lhs - rhs; !p.is_zero()) return fail("axiom5", std::nullopt, p);
    return std::nullopt;
}

}  // namespace

AxiomSampleReport axioms_sample_check(std::size_t nvars, std::size_t degree_bound, std::size_t trials,
                                      std::uint64_t seed, BracketVariant variant, Exec exec)
{
    if (nvars == 0) throw std::invalid_argument("axioms_sample_check: nvars must be >= 1");
    std::vector<char> ok(trials, 1);
    const auto count = static_cast<std::int64_t>(trials);
    auto body = [&](std::int64_t i) {
        auto in = draw_trial(nvars, degree_bound, seed, static_cast<std::size_t>(i));
        ok[static_cast<std::size_t>(i)] = !run_trial(in, variant).has_value();
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < count; ++i) body(i);
    } else {
        for (std::int64_t i = 0; i < count; ++i) body(i);
    }
    AxiomSampleReport rep{nvars, degree_bound, trials, seed, 0, kAxiomNames, std::nullopt};
    for (std::size_t i = 0; i < trials; ++i) {
        if (ok[i]) {
            ++rep.passed;
        } else if (!rep.first_failure) {
            rep.first_failure = run_trial(draw_trial(nvars, degree_bound, seed, i), variant);
            rep.first_failure->trial = i;
        }
    }
    return rep;
}

Section linearize(const omni::OmniElement& e)
{
    return {VectorField::linear(exactla::transpose(e.a())), OneForm::constant(e.v())};
}

std::optional<omni::OmniElement> delinearize(const Section& s)
{
    const std::size_t n = s.nvars();
    exactla::RatMat at(n, n);
    RatVec v(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [m, c] : s.xi.c[i].terms()) {
            std::size_t deg = 0, which = 0;
            for (std::size_t k = 0; k < n; ++k) {
                deg += m[k];
                if (m[k]) which = k;
            }
            if (deg != 1) return std::nullopt;
            at(i, which) = c;
        }
        if (s.theta.c[i].degree() > 0) return std::nullopt;
        v[i] = s.theta.c[i].constant_term();
    }
    return omni::OmniElement(exactla::transpose(at), std::move(v));
}

LinearizeReport linearize_roundtrip(const omni::OmniElement& e1, const omni::OmniElement& e2)
{
    if (e1.n() != e2.n()) throw DimensionError("linearize_roundtrip: dimension tags differ");
    const std::size_t n = e1.n();
    LinearizeReport rep;
    auto i1 = linearize(e1);
    auto i2 = linearize(e2);
    rep.lhs = courant_bracket(i1, i2);
    rep.rhs = linearize(omni::omni_bracket(e1, e2));
    rep.bracket_ok = rep.lhs == rep.rhs;
    rep.pairing = courant_pairing(i1, i2);
    rep.omni_pairing = omni::omni_pairing(e1, e2);
    // The pairing takes values in linear functions vanishing at the origin.
    bool linear = true;
    rep.pairing_coefficients = RatVec(n);
    for (const auto& [m, c] : rep.pairing.terms()) {
        std::size_t deg = 0, which = 0;
        for (std::size_t k = 0; k < n; ++k) {
            deg += m[k];
            if (m[k]) which = k;
        }
        if (deg != 1) linear = false;
        else rep.pairing_coefficients[which] = c;
    }
    rep.pairing_ok = linear && rep.pairing_coefficients == rep.omni_pairing;
    return rep;
}

}  // namespace omnilie::courant
