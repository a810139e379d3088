#include "omnilie/calgebra.hpp"

#include "omnilie/omni.hpp"

#include <functional>
#include <stdexcept>

namespace omnilie::calgebra {

namespace {

const Rat kHalf(1, 2);
const Rat kThird(1, 3);

using Residual = std::function<RatVec(std::span<const std::size_t>)>;

struct CheckSpec {
    std::string name;
    std::vector<std::size_t> ranges;
    Residual fn;
};

std::vector<std::size_t> decode(std::size_t idx, const std::vector<std::size_t>& ranges)
{
    std::vector<std::size_t> t(ranges.size());
    for (std::size_t d = ranges.size(); d-- > 0;) {
        t[d] = idx % ranges[d];
        idx /= ranges[d];
    }
    return t;
}

CheckResult run_check(const CheckSpec& spec, Exec exec)
{
    std::size_t total = 1;
    for (auto r : spec.ranges) total *= r;
    std::vector<char> ok(total, 1);
    const auto count = static_cast<std::int64_t>(total);
    auto body = [&](std::int64_t i) {
        auto t = decode(static_cast<std::size_t>(i), spec.ranges);
        ok[static_cast<std::size_t>(i)] = exactla::is_zero(spec.fn(t));
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (std::int64_t i = 0; i < count; ++i) body(i);
    } else {
        for (std::int64_t i = 0; i < count; ++i) body(i);
    }
    CheckResult out{spec.name, true, total, {}, {}};
    for (std::size_t i = 0; i < total; ++i)
        if (!ok[i]) {
            out.passed = false;
            out.witness = decode(i, spec.ranges);
            out.residual = spec.fn(out.witness);
            break;
        }
    return out;
}

RatVec flat(const RatMat& m) { return m.data(); }

// System M x = b for the gradient: rows (j, k) read <x, e_j>_k.
RatMat gradient_system(const CAlgebraInstance& c)
{
    RatMat m(c.dim_e * c.dim_a, c.dim_e);
    for (std::size_t j = 0; j < c.dim_e; ++j)
        for (std::size_t k = 0; k < c.dim_a; ++k)
            for (std::size_t i = 0; i < c.dim_e; ++i) m(j * c.dim_a + k, i) = c.pairing.at(i, j, k);
    return m;
}

RatVec gradient_rhs(const CAlgebraInstance& c, std::span<const Rat> f)
{
    RatVec b(c.dim_e * c.dim_a);
    for (std::size_t j = 0; j < c.dim_e; ++j) {
        auto r = exactla::mul(c.rho[j], f);
        for (std::size_t k = 0; k < c.dim_a; ++k) b[j * c.dim_a + k] = kHalf * r[k];
    }
    return b;
}

// Everything the checks need, with D resolved once.
struct Context {
    const CAlgebraInstance& c;
    RatMat d;  // dim_e x dim_a

    RatVec e(std::size_t i) const { return exactla::unit(c.dim_e, i); }
    RatVec a(std::size_t p) const { return exactla::unit(c.dim_a, p); }
    RatVec grad(std::span<const Rat> f) const { return exactla::mul(d, f); }
};

std::vector<CheckSpec> validation_specs(const CAlgebraInstance& c)
{
    const std::size_t na = c.dim_a, ne = c.dim_e;
    auto a = [na](std::size_t p) { return exactla::unit(na, p); };
    auto e = [ne](std::size_t i) { return exactla::unit(ne, i); };
    std::vector<CheckSpec> specs;
    specs.push_back({"mul_a.commutative", {na, na}, [&c, a](auto t) {
                         return exactla::sub(c.mul(a(t[0]), a(t[1])), c.mul(a(t[1]), a(t[0])));
                     }});
    specs.push_back({"mul_a.associative", {na, na, na}, [&c, a](auto t) {
                         return exactla::sub(c.mul(c.mul(a(t[0]), a(t[1])), a(t[2])),
                                             c.mul(a(t[0]), c.mul(a(t[1]), a(t[2]))));
                     }});
    specs.push_back({"module.law", {na, na, ne}, [&c, a, e](auto t) {
                         return exactla::sub(c.scalar(c.mul(a(t[0]), a(t[1])), e(t[2])),
                                             c.scalar(a(t[0]), c.scalar(a(t[1]), e(t[2]))));
                     }});
    specs.push_back({"pairing.symmetric", {ne, ne}, [&c, e](auto t) {
                         return exactla::sub(c.pair(e(t[0]), e(t[1])), c.pair(e(t[1]), e(t[0])));
                     }});
    specs.push_back({"pairing.a_bilinear", {na, ne, ne}, [&c, a, e](auto t) {
                         return exactla::sub(c.pair(c.scalar(a(t[0]), e(t[1])), e(t[2])),
                                             c.mul(a(t[0]), c.pair(e(t[1]), e(t[2]))));
                     }});
    specs.push_back({"bracket.antisymmetric", {ne, ne}, [&c, e](auto t) {
                         return exactla::add(c.brk(e(t[0]), e(t[1])), c.brk(e(t[1]), e(t[0])));
                     }});
    specs.push_back({"rho.leibniz", {ne, na, na}, [&c, a](auto t) {
                         const auto& r = c.rho[t[0]];
                         auto lhs = exactla::mul(r, c.mul(a(t[1]), a(t[2])));
                         auto rhs = exactla::add(c.mul(exactla::mul(r, a(t[1])), a(t[2])),
                                                 c.mul(a(t[1]), exactla::mul(r, a(t[2]))));
                         return exactla::sub(lhs, rhs);
                     }});
    specs.push_back({"rho.a_linear", {na, ne, na}, [&c, a, e](auto t) {
                         auto lhs = exactla::mul(c.anchor(c.scalar(a(t[0]), e(t[1]))), a(t[2]));
                         auto rhs = c.mul(a(t[0]), exactla::mul(c.rho[t[1]], a(t[2])));
                         return exactla::sub(lhs, rhs);
                     }});
    return specs;
}

std::vector<CheckSpec> axiom_specs(const Context& ctx, bool forced)
{
    const auto& c = ctx.c;
    const std::size_t na = c.dim_a, ne = c.dim_e;
    std::vector<CheckSpec> specs;
    if (forced) {
        specs.push_back({"axiom0.defining", {na, ne}, [&ctx](auto t) {
                             auto df = ctx.grad(ctx.a(t[0]));
                             auto lhs = ctx.c.pair(df, ctx.e(t[1]));
                             auto rhs = exactla::scale(kHalf, exactla::mul(ctx.c.rho[t[1]], ctx.a(t[0])));
                             return exactla::sub(lhs, rhs);
                         }});
    }
    specs.push_back({"axiom1", {ne, ne, ne}, [&ctx](auto t) {
                         const auto& c = ctx.c;
                         auto e1 = ctx.e(t[0]), e2 = ctx.e(t[1]), e3 = ctx.e(t[2]);
                         auto j = c.brk(c.brk(e1, e2), e3);
                         j = exactla::add(j, c.brk(c.brk(e2, e3), e1));
                         j = exactla::add(j, c.brk(c.brk(e3, e1), e2));
                         return exactla::sub(j, ctx.grad(cartan_T(c, e1, e2, e3)));
                     }});
    specs.push_back({"axiom2", {ne, ne}, [&ctx](auto t) {
                         const auto& c = ctx.c;
                         auto lhs = c.anchor(c.brk(ctx.e(t[0]), ctx.e(t[1])));
                         return flat(exactla::sub(lhs, exactla::commutator(c.rho[t[0]], c.rho[t[1]])));
                     }});
    specs.push_back({"axiom3", {ne, ne, na}, [&ctx](auto t) {
                         const auto& c = ctx.c;
                         auto e1 = ctx.e(t[0]), e2 = ctx.e(t[1]), f = ctx.a(t[2]);
                         auto r = c.brk(e1, c.scalar(f, e2));
                         r = exactla::sub(r, c.scalar(f, c.brk(e1, e2)));
                         r = exactla::sub(r, c.scalar(exactla::mul(c.anchor(e1), f), e2));
                         return exactla::add(r, c.scalar(c.pair(e1, e2), ctx.grad(f)));
                     }});
    specs.push_back({"axiom4.rho_d", {na}, [&ctx](auto t) {
                         return flat(ctx.c.anchor(ctx.grad(ctx.a(t[0]))));
                     }});
    specs.push_back({"axiom4.pairing", {na, na}, [&ctx](auto t) {
                         return ctx.c.pair(ctx.grad(ctx.a(t[0])), ctx.grad(ctx.a(t[1])));
                     }});
    specs.push_back({"axiom5", {ne, ne, ne}, [&ctx](auto t) {
                         const auto& c = ctx.c;
                         auto e = ctx.e(t[0]), h1 = ctx.e(t[1]), h2 = ctx.e(t[2]);
                         auto lhs = exactla::mul(c.anchor(e), c.pair(h1, h2));
                         auto x1 = exactla::add(c.brk(e, h1), ctx.grad(c.pair(e, h1)));
                         auto x2 = exactla::add(c.brk(e, h2), ctx.grad(c.pair(e, h2)));
                         return exactla::sub(lhs, exactla::add(c.pair(x1, h2), c.pair(h1, x2)));
                     }});
    return specs;
}

CheckSpec axiom0_spec(const CAlgebraInstance& c)
{
    // Residual = part of the right-hand side outside the image of beta.
    auto image = exactla::row_space(exactla::transpose(gradient_system(c)));
    return {"axiom0", {c.dim_a}, [&c, image](auto t) {
                return image.reduce(gradient_rhs(c, exactla::unit(c.dim_a, t[0])));
            }};
}

}  // namespace

RatVec Tensor3::contract(std::span<const Rat> x, std::span<const Rat> y) const
{
    if (x.size() != d0_ || y.size() != d1_) throw DimensionError("Tensor3::contract: length mismatch");
    RatVec out(d2_);
    for (std::size_t i = 0; i < d0_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < d1_; ++j) {
            if (sgn(y[j]) == 0) continue;
            Rat xy = x[i] * y[j];
            for (std::size_t k = 0; k < d2_; ++k) {
                const Rat& t = at(i, j, k);
                if (sgn(t) != 0) out[k] += xy * t;
            }
        }
    }
    return out;
}

RatMat CAlgebraInstance::anchor(std::span<const Rat> e) const
{
    if (e.size() != dim_e) throw DimensionError("anchor: length mismatch");
    RatMat m(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_e; ++i)
        if (sgn(e[i]) != 0) m = exactla::add(m, exactla::scale(e[i], rho[i]));
    return m;
}

void check_shapes(const CAlgebraInstance& c)
{
    auto shape = [](const Tensor3& t, std::size_t a, std::size_t b, std::size_t d, const char* what) {
        if (t.dim0() != a || t.dim1() != b || t.dim2() != d)
            throw DimensionError(std::string("C-algebra instance: wrong shape for ") + what);
    };
    shape(c.mul_a, c.dim_a, c.dim_a, c.dim_a, "mulA");
    shape(c.act, c.dim_a, c.dim_e, c.dim_e, "act");
    shape(c.pairing, c.dim_e, c.dim_e, c.dim_a, "pairing");
    shape(c.bracket, c.dim_e, c.dim_e, c.dim_e, "bracket");
    if (c.rho.size() != c.dim_e) throw DimensionError("C-algebra instance: rho needs one matrix per E-basis element");
    for (const auto& r : c.rho)
        if (r.rows() != c.dim_a || r.cols() != c.dim_a)
            throw DimensionError("C-algebra instance: rho matrices must be dimA x dimA");
}

bool Report::passed() const
{
    for (const auto& ch : checks)
        if (!ch.passed) return false;
    return true;
}

const CheckResult* Report::find(std::string_view name) const
{
    for (const auto& ch : checks)
        if (ch.name == name) return &ch;
    return nullptr;
}

Report validate_instance(const CAlgebraInstance& c, Exec exec)
{
    check_shapes(c);
    Report out;
    for (const auto& spec : validation_specs(c)) out.checks.push_back(run_check(spec, exec));

    // beta: e -> <e, .> must be injective as a map R^dimE -> R^(dimE*dimA).
    CheckResult beta{"beta.injective", true, 1, {}, {}};
    auto ker = exactla::kernel(gradient_system(c));
    if (ker.dim() > 0) {
        beta.passed = false;
        beta.residual = ker.basis().row_vec(0);
    }
    out.checks.push_back(std::move(beta));
    return out;
}

std::optional<RatVec> gradient(const CAlgebraInstance& c, std::span<const Rat> f)
{
    check_shapes(c);
    if (f.size() != c.dim_a) throw DimensionError("gradient: length mismatch");
    auto sol = exactla::solve_linear(gradient_system(c), gradient_rhs(c, f));
    if (!sol) return std::nullopt;
    return sol->particular;
}

std::optional<RatMat> gradient_matrix(const CAlgebraInstance& c)
{
    RatMat d(c.dim_e, c.dim_a);
    for (std::size_t p = 0; p < c.dim_a; ++p) {
        auto g = gradient(c, exactla::unit(c.dim_a, p));
        if (!g) return std::nullopt;
        for (std::size_t i = 0; i < c.dim_e; ++i) d(i, p) = (*g)[i];
    }
    return d;
}

RatVec cartan_T(const CAlgebraInstance& c, std::span<const Rat> e1, std::span<const Rat> e2,
                std::span<const Rat> e3)
{
    auto t = c.pair(c.brk(e1, e2), e3);
    t = exactla::add(t, c.pair(c.brk(e2, e3), e1));
    t = exactla::add(t, c.pair(c.brk(e3, e1), e2));
    return exactla::scale(kThird, t);
}

Report check_axioms(const CAlgebraInstance& c, const AxiomOptions& opts, Exec exec)
{
    check_shapes(c);
    Report out;
    std::optional<RatMat> d;
    if (opts.forced_gradient) {
        if (opts.forced_gradient->rows() != c.dim_e || opts.forced_gradient->cols() != c.dim_a)
            throw DimensionError("check_axioms: forced gradient must be dimE x dimA");
        d = opts.forced_gradient;
    } else {
        auto ax0 = run_check(axiom0_spec(c), exec);
        const bool ok = ax0.passed;
        out.checks.push_back(std::move(ax0));
        if (!ok) return out;
        d = gradient_matrix(c);
    }
    Context ctx{c, *d};
    for (const auto& spec : axiom_specs(ctx, opts.forced_gradient.has_value()))
        out.checks.push_back(run_check(spec, exec));
    return out;
}

RatVec residual(const CAlgebraInstance& c, std::string_view check, std::span<const std::size_t> witness,
                const AxiomOptions& opts)
{
    check_shapes(c);
    auto eval = [&](const std::vector<CheckSpec>& specs) -> std::optional<RatVec> {
        for (const auto& s : specs)
            if (s.name == check) {
                if (witness.size() != s.ranges.size()) throw std::invalid_argument("residual: witness arity");
                for (std::size_t d = 0; d < witness.size(); ++d)
                    if (witness[d] >= s.ranges[d]) throw std::out_of_range("residual: witness index");
                return s.fn(witness);
            }
        return std::nullopt;
    };
    if (check == "beta.injective") throw std::invalid_argument("residual: beta.injective has no witness tuple");
    if (check == "axiom0") return *eval({axiom0_spec(c)});
    if (auto r = eval(validation_specs(c))) return *r;
    std::optional<RatMat> d = opts.forced_gradient ? opts.forced_gradient : gradient_matrix(c);
    if (!d) throw std::invalid_argument("residual: gradient undefined");
    Context ctx{c, *d};
    if (auto r = eval(axiom_specs(ctx, opts.forced_gradient.has_value()))) return *r;
    throw std::invalid_argument("residual: unknown check '" + std::string(check) + "'");
}

CAlgebraInstance build_omni_instance(std::size_t n)
{
    if (n == 0) throw std::invalid_argument("build_omni_instance: n must be >= 1");
    const std::size_t ne = omni::flat_dim(n);
    CAlgebraInstance c;
    c.dim_a = n;
    c.dim_e = ne;
    c.mul_a = Tensor3(n, n, n);
    c.act = Tensor3(n, ne, ne);
    c.pairing = Tensor3(ne, ne, n);
    c.bracket = Tensor3(ne, ne, ne);
    std::vector<omni::OmniElement> basis;
    for (std::size_t i = 0; i < ne; ++i) basis.push_back(omni::OmniElement::basis(n, i));
    for (std::size_t i = 0; i < ne; ++i) {
        for (std::size_t j = 0; j < ne; ++j) {
            auto p = omni::omni_pairing(basis[i], basis[j]);
            for (std::size_t k = 0; k < n; ++k) c.pairing.at(i, j, k) = p[k];
            auto b = omni::omni_bracket(basis[i], basis[j]).flat();
            for (std::size_t k = 0; k < ne; ++k) c.bracket.at(i, j, k) = b[k];
        }
        c.rho.push_back(basis[i].a());
    }
    return c;
}

}  // namespace omnilie::calgebra
