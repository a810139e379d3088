#include "omnilie/dstruct.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace omnilie::dstruct {

namespace {

using exactla::RatMat;

// Rows <x, f>_k = 0 for every basis f of F and component k, in the flat coordinates of x.
RatMat orthogonality_system(const OmniSubspace& f)
{
    const std::size_t n = f.n();
    const std::size_t dim = omni::flat_dim(n);
    const auto basis = f.basis();
    RatMat sys(basis.size() * n, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const auto u = OmniElement::basis(n, j);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            auto p = omni::omni_pairing(u, basis[b]);
            for (std::size_t k = 0; k < n; ++k) sys(b * n + k, j) = p[k];
        }
    }
    return sys;
}

bool is_null(const OmniElement& e) { return exactla::is_zero(omni::omni_pairing(e, e)); }

bool all_zero(const std::vector<Rat>& v) { return exactla::is_zero(v); }

// Nonnegative rational square root when it exists.
std::optional<Rat> rational_sqrt(const Rat& x)
{
    if (sgn(x) < 0) return std::nullopt;
    const mpz_class& p = x.get_num();
    const mpz_class& q = x.get_den();
    if (!mpz_perfect_square_p(p.get_mpz_t()) || !mpz_perfect_square_p(q.get_mpz_t())) return std::nullopt;
    mpz_class rp, rq;
    mpz_sqrt(rp.get_mpz_t(), p.get_mpz_t());
    mpz_sqrt(rq.get_mpz_t(), q.get_mpz_t());
    Rat r(rp, rq);
    r.canonicalize();
    return r;
}

}  // namespace

bool is_isotropic(const OmniSubspace& f)
{
    const auto basis = f.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j)
            if (!exactla::is_zero(omni::omni_pairing(basis[i], basis[j]))) return false;
    return true;
}

OmniSubspace omni_orthogonal(const OmniSubspace& f) { return {f.n(), exactla::kernel(orthogonality_system(f))}; }

bool verify_witness(const OmniSubspace& f, const NullWitness& w)
{
    if (w.rational.n() != f.n()) return false;
    const auto basis = f.basis();
    if (w.is_rational()) {
        if (f.contains(w.rational) || !is_null(w.rational)) return false;
        for (const auto& b : basis)
            if (!exactla::is_zero(omni::omni_pairing(w.rational, b))) return false;
        return true;
    }
    const auto& p = w.rational;
    const auto& q = *w.surd;
    if (q.n() != f.n() || sgn(w.radicand) <= 0 || rational_sqrt(w.radicand)) return false;
    // p + sqrt(d) q lies in F (defined over Q) iff both p and q do.
    if (f.contains(p) && f.contains(q)) return false;
    for (const auto& b : basis)
        if (!exactla::is_zero(omni::omni_pairing(p, b)) || !exactla::is_zero(omni::omni_pairing(q, b))) return false;
    // <p + rq, p + rq> = (<p,p> + d <q,q>) + 2 r <p,q>
    auto rational_part = exactla::add(omni::omni_pairing(p, p), exactla::scale(w.radicand, omni::omni_pairing(q, q)));
    return exactla::is_zero(rational_part) && exactla::is_zero(omni::omni_pairing(p, q));
}

std::string_view to_string(Maximality m)
{
    switch (m) {
    case Maximality::maximal: return "yes";
    case Maximality::not_maximal: return "no";
    case Maximality::undetermined: return "undetermined";
    }
    return "undetermined";
}

std::optional<NullWitness> null_vector_in_plane(const OmniElement& w1, const OmniElement& w2)
{
    // q(s w1 + t w2) = s^2 a + 2 s t b + t^2 c, componentwise.
    const auto a = omni::omni_pairing(w1, w1);
    const auto b = omni::omni_pairing(w1, w2);
    const auto c = omni::omni_pairing(w2, w2);
    const std::size_t n = a.size();

    auto vanishes = [&](const Rat& s, const Rat& t) {
        for (std::size_t k = 0; k < n; ++k)
            if (sgn(a[k] * s * s + 2 * b[k] * s * t + c[k] * t * t) != 0) return false;
        return true;
    };
    auto combo = [&](const Rat& s, const Rat& t) { return s * w1 + t * w2; };

    std::size_t k = 0;
    while (k < n && sgn(a[k]) == 0 && sgn(b[k]) == 0 && sgn(c[k]) == 0) ++k;
    if (k == n) return NullWitness{w1, std::nullopt, 0};

    std::vector<std::pair<Rat, Rat>> candidates;
    if (sgn(a[k]) == 0) {
        candidates.emplace_back(1, 0);
        if (sgn(b[k]) != 0) candidates.emplace_back(-c[k], 2 * b[k]);
    } else {
        const Rat disc = b[k] * b[k] - a[k] * c[k];
        if (sgn(disc) < 0) return std::nullopt;
        if (auto r = rational_sqrt(disc)) {
            candidates.emplace_back((-b[k] + *r) / a[k], 1);
            if (sgn(*r) != 0) candidates.emplace_back((-b[k] - *r) / a[k], 1);
        } else {
            // Irrational roots s = (-b +- sqrt(disc)) / a are shared by every
            // other component only if that component is proportional to this one.
            for (std::size_t m = 0; m < n; ++m) {
                if (a[m] * b[k] != a[k] * b[m] || a[m] * c[k] != a[k] * c[m] || b[m] * c[k] != b[k] * c[m])
                    return std::nullopt;
            }
            Rat inv_a = 1 / a[k];
            return NullWitness{combo(-b[k] * inv_a, 1), inv_a * w1, disc};
        }
    }
    for (const auto& [s, t] : candidates)
        if (vanishes(s, t)) {
            auto e = combo(s, t);
            if (!e.is_zero()) return NullWitness{std::move(e), std::nullopt, 0};
        }
    return std::nullopt;
}

MaximalityVerdict maximality_check(const OmniSubspace& f, const MaximalityOptions& opts)
{
    if (!is_isotropic(f)) throw std::invalid_argument("maximality_check: subspace is not isotropic");
    const auto perp = omni_orthogonal(f);
    MaximalityVerdict out;
    out.extension_dim = perp.dim() - f.dim();
    if (out.extension_dim == 0) {
        out.status = Maximality::maximal;
        return out;
    }
    // Any extension e = f0 + w with w in a complement W of F in F^perp, and
    // q(e) = q(w) because F is isotropic and w is orthogonal to F.
    std::vector<OmniElement> w;
    for (const auto& row : exactla::complement_basis(f.sub(), perp.sub()))
        w.push_back(OmniElement::from_flat(f.n(), row));

    auto found = [&](NullWitness wit) {
        out.status = Maximality::not_maximal;
        out.witness = std::move(wit);
        return out;
    };

    for (const auto& x : w)
        if (is_null(x)) return found({x, std::nullopt, 0});
    if (w.size() == 1) {
        out.status = Maximality::maximal;
        return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (auto wit = null_vector_in_plane(w[i], w[j])) return found(std::move(*wit));
    if (w.size() == 2) {
        out.status = Maximality::maximal;
        return out;
    }

    Rng rng{opts.seed, 0x6d617869ULL, f.n()};
    for (std::size_t s = 0; s < opts.samples; ++s) {
        OmniElement p(f.n()), q(f.n());
        for (const auto& x : w) {
            p = p + Rat(static_cast<long>(rng.uniform(-3, 3))) * x;
            q = q + Rat(static_cast<long>(rng.uniform(-3, 3))) * x;
        }
        if (p.is_zero() || q.is_zero()) continue;
        if (auto wit = null_vector_in_plane(p, q)) {
            if (verify_witness(f, *wit)) return found(std::move(*wit));
        }
    }
    out.status = Maximality::undetermined;
    return out;
}

ClosureResult bracket_closed(const OmniSubspace& f)
{
    const auto basis = f.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            auto br = omni::omni_bracket(basis[i], basis[j]);
            if (!f.contains(br)) return {false, ClosureFailure{i, j, basis[i], basis[j], std::move(br)}};
        }
    return {true, std::nullopt};
}

Classification classify(const OmniSubspace& f, const MaximalityOptions& opts)
{
    Classification out;
    out.isotropic = is_isotropic(f);
    if (out.isotropic) out.maximality = maximality_check(f, opts);
    out.closure = bracket_closed(f);
    out.d_structure = out.isotropic && out.maximality->status == Maximality::maximal && out.closure.closed;
    if (out.d_structure) {
        const auto basis = f.basis();
        bool ok = true;
        for (std::size_t i = 0; i < basis.size() && ok; ++i)
            for (std::size_t j = i + 1; j < basis.size() && ok; ++j)
                for (std::size_t k = j + 1; k < basis.size() && ok; ++k) {
                    auto jac = omni::jacobiator(basis[i], basis[j], basis[k]);
                    auto t = omni::cartan_form(basis[i], basis[j], basis[k]);
                    ok = jac.a().is_zero() && jac.v() == t && all_zero(t);
                }
        out.restricted_jacobi = ok;
    }
    return out;
}

std::optional<liealg::BilinearOp> recover_bilinear(const OmniSubspace& f)
{
    const std::size_t n = f.n();
    if (f.dim() != n) return std::nullopt;
    // Write F as rows [A-part | v-part]; it is a graph iff the v-block is invertible.
    const auto basis = f.basis();
    RatMat v_block(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) v_block(r, c) = basis[r].v()[c];
    if (exactla::rref_canonical(v_block).rank != n) return std::nullopt;
    const auto vt = exactla::transpose(v_block);
    liealg::BilinearOp b(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Coefficients x with sum_r x_r v_r = e_i.
        auto x = exactla::solve_linear(vt, exactla::unit(n, i))->particular;
        OmniElement e(n);
        for (std::size_t r = 0; r < n; ++r) e = e + x[r] * basis[r];
        // ad(e_i) column j is B(e_i, e_j).
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) b.c(i, j, k) = e.a()(k, j);
    }
    return b;
}

exactla::Subspace isotropic_graph_space(std::size_t n)
{
    if (n == 0) throw std::invalid_argument("isotropic_graph_space: n must be >= 1");
    const std::size_t nn = n * n;
    const std::size_t unknowns = nn * n;
    // For p <= q: E_p lambda(E_q) + E_q lambda(E_p) = 0. With E_p = E_{rc},
    // (E_p w)_k = [k == r] w_c.
    std::vector<RatVec> rows;
    for (std::size_t p = 0; p < nn; ++p)
        for (std::size_t q = p; q < nn; ++q)
            for (std::size_t k = 0; k < n; ++k) {
                RatVec row(unknowns);
                const std::size_t rp = p / n, cp = p % n;
                const std::size_t rq = q / n, cq = q % n;
                if (rp == k) row[q * n + cp] += 1;
                if (rq == k) row[p * n + cq] += 1;
                if (!exactla::is_zero(row)) rows.push_back(std::move(row));
            }
    return exactla::kernel(RatMat::from_rows(rows, unknowns));
}

std::optional<Strategy> parse_strategy(std::string_view name)
{
    if (name == "exhaustive") return Strategy::exhaustive;
    if (name == "graph") return Strategy::graph;
    if (name == "greedy") return Strategy::greedy;
    return std::nullopt;
}

std::string_view to_string(Strategy s)
{
    switch (s) {
    case Strategy::exhaustive: return "exhaustive";
    case Strategy::graph: return "graph";
    case Strategy::greedy: return "greedy";
    }
    return "graph";
}

namespace {

constexpr std::size_t kGreedyWalks = 32;
constexpr std::size_t kRandomGraphs = 8;

// Maximal independent sets of the coordinate conflict graph (i ~ j when
// <u_i, u_j> != 0). Vector coordinates come first so that exclusions get
// resolved early.
std::vector<OmniSubspace> coordinate_candidates(std::size_t n, std::size_t limit, bool& truncated)
{
    const std::size_t dim = omni::flat_dim(n);
    std::vector<std::size_t> order;
    for (std::size_t k = n * n; k < dim; ++k) order.push_back(k);
    for (std::size_t k = 0; k < n * n; ++k) order.push_back(k);
    std::vector<std::vector<bool>> conflict(dim, std::vector<bool>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            conflict[i][j] =
                !exactla::is_zero(omni::omni_pairing(OmniElement::basis(n, i), OmniElement::basis(n, j)));
    std::vector<std::size_t> pos(dim);
    for (std::size_t p = 0; p < dim; ++p) pos[order[p]] = p;

    std::vector<OmniSubspace> out;
    std::vector<int> state(dim, -1);  // -1 undecided, 0 excluded, 1 included
    truncated = false;

    // An excluded coordinate must be blocked by some included neighbour.
    auto blocked_possible = [&](std::size_t x) {
        for (std::size_t y = 0; y < dim; ++y)
            if (conflict[x][y] && state[y] != 0) return true;
        return false;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t depth) {
        if (truncated) return;
        if (depth == dim) {
            for (std::size_t x = 0; x < dim; ++x)
                if (state[x] == 0 && !blocked_possible(x)) return;
            if (out.size() == limit) {
                truncated = true;
                return;
            }
            std::vector<OmniElement> gens;
            for (std::size_t x = 0; x < dim; ++x)
                if (state[x] == 1) gens.push_back(OmniElement::basis(n, x));
            out.push_back(OmniSubspace::span(n, gens));
            return;
        }
        const std::size_t x = order[depth];
        bool can_include = !conflict[x][x];
        for (std::size_t y = 0; y < dim && can_include; ++y)
            if (state[y] == 1 && conflict[x][y]) can_include = false;
        if (can_include) {
            state[x] = 1;
            rec(depth + 1);
        }
        state[x] = 0;
        // Prune when x has no included or undecided neighbour left.
        bool ok = true;
        for (std::size_t y = 0; y < dim && ok; ++y)
            if (state[y] == 0 && pos[y] <= depth) ok = blocked_possible(y);
        if (ok) rec(depth + 1);
        state[x] = -1;
    };
    rec(0);
    return out;
}

std::vector<OmniSubspace> graph_candidates(std::size_t n, std::uint64_t seed)
{
    std::vector<OmniSubspace> out{OmniSubspace::horizontal(n)};
    out.push_back(liealg::graph_subspace(liealg::BilinearOp(n)));
    for (const auto& name : liealg::catalog_names()) {
        auto b = liealg::catalog(name);
        if (b.n() == n && liealg::is_lie(b)) out.push_back(liealg::graph_subspace(b));
    }
    for (std::size_t i = 0; i < kRandomGraphs; ++i) {
        Rng rng{seed, 0x67726170ULL, n, i};
        out.push_back(liealg::graph_subspace(liealg::random_lie(n, rng)));
    }
    return out;
}

// Admissible extension directions: w in F^perp with [[b, w]] in F for all
// basis b of F. Returns a basis of a complement of F inside that space.
std::vector<OmniElement> admissible_directions(const OmniSubspace& f)
{
    const std::size_t n = f.n();
    const std::size_t dim = omni::flat_dim(n);
    const auto basis = f.basis();
    auto sys = orthogonality_system(f);
    std::vector<RatVec> rows;
    for (std::size_t r = 0; r < sys.rows(); ++r) rows.push_back(sys.row_vec(r));
    for (const auto& b : basis) {
        // w -> reduce_F([[b, w]]) is linear in w.
        std::vector<RatVec> cols;
        for (std::size_t j = 0; j < dim; ++j)
            cols.push_back(f.sub().reduce(omni::omni_bracket(b, OmniElement::basis(n, j)).flat()));
        for (std::size_t k = 0; k < dim; ++k) {
            RatVec row(dim);
            for (std::size_t j = 0; j < dim; ++j) row[j] = cols[j][k];
            if (!exactla::is_zero(row)) rows.push_back(std::move(row));
        }
    }
    auto ker = rows.empty() ? exactla::full_space(dim) : exactla::kernel(RatMat::from_rows(rows, dim));
    std::vector<OmniElement> out;
    for (const auto& row : exactla::complement_basis(f.sub(), ker)) out.push_back(OmniElement::from_flat(n, row));
    return out;
}

OmniSubspace greedy_walk(std::size_t n, Rng& rng)
{
    OmniSubspace f(n);
    for (;;) {
        auto dirs = admissible_directions(f);
        if (dirs.empty()) return f;
        std::vector<OmniElement> nulls;
        for (const auto& d : dirs)
            if (is_null(d)) nulls.push_back(d);
        // Sparse pairs with small integer weights, when no single direction is null.
        for (std::size_t attempt = 0; nulls.empty() && dirs.size() >= 2 && attempt < 4 * dirs.size(); ++attempt) {
            auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(dirs.size()) - 1));
            auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(dirs.size()) - 1));
            if (i == j) continue;
            if (auto wit = null_vector_in_plane(dirs[i], dirs[j]); wit && wit->is_rational())
                nulls.push_back(wit->rational);
        }
        if (nulls.empty()) return f;
        const auto pick = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(nulls.size()) - 1));
        auto gens = f.basis();
        gens.push_back(nulls[pick]);
        f = OmniSubspace::span(n, gens);
    }
}

}  // namespace

SearchResult search_d_structures(std::size_t n, Strategy strategy, std::uint64_t seed, std::size_t budget, Exec exec)
{
    if (n == 0) throw std::invalid_argument("search_d_structures: n must be >= 1");
    if (strategy == Strategy::exhaustive && n > 4)
        throw std::invalid_argument("search_d_structures: exhaustive strategy requires n <= 4");

    SearchResult out;
    std::vector<OmniSubspace> candidates;
    switch (strategy) {
    case Strategy::exhaustive:
        candidates = coordinate_candidates(n, budget, out.budget_exhausted);
        break;
    case Strategy::graph:
        candidates = graph_candidates(n, seed);
        break;
    case Strategy::greedy: {
        const std::size_t walks = std::min(kGreedyWalks, budget);
        candidates.resize(walks);
        const auto count = static_cast<std::int64_t>(walks);
        auto walk = [&](std::int64_t i) {
            Rng rng{seed, 0x67726565ULL, n, static_cast<std::uint64_t>(i)};
            candidates[static_cast<std::size_t>(i)] = greedy_walk(n, rng);
        };
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
            for (std::int64_t i = 0; i < count; ++i) walk(i);
        } else {
            for (std::int64_t i = 0; i < count; ++i) walk(i);
        }
        break;
    }
    }
    if (strategy != Strategy::exhaustive && candidates.size() > budget) {
        candidates.resize(budget);
        out.budget_exhausted = true;
    }
    if (strategy == Strategy::greedy && budget < kGreedyWalks) out.budget_exhausted = true;

    std::vector<Classification> verdicts(candidates.size());
    const auto count = static_cast<std::int64_t>(candidates.size());
    auto judge = [&](std::int64_t i) {
        const auto idx = static_cast<std::size_t>(i);
        verdicts[idx] = classify(candidates[idx], {seed, 64});
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < count; ++i) judge(i);
    } else {
        for (std::int64_t i = 0; i < count; ++i) judge(i);
    }
    out.evaluated = candidates.size();

    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto& v = verdicts[i];
        if (v.d_structure) {
            out.d_structures.push_back(candidates[i]);
        } else if (v.isotropic && v.closure.closed && v.maximality->status == Maximality::undetermined) {
            out.undetermined.push_back(candidates[i]);
        }
    }
    auto canon = [](std::vector<OmniSubspace>& xs) {
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    };
    canon(out.d_structures);
    canon(out.undetermined);
    return out;
}

}  // namespace omnilie::dstruct
