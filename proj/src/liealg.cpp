#include "omnilie/liealg.hpp"

#include <charconv>
#include <stdexcept>

namespace omnilie::liealg {

void BilinearOp::set_skew(std::size_t i, std::size_t j, std::size_t k, const Rat& val)
{
    c(i, j, k) = val;
    c(j, i, k) = -val;
}

RatVec BilinearOp::apply(std::span<const Rat> u, std::span<const Rat> w) const
{
    if (u.size() != n_ || w.size() != n_) throw DimensionError("BilinearOp::apply: length mismatch");
    RatVec out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (sgn(u[i]) == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (sgn(w[j]) == 0) continue;
            Rat uw = u[i] * w[j];
            for (std::size_t k = 0; k < n_; ++k)
                if (sgn(c(i, j, k)) != 0) out[k] += uw * c(i, j, k);
        }
    }
    return out;
}

bool is_skew(const BilinearOp& b)
{
    const std::size_t n = b.n();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (b.c(i, j, k) != -b.c(j, i, k)) return false;
    return true;
}

RatVec jacobi_defect(const BilinearOp& b, std::size_t i, std::size_t j, std::size_t k)
{
    if (!is_skew(b)) throw std::invalid_argument("jacobi_defect: operation is not skew-symmetric");
    const std::size_t n = b.n();
    if (i >= n || j >= n || k >= n) throw DimensionError("jacobi_defect: index out of range");
    auto ei = exactla::unit(n, i);
    auto ej = exactla::unit(n, j);
    auto ek = exactla::unit(n, k);
    auto d = b.apply(b.apply(ei, ej), ek);
    d = exactla::add(d, b.apply(b.apply(ej, ek), ei));
    return exactla::add(d, b.apply(b.apply(ek, ei), ej));
}

bool is_lie(const BilinearOp& b)
{
    if (!is_skew(b)) return false;
    const std::size_t n = b.n();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (!exactla::is_zero(jacobi_defect(b, i, j, k))) return false;
    return true;
}

RatMat ad_matrix(const BilinearOp& b, std::span<const Rat> v)
{
    const std::size_t n = b.n();
    if (v.size() != n) throw DimensionError("ad_matrix: length mismatch");
    RatMat m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto col = b.apply(v, exactla::unit(n, j));
        for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
    }
    return m;
}

std::vector<omni::OmniElement> graph_generators(const BilinearOp& b)
{
    std::vector<omni::OmniElement> gens;
    for (std::size_t i = 0; i < b.n(); ++i) {
        auto e = exactla::unit(b.n(), i);
        gens.emplace_back(ad_matrix(b, e), e);
    }
    return gens;
}

omni::OmniSubspace graph_subspace(const BilinearOp& b)
{
    return omni::OmniSubspace::span(b.n(), graph_generators(b));
}

BilinearOp catalog(std::string_view name)
{
    if (name.starts_with("abelian(") && name.ends_with(")")) {
        auto digits = name.substr(8, name.size() - 9);
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || n == 0)
            throw std::invalid_argument("catalog: bad abelian dimension in '" + std::string(name) + "'");
        return BilinearOp(n);
    }
    if (name == "heisenberg3") {
        BilinearOp b(3);
        b.set_skew(0, 1, 2, 1);
        return b;
    }
    if (name == "so3") {
        BilinearOp b(3);
        b.set_skew(0, 1, 2, 1);
        b.set_skew(1, 2, 0, 1);
        b.set_skew(2, 0, 1, 1);
        return b;
    }
    if (name == "sl2") {
        // (h, e, f) = (e1, e2, e3)
        BilinearOp b(3);
        b.set_skew(0, 1, 1, 2);
        b.set_skew(0, 2, 2, -2);
        b.set_skew(1, 2, 0, 1);
        return b;
    }
    if (name == "affine1") {
        BilinearOp b(2);
        b.set_skew(0, 1, 1, 1);
        return b;
    }
    if (name == "nonlie3") {
        BilinearOp b(3);
        b.set_skew(0, 1, 1, 1);
        b.set_skew(1, 2, 2, 1);
        b.set_skew(2, 0, 0, 1);
        return b;
    }
    throw std::invalid_argument("catalog: unknown operation '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names()
{
    return {"abelian(2)", "heisenberg3", "so3", "sl2", "affine1", "nonlie3"};
}

BilinearOp change_basis(const BilinearOp& b, const RatMat& g)
{
    const std::size_t n = b.n();
    if (g.rows() != n || g.cols() != n) throw DimensionError("change_basis: g must be n x n");
    if (exactla::rref_canonical(g).rank != n) throw std::invalid_argument("change_basis: g is singular");
    // Columns of g^-1.
    std::vector<RatVec> ginv_cols;
    for (std::size_t i = 0; i < n; ++i) ginv_cols.push_back(exactla::solve_linear(g, exactla::unit(n, i))->particular);
    BilinearOp out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto r = exactla::mul(g, b.apply(ginv_cols[i], ginv_cols[j]));
            for (std::size_t k = 0; k < n; ++k) out.c(i, j, k) = r[k];
        }
    return out;
}

BilinearOp direct_sum(const BilinearOp& x, const BilinearOp& y)
{
    const std::size_t p = x.n();
    BilinearOp out(p + y.n());
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            for (std::size_t k = 0; k < p; ++k) out.c(i, j, k) = x.c(i, j, k);
    for (std::size_t i = 0; i < y.n(); ++i)
        for (std::size_t j = 0; j < y.n(); ++j)
            for (std::size_t k = 0; k < y.n(); ++k) out.c(p + i, p + j, p + k) = y.c(i, j, k);
    return out;
}

BilinearOp random_skew(std::size_t n, Rng& rng)
{
    BilinearOp b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (rng.coin()) b.set_skew(i, j, k, rng.small_rat());
    return b;
}

namespace {

// Lie algebras from the catalog, by dimension, used as summands.
std::vector<BilinearOp> lie_blocks(std::size_t max_dim)
{
    std::vector<BilinearOp> out{catalog("abelian(1)")};
    if (max_dim >= 2) out.push_back(catalog("affine1"));
    if (max_dim >= 3) {
        out.push_back(catalog("heisenberg3"));
        out.push_back(catalog("so3"));
        out.push_back(catalog("sl2"));
    }
    return out;
}

}  // namespace

BilinearOp random_lie(std::size_t n, Rng& rng)
{
    BilinearOp acc(0);
    while (acc.n() < n) {
        auto blocks = lie_blocks(n - acc.n());
        const auto pick = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(blocks.size()) - 1));
        acc = direct_sum(acc, blocks[pick]);
    }
    for (;;) {
        RatMat g(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) g(r, c) = static_cast<long>(rng.uniform(-2, 2));
        if (exactla::rref_canonical(g).rank == n) return change_basis(acc, g);
    }
}

}  // namespace omnilie::liealg
