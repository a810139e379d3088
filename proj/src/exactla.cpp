#include "omnilie/exactla.hpp"

#include <algorithm>
#include <utility>

namespace omnilie {

Rat parse_rat(std::string_view text)
{
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    // mpq_class accepts "+" signs and whitespace inconsistently; keep the grammar tight.
    std::size_t i = (s[0] == '-') ? 1 : 0;
    bool slash = false;
    bool digits = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            digits = true;
        } else if (c == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            throw std::invalid_argument("malformed rational: " + s);
        }
    }
    if (!digits) throw std::invalid_argument("malformed rational: " + s);
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

namespace exactla {

namespace {

void require(bool ok, const char* what)
{
    if (!ok) throw DimensionError(what);
}

}  // namespace

RatVec zeros(std::size_t n) { return RatVec(n); }

RatVec unit(std::size_t n, std::size_t i)
{
    RatVec v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(std::span<const Rat> v)
{
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

RatVec add(std::span<const Rat> a, std::span<const Rat> b)
{
    require(a.size() == b.size(), "vector add: length mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec sub(std::span<const Rat> a, std::span<const Rat> b)
{
    require(a.size() == b.size(), "vector sub: length mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec scale(const Rat& s, std::span<const Rat> a)
{
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b)
{
    require(a.size() == b.size(), "dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows, std::size_t cols)
{
    RatMat m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, "from_rows: ragged rows");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

RatMat RatMat::identity(std::size_t n)
{
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMat RatMat::elementary(std::size_t n, std::size_t r, std::size_t c)
{
    RatMat m(n, n);
    m(r, c) = 1;
    return m;
}

RatVec RatMat::row_vec(std::size_t r) const
{
    auto s = row(r);
    return {s.begin(), s.end()};
}

RatVec RatMat::col_vec(std::size_t c) const
{
    RatVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

bool RatMat::is_zero() const { return exactla::is_zero(data_); }

RatMat add(const RatMat& a, const RatMat& b)
{
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix add: shape mismatch");
    RatMat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

RatMat sub(const RatMat& a, const RatMat& b)
{
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sub: shape mismatch");
    RatMat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

RatMat scale(const Rat& s, const RatMat& a)
{
    RatMat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
    return r;
}

RatMat mul(const RatMat& a, const RatMat& b)
{
    require(a.cols() == b.rows(), "matrix mul: inner dimension mismatch");
    RatMat r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

RatVec mul(const RatMat& a, std::span<const Rat> v)
{
    require(a.cols() == v.size(), "matrix-vector mul: length mismatch");
    RatVec r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) r[i] += a(i, k) * v[k];
    return r;
}

RatMat transpose(const RatMat& a)
{
    RatMat r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

RatMat commutator(const RatMat& a, const RatMat& b)
{
    require(a.is_square() && b.is_square() && a.rows() == b.rows(), "commutator: shape mismatch");
    return sub(mul(a, b), mul(b, a));
}

RrefResult rref_canonical(const RatMat& m)
{
    RrefResult out{m, {}, 0};
    RatMat& a = out.rref;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < a.rows() && sgn(a(piv, col)) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(lead, j));
        Rat inv = 1 / a(lead, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(lead, j) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || sgn(a(r, col)) == 0) continue;
            Rat f = a(r, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(r, j) -= f * a(lead, j);
        }
        out.pivots.push_back(col);
        ++lead;
    }
    out.rank = lead;
    return out;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

std::vector<RatVec> Subspace::basis_vectors() const
{
    std::vector<RatVec> out;
    out.reserve(dim());
    for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vec(r));
    return out;
}

RatVec Subspace::reduce(std::span<const Rat> x) const
{
    require(x.size() == ambient_, "subspace reduce: length mismatch");
    RatVec r(x.begin(), x.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Rat f = r[pivots_[i]];
        if (sgn(f) == 0) continue;
        auto b = basis_.row(i);
        for (std::size_t j = pivots_[i]; j < ambient_; ++j) r[j] -= f * b[j];
    }
    return r;
}

Subspace row_space(const RatMat& m)
{
    auto red = rref_canonical(m);
    Subspace s(m.cols());
    s.basis_ = RatMat(red.rank, m.cols());
    for (std::size_t r = 0; r < red.rank; ++r)
        std::copy(red.rref.row(r).begin(), red.rref.row(r).end(), s.basis_.row(r).begin());
    s.pivots_ = std::move(red.pivots);
    return s;
}

Subspace span(const std::vector<RatVec>& vectors, std::size_t ambient_dim)
{
    return row_space(RatMat::from_rows(vectors, ambient_dim));
}

Subspace full_space(std::size_t ambient_dim) { return row_space(RatMat::identity(ambient_dim)); }

Subspace subspace_sum(const Subspace& u, const Subspace& v)
{
    require(u.ambient_dim() == v.ambient_dim(), "subspace sum: ambient mismatch");
    auto rows = u.basis_vectors();
    auto more = v.basis_vectors();
    rows.insert(rows.end(), more.begin(), more.end());
    return span(rows, u.ambient_dim());
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v)
{
    require(u.ambient_dim() == v.ambient_dim(), "subspace intersect: ambient mismatch");
    const std::size_t n = u.ambient_dim();
    const std::size_t du = u.dim();
    const std::size_t dv = v.dim();
    // (a, b) with sum a_i u_i - sum b_j v_j = 0; the intersection is { sum a_i u_i }.
    RatMat sys(n, du + dv);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < du; ++i) sys(k, i) = u.basis()(i, k);
        for (std::size_t j = 0; j < dv; ++j) sys(k, du + j) = -v.basis()(j, k);
    }
    auto ker = kernel(sys);
    std::vector<RatVec> gens;
    for (std::size_t r = 0; r < ker.dim(); ++r) {
        RatVec x(n);
        for (std::size_t i = 0; i < du; ++i) {
            const Rat& c = ker.basis()(r, i);
            if (sgn(c) == 0) continue;
            for (std::size_t k = 0; k < n; ++k) x[k] += c * u.basis()(i, k);
        }
        gens.push_back(std::move(x));
    }
    return span(gens, n);
}

bool subspace_contains(const Subspace& u, std::span<const Rat> x) { return is_zero(u.reduce(x)); }

bool is_subset(const Subspace& u, const Subspace& v)
{
    require(u.ambient_dim() == v.ambient_dim(), "subset: ambient mismatch");
    for (std::size_t r = 0; r < u.dim(); ++r)
        if (!subspace_contains(v, u.basis().row(r))) return false;
    return true;
}

std::vector<RatVec> complement_basis(const Subspace& sub, const Subspace& super)
{
    std::vector<RatVec> acc = sub.basis_vectors();
    std::vector<RatVec> out;
    Subspace cur = sub;
    for (std::size_t r = 0; r < super.dim(); ++r) {
        auto v = super.basis().row_vec(r);
        if (subspace_contains(cur, v)) continue;
        acc.push_back(v);
        out.push_back(std::move(v));
        cur = span(acc, super.ambient_dim());
    }
    return out;
}

Subspace kernel(const RatMat& a)
{
    auto red = rref_canonical(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : red.pivots) is_pivot[p] = true;
    std::vector<RatVec> gens;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        RatVec x(n);
        x[free] = 1;
        for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = -red.rref(i, free);
        gens.push_back(std::move(x));
    }
    return span(gens, n);
}

std::optional<Solution> solve_linear(const RatMat& a, std::span<const Rat> b)
{
    require(a.rows() == b.size(), "solve_linear: row count differs from rhs length");
    const std::size_t n = a.cols();
    RatMat aug(a.rows(), n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n) = b[r];
    }
    auto red = rref_canonical(aug);
    if (!red.pivots.empty() && red.pivots.back() == n) return std::nullopt;
    RatVec x(n);
    for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.rref(i, n);
    return Solution{std::move(x), kernel(a)};
}

}  // namespace exactla
}  // namespace omnilie
