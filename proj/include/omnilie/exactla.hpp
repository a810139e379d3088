#pragma once

// Exact rational linear algebra: dense matrices, RREF, solving, and a
// canonical subspace type. No floating point anywhere.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace omnilie {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parses "p/q" or "p" and canonicalizes. Throws std::invalid_argument.
Rat parse_rat(std::string_view text);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

namespace exactla {

RatVec zeros(std::size_t n);
RatVec unit(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rat> v);
RatVec add(std::span<const Rat> a, std::span<const Rat> b);
RatVec sub(std::span<const Rat> a, std::span<const Rat> b);
RatVec scale(const Rat& s, std::span<const Rat> a);
Rat dot(std::span<const Rat> a, std::span<const Rat> b);

class RatMat {
public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Row-major construction; every row must have the same length.
    static RatMat from_rows(const std::vector<RatVec>& rows, std::size_t cols);
    static RatMat identity(std::size_t n);
    /// Elementary matrix E_{rc} (0-based), n x n.
    static RatMat elementary(std::size_t n, std::size_t r, std::size_t c);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rat> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Rat> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    RatVec row_vec(std::size_t r) const;
    RatVec col_vec(std::size_t c) const;
    /// Row-major flattening.
    const std::vector<Rat>& data() const { return data_; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    friend bool operator==(const RatMat& a, const RatMat& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

RatMat add(const RatMat& a, const RatMat& b);
RatMat sub(const RatMat& a, const RatMat& b);
RatMat scale(const Rat& s, const RatMat& a);
RatMat mul(const RatMat& a, const RatMat& b);
RatVec mul(const RatMat& a, std::span<const Rat> v);
RatMat transpose(const RatMat& a);
/// ab - ba
RatMat commutator(const RatMat& a, const RatMat& b);

struct RrefResult {
    RatMat rref;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Unique reduced row-echelon form. Zero rows are kept at the bottom.
RrefResult rref_canonical(const RatMat& m);

class Subspace {
public:
    /// Zero subspace of the given ambient dimension.
    explicit Subspace(std::size_t ambient_dim = 0);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    /// Nonzero RREF rows with strictly increasing pivots.
    const RatMat& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<RatVec> basis_vectors() const;

    /// Residual of x after elimination against the basis; zero iff x is in the span.
    RatVec reduce(std::span<const Rat> x) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;
    friend auto operator<=>(const Subspace& a, const Subspace& b) {
        if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
        if (auto c = a.basis_.rows() <=> b.basis_.rows(); c != 0) return c;
        const auto& x = a.basis_.data();
        const auto& y = b.basis_.data();
        for (std::size_t i = 0; i < x.size(); ++i) {
            int s = cmp(x[i], y[i]);
            if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

private:
    friend Subspace span(const std::vector<RatVec>& vectors, std::size_t ambient_dim);
    friend Subspace row_space(const RatMat& m);

    std::size_t ambient_ = 0;
    RatMat basis_;
    std::vector<std::size_t> pivots_;
};

Subspace span(const std::vector<RatVec>& vectors, std::size_t ambient_dim);
Subspace row_space(const RatMat& m);
Subspace full_space(std::size_t ambient_dim);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
bool subspace_contains(const Subspace& u, std::span<const Rat> x);
bool is_subset(const Subspace& u, const Subspace& v);
/// Vectors from `super`'s basis extending `sub` to a basis of `super`.
/// Requires sub ⊆ super.
std::vector<RatVec> complement_basis(const Subspace& sub, const Subspace& super);

/// Null space {x : a x = 0}.
Subspace kernel(const RatMat& a);

struct Solution {
    RatVec particular;
    Subspace kernel;
};

/// All x with a x = b, or nullopt when inconsistent.
std::optional<Solution> solve_linear(const RatMat& a, std::span<const Rat> b);

}  // namespace exactla
}  // namespace omnilie
