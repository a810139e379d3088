#include "omnilie/omni.hpp"

#include <vector>

namespace omnilie::omni {

namespace {

void same_dim(const OmniElement& x, const OmniElement& y)
{
    if (x.n() != y.n()) throw DimensionError("omni: dimension tags differ");
}

const Rat kHalf(1, 2);
const Rat kThird(1, 3);

}  // namespace

OmniElement::OmniElement(RatMat a, RatVec v) : a_(std::move(a)), v_(std::move(v))
{
    if (!a_.is_square() || a_.rows() != v_.size())
        throw DimensionError("OmniElement: matrix must be n x n with n = length of v");
}

OmniElement OmniElement::matrix(RatMat a)
{
    const std::size_t n = a.rows();
    return {std::move(a), RatVec(n)};
}

OmniElement OmniElement::vector(RatVec v)
{
    const std::size_t n = v.size();
    return {RatMat(n, n), std::move(v)};
}

OmniElement OmniElement::from_flat(std::size_t n, std::span<const Rat> flat)
{
    if (flat.size() != flat_dim(n)) throw DimensionError("OmniElement::from_flat: wrong length");
    RatMat a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = flat[r * n + c];
    return {std::move(a), RatVec(flat.begin() + n * n, flat.end())};
}

OmniElement OmniElement::basis(std::size_t n, std::size_t k)
{
    return from_flat(n, exactla::unit(flat_dim(n), k));
}

RatVec OmniElement::flat() const
{
    RatVec out(a_.data());
    out.insert(out.end(), v_.begin(), v_.end());
    return out;
}

OmniElement operator+(const OmniElement& x, const OmniElement& y)
{
    same_dim(x, y);
    return {exactla::add(x.a(), y.a()), exactla::add(x.v(), y.v())};
}

OmniElement operator-(const OmniElement& x, const OmniElement& y)
{
    same_dim(x, y);
    return {exactla::sub(x.a(), y.a()), exactla::sub(x.v(), y.v())};
}

OmniElement operator*(const Rat& s, const OmniElement& x)
{
    return {exactla::scale(s, x.a()), exactla::scale(s, x.v())};
}

OmniElement omni_bracket(const OmniElement& e1, const OmniElement& e2)
{
    same_dim(e1, e2);
    auto a = exactla::commutator(e1.a(), e2.a());
    auto v = exactla::scale(kHalf, exactla::sub(exactla::mul(e1.a(), e2.v()), exactla::mul(e2.a(), e1.v())));
    return {std::move(a), std::move(v)};
}

RatVec omni_pairing(const OmniElement& e1, const OmniElement& e2)
{
    same_dim(e1, e2);
    return exactla::scale(kHalf, exactla::add(exactla::mul(e1.a(), e2.v()), exactla::mul(e2.a(), e1.v())));
}

RatVec cartan_form(const OmniElement& e1, const OmniElement& e2, const OmniElement& e3)
{
    same_dim(e1, e2);
    same_dim(e2, e3);
    RatVec t = omni_pairing(omni_bracket(e1, e2), e3);
    t = exactla::add(t, omni_pairing(omni_bracket(e2, e3), e1));
    t = exactla::add(t, omni_pairing(omni_bracket(e3, e1), e2));
    return exactla::scale(kThird, t);
}

OmniElement jacobiator(const OmniElement& e1, const OmniElement& e2, const OmniElement& e3)
{
    same_dim(e1, e2);
    same_dim(e2, e3);
    return omni_bracket(omni_bracket(e1, e2), e3) + omni_bracket(omni_bracket(e2, e3), e1) +
           omni_bracket(omni_bracket(e3, e1), e2);
}

OmniSubspace::OmniSubspace(std::size_t n, exactla::Subspace sub) : n_(n), sub_(std::move(sub))
{
    if (sub_.ambient_dim() != flat_dim(n)) throw DimensionError("OmniSubspace: ambient dimension must be n^2+n");
}

OmniSubspace OmniSubspace::span(std::size_t n, const std::vector<OmniElement>& gens)
{
    std::vector<RatVec> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.n() != n) throw DimensionError("OmniSubspace::span: dimension tag mismatch");
        rows.push_back(g.flat());
    }
    return {n, exactla::span(rows, flat_dim(n))};
}

OmniSubspace OmniSubspace::horizontal(std::size_t n)
{
    std::vector<OmniElement> gens;
    for (std::size_t k = 0; k < n * n; ++k) gens.push_back(OmniElement::basis(n, k));
    return span(n, gens);
}

OmniSubspace OmniSubspace::vertical(std::size_t n)
{
    std::vector<OmniElement> gens;
    for (std::size_t k = n * n; k < flat_dim(n); ++k) gens.push_back(OmniElement::basis(n, k));
    return span(n, gens);
}

OmniSubspace OmniSubspace::whole(std::size_t n) { return {n, exactla::full_space(flat_dim(n))}; }

std::vector<OmniElement> OmniSubspace::basis() const
{
    std::vector<OmniElement> out;
    for (std::size_t r = 0; r < sub_.dim(); ++r) out.push_back(OmniElement::from_flat(n_, sub_.basis().row(r)));
    return out;
}

bool OmniSubspace::contains(const OmniElement& e) const
{
    if (e.n() != n_) throw DimensionError("OmniSubspace::contains: dimension tag mismatch");
    return exactla::subspace_contains(sub_, e.flat());
}

OmniElement random_element(std::size_t n, Rng& rng)
{
    RatVec flat(flat_dim(n));
    for (auto& x : flat) x = rng.small_rat();
    return OmniElement::from_flat(n, flat);
}

AnomalySweep anomaly_sweep(std::size_t n, std::size_t trials, std::uint64_t seed, Exec exec)
{
    // 0 = pass, 1 = fail; failures are re-derived afterwards to keep the loop body small.
    std::vector<char> ok(trials, 0);
    auto body = [&](std::size_t i) {
        Rng rng{seed, n, i};
        auto e1 = random_element(n, rng);
        auto e2 = random_element(n, rng);
        auto e3 = random_element(n, rng);
        ok[i] = jacobiator(e1, e2, e3) == OmniElement::vector(cartan_form(e1, e2, e3));
    };
    const auto count = static_cast<std::int64_t>(trials);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
    } else {
        for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
    }

    AnomalySweep out{n, trials, 0, std::nullopt};
    for (std::size_t i = 0; i < trials; ++i) {
        if (ok[i]) {
            ++out.passed;
        } else if (!out.first_failure) {
            Rng rng{seed, n, i};
            auto e1 = random_element(n, rng);
            auto e2 = random_element(n, rng);
            auto e3 = random_element(n, rng);
            out.first_failure = AnomalyFailure{i, e1, e2, e3, jacobiator(e1, e2, e3), cartan_form(e1, e2, e3)};
        }
    }
    return out;
}

}  // namespace omnilie::omni
