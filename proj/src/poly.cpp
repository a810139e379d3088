#include "omnilie/poly.hpp"

#include <functional>

namespace omnilie::poly {

Poly Poly::constant(std::size_t nvars, const Rat& c)
{
    Poly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Poly Poly::var(std::size_t nvars, std::size_t i)
{
    if (i >= nvars) throw DimensionError("Poly::var: index out of range");
    Monomial m(nvars, 0);
    m[i] = 1;
    Poly p(nvars);
    p.add_term(m, 1);
    return p;
}

Poly Poly::term(const Rat& c, Monomial exps)
{
    Poly p(exps.size());
    p.add_term(exps, c);
    return p;
}

int Poly::degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (auto e : m) s += static_cast<int>(e);
        d = std::max(d, s);
    }
    return d;
}

Rat Poly::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_term() const { return coeff(Monomial(nvars_, 0)); }

Poly Poly::derivative(std::size_t i) const
{
    if (i >= nvars_) throw DimensionError("Poly::derivative: index out of range");
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Monomial d = m;
        --d[i];
        out.add_term(d, c * m[i]);
    }
    return out;
}

void Poly::add_term(const Monomial& m, const Rat& c)
{
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void Poly::check_vars(const Poly& o) const
{
    if (o.nvars_ != nvars_) throw DimensionError("Poly: variable counts differ");
}

Poly& Poly::operator+=(const Poly& o)
{
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rat& s)
{
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    a.check_vars(b);
    Poly out(a.nvars_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    return out;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, std::size_t bound)
{
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    for (std::size_t deg = 0; deg <= bound; ++deg) {
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
            if (i + 1 == nvars) {
                cur[i] = static_cast<std::uint32_t>(left);
                out.push_back(cur);
                return;
            }
            for (std::size_t e = left + 1; e-- > 0;) {
                cur[i] = static_cast<std::uint32_t>(e);
                rec(i + 1, left - e);
            }
        };
        if (nvars == 0) {
            if (deg == 0) out.push_back(cur);
            continue;
        }
        rec(0, deg);
    }
    return out;
}

Poly random_poly(std::size_t nvars, std::size_t degree_bound, Rng& rng)
{
    Poly p(nvars);
    for (const auto& m : monomials_up_to(nvars, degree_bound))
        if (rng.coin()) p += Poly::term(rng.small_rat(), m);
    return p;
}

}  // namespace omnilie::poly
