#include "omnilie/serialize.hpp"

#include <fstream>
#include <sstream>

namespace omnilie::io {

namespace {

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t natural(const json& j, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0) throw FormatError(std::string(what) + " must be a natural number");
    return j.get<std::size_t>();
}

// 1-based index record value -> 0-based, range-checked.
std::size_t index(const json& rec, const char* key, std::size_t bound)
{
    std::size_t v = natural(field(rec, key), key);
    if (v < 1 || v > bound) throw FormatError(std::string("index '") + key + "' out of range");
    return v - 1;
}

json sparse_records(const calgebra::Tensor3& t)
{
    json out = json::array();
    for (std::size_t i = 0; i < t.dim0(); ++i)
        for (std::size_t j = 0; j < t.dim1(); ++j)
            for (std::size_t k = 0; k < t.dim2(); ++k)
                if (sgn(t.at(i, j, k)) != 0)
                    out.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"val", to_json(t.at(i, j, k))}});
    return out;
}

calgebra::Tensor3 sparse_tensor(const json& j, std::size_t d0, std::size_t d1, std::size_t d2)
{
    calgebra::Tensor3 t(d0, d1, d2);
    if (!j.is_array()) throw FormatError("sparse tensor must be an array of records");
    for (const auto& rec : j)
        t.at(index(rec, "i", d0), index(rec, "j", d1), index(rec, "k", d2)) += rat_from_json(field(rec, "val"));
    return t;
}

json poly_matrix_entries(const courant::PolyMatrix& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = i + 1; j < m.n; ++j)
            if (!m.at(i, j).is_zero()) out.push_back({{"i", i + 1}, {"j", j + 1}, {"poly", to_json(m.at(i, j))}});
    return out;
}

courant::PolyMatrix poly_matrix_from_entries(const json& entries, std::size_t n)
{
    auto m = courant::PolyMatrix::zero(n);
    if (!entries.is_array()) throw FormatError("entries must be an array");
    for (const auto& rec : entries) {
        auto i = index(rec, "i", n);
        auto j = index(rec, "j", n);
        if (i >= j) throw FormatError("entries must list the upper triangle (i < j)");
        auto p = poly_from_json(field(rec, "poly"), n);
        m.at(i, j) += p;
        m.at(j, i) -= p;
    }
    return m;
}

}  // namespace

json to_json(const Rat& r) { return omnilie::to_string(r); }

Rat rat_from_json(const json& j)
{
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
    }
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw FormatError("rational must be a \"p/q\" string or an integer");
}

json to_json(const RatVec& v)
{
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

RatVec vec_from_json(const json& j)
{
    if (!j.is_array()) throw FormatError("vector must be an array");
    RatVec v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

json to_json(const exactla::RatMat& m)
{
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row_vec(r)));
    return out;
}

exactla::RatMat mat_from_json(const json& j)
{
    if (!j.is_array()) throw FormatError("matrix must be an array of rows");
    std::vector<RatVec> rows;
    for (const auto& r : j) rows.push_back(vec_from_json(r));
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw FormatError("matrix rows have different lengths");
    return exactla::RatMat::from_rows(rows, cols);
}

json to_json(const omni::OmniElement& e) { return {{"a", to_json(e.a())}, {"v", to_json(e.v())}}; }

omni::OmniElement element_from_json(const json& j)
{
    auto a = mat_from_json(field(j, "a"));
    auto v = vec_from_json(field(j, "v"));
    if (a.rows() == 0 && v.size() > 0) a = exactla::RatMat(v.size(), v.size());
    try {
        return {std::move(a), std::move(v)};
    } catch (const DimensionError& e) {
        throw FormatError(e.what());
    }
}

json to_json(const omni::OmniSubspace& f)
{
    json basis = json::array();
    for (const auto& b : f.basis()) basis.push_back(to_json(b));
    return {{"n", f.n()}, {"basis", basis}};
}

omni::OmniSubspace subspace_from_json(const json& j)
{
    const std::size_t n = natural(field(j, "n"), "n");
    if (n == 0) throw FormatError("n must be >= 1");
    std::vector<omni::OmniElement> gens;
    for (const auto& e : field(j, "basis")) {
        gens.push_back(element_from_json(e));
        if (gens.back().n() != n) throw FormatError("basis element has the wrong dimension");
    }
    return omni::OmniSubspace::span(n, gens);
}

json to_json(const liealg::BilinearOp& b)
{
    json recs = json::array();
    for (std::size_t i = 0; i < b.n(); ++i)
        for (std::size_t j = 0; j < b.n(); ++j)
            for (std::size_t k = 0; k < b.n(); ++k)
                if (sgn(b.c(i, j, k)) != 0)
                    recs.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"val", to_json(b.c(i, j, k))}});
    return {{"n", b.n()}, {"constants", recs}};
}

liealg::BilinearOp bilinear_from_json(const json& j)
{
    const json* recs = &j;
    std::size_t n = 0;
    if (j.is_object()) {
        n = natural(field(j, "n"), "n");
        recs = &field(j, "constants");
    } else if (j.is_array()) {
        for (const auto& r : j)
            for (const char* key : {"i", "j", "k"}) n = std::max(n, natural(field(r, key), key));
    } else {
        throw FormatError("structure constants must be an object or an array of records");
    }
    if (n == 0) throw FormatError("structure constants: dimension must be >= 1");
    if (!recs->is_array()) throw FormatError("constants must be an array of records");
    liealg::BilinearOp b(n);
    for (const auto& r : *recs) b.c(index(r, "i", n), index(r, "j", n), index(r, "k", n)) += rat_from_json(field(r, "val"));
    return b;
}

json to_json(const calgebra::CAlgebraInstance& c)
{
    json rho = json::array();
    for (const auto& r : c.rho) rho.push_back(to_json(r));
    return {{"dimA", c.dim_a},
            {"dimE", c.dim_e},
            {"mulA", sparse_records(c.mul_a)},
            {"act", sparse_records(c.act)},
            {"pairing", sparse_records(c.pairing)},
            {"bracket", sparse_records(c.bracket)},
            {"rho", rho}};
}

calgebra::CAlgebraInstance instance_from_json(const json& j)
{
    calgebra::CAlgebraInstance c;
    c.dim_a = natural(field(j, "dimA"), "dimA");
    c.dim_e = natural(field(j, "dimE"), "dimE");
    c.mul_a = sparse_tensor(field(j, "mulA"), c.dim_a, c.dim_a, c.dim_a);
    c.act = sparse_tensor(field(j, "act"), c.dim_a, c.dim_e, c.dim_e);
    c.pairing = sparse_tensor(field(j, "pairing"), c.dim_e, c.dim_e, c.dim_a);
    c.bracket = sparse_tensor(field(j, "bracket"), c.dim_e, c.dim_e, c.dim_e);
    const auto& rho = field(j, "rho");
    if (!rho.is_array()) throw FormatError("rho must be an array of matrices");
    for (const auto& m : rho) {
        auto r = mat_from_json(m);
        if (r.rows() == 0 && c.dim_a > 0) r = exactla::RatMat(c.dim_a, c.dim_a);
        c.rho.push_back(std::move(r));
    }
    try {
        calgebra::check_shapes(c);
    } catch (const DimensionError& e) {
        throw FormatError(e.what());
    }
    return c;
}

json to_json(const poly::Poly& p)
{
    json out = json::array();
    for (const auto& [m, c] : p.terms()) out.push_back({{"coeff", to_json(c)}, {"exps", m}});
    return out;
}

poly::Poly poly_from_json(const json& j, std::size_t nvars)
{
    if (!j.is_array()) throw FormatError("polynomial must be an array of terms");
    poly::Poly p(nvars);
    for (const auto& t : j) {
        const auto& exps = field(t, "exps");
        if (!exps.is_array() || exps.size() != nvars) throw FormatError("term exponent vector has the wrong length");
        poly::Monomial m;
        for (const auto& e : exps) m.push_back(static_cast<std::uint32_t>(natural(e, "exponent")));
        p += poly::Poly::term(rat_from_json(field(t, "coeff")), m);
    }
    return p;
}

json to_json(const courant::Section& s)
{
    json xi = json::array(), theta = json::array();
    for (const auto& p : s.xi.c) xi.push_back(to_json(p));
    for (const auto& p : s.theta.c) theta.push_back(to_json(p));
    return {{"xi", xi}, {"theta", theta}};
}

courant::Section section_from_json(const json& j, std::size_t nvars)
{
    auto s = courant::Section::zero(nvars);
    const auto& xi = field(j, "xi");
    const auto& theta = field(j, "theta");
    if (!xi.is_array() || !theta.is_array() || xi.size() != nvars || theta.size() != nvars)
        throw FormatError("section components must have nvars entries");
    for (std::size_t i = 0; i < nvars; ++i) {
        s.xi.c[i] = poly_from_json(xi[i], nvars);
        s.theta.c[i] = poly_from_json(theta[i], nvars);
    }
    return s;
}

json to_json(const courant::DiracCandidate& c)
{
    if (const auto* pi = std::get_if<courant::Bivector>(&c))
        return {{"kind", "bivector"}, {"nvars", pi->m.n}, {"entries", poly_matrix_entries(pi->m)}};
    if (const auto* om = std::get_if<courant::TwoForm>(&c))
        return {{"kind", "two_form"}, {"nvars", om->m.n}, {"entries", poly_matrix_entries(om->m)}};
    const auto& fol = std::get<courant::Foliation>(c);
    json basis = json::array();
    for (const auto& v : fol.b.basis_vectors()) basis.push_back(to_json(v));
    return {{"kind", "foliation"}, {"nvars", fol.b.ambient_dim()}, {"basis", basis}};
}

courant::DiracCandidate candidate_from_json(const json& j)
{
    const auto kind = field(j, "kind");
    if (!kind.is_string()) throw FormatError("kind must be a string");
    const std::size_t n = natural(field(j, "nvars"), "nvars");
    if (n == 0) throw FormatError("nvars must be >= 1");
    const auto k = kind.get<std::string>();
    if (k == "bivector") return courant::Bivector{poly_matrix_from_entries(field(j, "entries"), n)};
    if (k == "two_form") return courant::TwoForm{poly_matrix_from_entries(field(j, "entries"), n)};
    if (k == "foliation") {
        std::vector<RatVec> vs;
        for (const auto& v : field(j, "basis")) {
            vs.push_back(vec_from_json(v));
            if (vs.back().size() != n) throw FormatError("foliation basis vector has the wrong length");
        }
        return courant::Foliation{exactla::span(vs, n)};
    }
    throw FormatError("unknown candidate kind '" + k + "'");
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError("'" + path + "': " + e.what());
    }
}

}  // namespace omnilie::io
