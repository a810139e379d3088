#pragma once

// JSON encodings shared by fixtures, the CLI and reports. Rationals are
// strings "p/q" (or "p"), matrices are arrays of rows, structure-constant
// style tensors are sparse records with 1-based indices.

#include "omnilie/calgebra.hpp"
#include "omnilie/courant.hpp"
#include "omnilie/liealg.hpp"
#include "omnilie/omni.hpp"

#include "json.hpp"

#include <stdexcept>

namespace omnilie::io {

using json = nlohmann::json;

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const Rat& r);
Rat rat_from_json(const json& j);
json to_json(const RatVec& v);
RatVec vec_from_json(const json& j);
json to_json(const exactla::RatMat& m);
exactla::RatMat mat_from_json(const json& j);

/// {"a": matrix, "v": vector}
json to_json(const omni::OmniElement& e);
omni::OmniElement element_from_json(const json& j);

/// {"n": N, "basis": [element, ...]}
json to_json(const omni::OmniSubspace& f);
omni::OmniSubspace subspace_from_json(const json& j);

/// {"n": N, "constants": [{"i","j","k","val"}, ...]}; omitted entries are
/// zero. A bare array of records is also accepted (n = largest index).
json to_json(const liealg::BilinearOp& b);
liealg::BilinearOp bilinear_from_json(const json& j);

/// {"dimA", "dimE", "mulA", "act", "pairing", "bracket": sparse records,
///  "rho": [matrix, ...]}
json to_json(const calgebra::CAlgebraInstance& c);
calgebra::CAlgebraInstance instance_from_json(const json& j);

/// [{"coeff": "p/q", "exps": [k1, ..., kn]}, ...]
json to_json(const poly::Poly& p);
poly::Poly poly_from_json(const json& j, std::size_t nvars);

/// {"xi": [poly...], "theta": [poly...]}
json to_json(const courant::Section& s);
courant::Section section_from_json(const json& j, std::size_t nvars);

/// {"kind": "bivector" | "two_form", "nvars": n,
///  "entries": [{"i", "j", "poly"}]} with i < j (1-based; upper triangle)
/// {"kind": "foliation", "nvars": n, "basis": [vector, ...]}
json to_json(const courant::DiracCandidate& c);
courant::DiracCandidate candidate_from_json(const json& j);

/// Reads and parses a JSON file. Throws FormatError.
json read_json_file(const std::string& path);

}  // namespace omnilie::io
