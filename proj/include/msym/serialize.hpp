#pragma once

/**
 * @file serialize.hpp
 * @brief JSON forms of labels, polynomials and expansions.
 *
 * Coefficients are written in the canonical text form of QtRational, so a
 * value read back compares equal to the one written.
 */

#include "msym/kernels.hpp"
#include "msym/structure.hpp"

#include "json.hpp"

namespace msym {

using Json = nlohmann::ordered_json;

/// {"a": [...], "lambda": [...]}
Json to_json(const MPartition& p);
MPartition mpartition_from_json(const Json& j);

/// {"nvars": N, "terms": [{"exponent": [...], "coeff": "..."}]}
Json to_json(const MultiPoly& f);
MultiPoly poly_from_json(const Json& j);

/// {"basis": "...", "m": m, "degree": d, "terms": [{"label": {...}, "coeff": "..."}]}
Json to_json(const Expansion& e);
Expansion expansion_from_json(const Json& j);

/// {"nx": .., "ny": .., "terms": [{"x": [...], "y": [...], "coeff": "..."}]}
Json to_json(const BiPoly& k);

}  // namespace msym
