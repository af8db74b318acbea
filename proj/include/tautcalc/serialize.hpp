#pragma once

#include "tautcalc/hypersurface.hpp"
#include "tautcalc/qmatrix.hpp"
#include "tautcalc/report.hpp"
#include "tautcalc/taut_ring.hpp"

namespace tautcalc {

/// {"arity": m, "terms": {"h1^2*o2": "1/3", ...}} with keys in byte order
/// and coefficients as "p/q".
Json to_json(const TautClass& t);
/// Inverse of to_json; throws std::invalid_argument on unknown monomial
/// syntax or a non-normal monomial.
TautClass tautclass_from_json(PresentationPtr p, const Json& j);

Json to_json(const HypersurfaceContext& ctx);
/// Rows of "p/q" strings.
Json to_json(const QMatrix& m);

}  // namespace tautcalc
