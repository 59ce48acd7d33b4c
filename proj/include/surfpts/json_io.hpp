#pragma once

#include "surfpts/abgroup.hpp"
#include "surfpts/classify.hpp"
#include "surfpts/lattice.hpp"
#include "surfpts/matrix.hpp"
#include "surfpts/polygon.hpp"
#include "surfpts/polynomial.hpp"

#include <json.hpp>

namespace surfpts {

using Json = nlohmann::ordered_json;

/// A number when it fits in 64 bits, otherwise a decimal string.
Json integer_json(const Integer& n);
Integer integer_from_json(const Json& j);

Json coefficients_json(const IntPolynomial& f);  // descending
IntPolynomial polynomial_from_json(const Json& j);

Json hodge_json(const HodgeVector& hv);
/// {"invariants": [...], "primary": {"<ell>": [...]}}; invariants padded to 4 slots.
Json group_json(const FiniteAbelianGroup& G);
FiniteAbelianGroup group_from_json(const Json& j);

Json matrix_json(const IntMatrix& m);  // row-major
IntMatrix matrix_from_json(const Json& j);

Json polygon_json(const Polygon& p);
Json shape_json(const IsogenyShape& shape);
Json weil_json(const WeilPolynomial& f);

Json classification_json(const WeilPolynomial& f, const ClassificationResult& r);
Json decision_json(const Decision& d);
Json oracle_json(const OracleReport& r);

}  // namespace surfpts
