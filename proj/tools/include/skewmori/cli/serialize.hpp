#pragma once

// JSON encodings of the library types. Integers are emitted as JSON numbers
// when they fit in 64 bits and as decimal strings otherwise; non-integral
// rationals are "p/q" strings.

#include <json.hpp>

#include "skewmori/chambers.hpp"
#include "skewmori/cones.hpp"
#include "skewmori/exact.hpp"
#include "skewmori/geometry.hpp"
#include "skewmori/pfaffian.hpp"
#include "skewmori/polynomial.hpp"

namespace skewmori::cli {

using Json = nlohmann::ordered_json;

Json to_json(const mpz_class& x);
Json to_json(const mpq_class& x);
Json to_json(const IntVector& v);
Json to_json(const ExactVector& v);
mpz_class integer_from_json(const Json& j);
mpq_class rational_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);

// {"rank", "rays", "facets"} plus "lineality" / "equations" when nonempty.
Json to_json(const Cone& c);
Cone cone_from_json(const Json& j);

// {"vars": ["z01", ...], "terms": [{"exp": [...], "coef": c}, ...]}
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {"size": m, "upper": [[z01, z02, ...], [z12, ...], ...]}
Json to_json(const RationalSkewMatrix& z);
RationalSkewMatrix skew_from_json(const Json& j);

Json to_json(const DivisorClass& d);
Json to_json(const CurveClass& c);

Json to_json(const ForcedLabel& label);
ForcedLabel label_from_json(const Json& j);

// {"n", "rank", "chambers": [{"rays", "forced", "region", "zone"}],
//  "regions": [{"forced", "chambers"}], "walls": [{"chambers", "rays"}]}
Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

}  // namespace skewmori::cli
