#ifndef CURVEBOUND_JSON_IO_HPP
#define CURVEBOUND_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "curvebound/bounds.hpp"
#include "curvebound/covers.hpp"
#include "curvebound/curves.hpp"
#include "curvebound/exclusion.hpp"
#include "curvebound/weilsearch.hpp"
#include "curvebound/zeta.hpp"

namespace curvebound {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal
/// strings. Rationals are always strings ("p/q" or "p").
Json to_json(const Integer& x);
Json to_json(const Rational& x);
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);

Json to_json(const std::vector<Integer>& xs);
std::vector<Integer> integers_from_json(const Json& j);

/// Coefficient list, constant term first.
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

/// {"q":..,"N":[..]}
Json to_json(const PointCountVector& v);
PointCountVector counts_from_json(const Json& j);

/// {"q","g","L","h","N","a"}
Json to_json(const WeilData& wd);
WeilData weil_data_from_json(const Json& j);

/// [[coefficients, multiplicity], ...]
Json to_json(const Factorization& f);
Factorization factorization_from_json(const Json& j);

Json to_json(const ExclusionVerdict& v);
Json to_json(const SearchResult& r);
Json to_json(const GaloisSplit& s);
Json to_json(const CoveringCase& c);
Json to_json(const std::vector<CoveringCase>& cases);

Json to_json(const BoundCertificate& c);
/// Rebuilds the certificate through bound_from_u and checks the stored
/// bound and floor; throws std::invalid_argument on mismatch.
BoundCertificate certificate_from_json(const Json& j);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace curvebound

#endif
