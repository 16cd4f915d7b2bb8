#pragma once

// JSON forms of the domain types. Scalars are exact "p/q" strings; indices are
// basis positions (labels are also accepted on input).

#include "superbialg/double.hpp"

#include <json.hpp>

namespace superbialg {

using Json = nlohmann::ordered_json;

/// Parses text, throwing ParseError with line and column on malformed input.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

Json to_json(const GradedBasis& basis);
GradedBasis basis_from_json(const Json& j);

Json to_json(const Element& x);
Json to_json(const Tensor2& t);
/// `fallback` is used when the object carries no basis of its own.
Element element_from_json(const Json& j, const GradedBasis& fallback = {});
Tensor2 tensor2_from_json(const Json& j, const GradedBasis& fallback = {});

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const Superalgebra& g);
Superalgebra superalgebra_from_json(const Json& j);

Json to_json(const Cochain& c);
Cochain cochain_from_json(const Json& j, const GradedBasis& fallback = {});

Json to_json(const Bialgebra& b);
Bialgebra bialgebra_from_json(const Json& j);

Json to_json(const LinearMap& m);
LinearMap linear_map_from_json(const Json& j);

Json to_json(const ManinTriple& t);
ManinTriple manin_triple_from_json(const Json& j);

Json to_json(const DoubleAlgebra& d);
DoubleAlgebra double_from_json(const Json& j);

Json to_json(const VerificationReport& r);

}  // namespace superbialg
