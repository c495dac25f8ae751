#pragma once

// JSON encodings of the exact and numeric data types. Field elements are
// arrays of six "p/q" strings in the basis order [1, a, a^2, zeta, zeta a,
// zeta a^2]; tau is carried once per document. Indices are 1-based on disk.

#include "waring/hesse.hpp"
#include "waring/numsearch.hpp"
#include "waring/symmetry.hpp"

#include <json.hpp>
#include <stdexcept>
#include <string>

namespace waring {

using json = nlohmann::json;

class JsonParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const FieldElem& x);
FieldElem field_elem_from_json(const json& j, Field field);

json to_json(const SquareMatrix& m);
SquareMatrix matrix_from_json(const json& j, Field field);

json to_json(const CubicForm& f);
CubicForm cubic_form_from_json(const json& j, Field field);

json to_json(const WaringDecomposition& d);
WaringDecomposition decomposition_from_json(const json& j);

json to_json(const VerificationReport& r);
VerificationReport verification_report_from_json(const json& j);

json to_json(const SymOp& op);
SymOp symop_from_json(const json& j, Field field);

json to_json(const AffineMap& a);
AffineMap affine_map_from_json(const json& j);

json to_json(const GroupElement& e);
GroupElement group_element_from_json(const json& j, Field field);
json to_json(const GroupReport& g, bool include_elements = true);
GroupReport group_report_from_json(const json& j, Field field);

json to_json(const Configuration& c);
/// Lines are recomputed from the points when absent.
Configuration configuration_from_json(const json& j, Field field);

json to_json(const NumericCandidate& c);
NumericCandidate candidate_from_json(const json& j);
json to_json(const SearchResult& r);
SearchResult search_result_from_json(const json& j);

/// Reads and parses a JSON file. Throws JsonParseError.
json read_json_file(const std::string& path);

}  // namespace waring
