#ifndef CERING_REPORT_HPP
#define CERING_REPORT_HPP

#include <json.hpp>

#include "cering/diffmat.hpp"
#include "cering/predicates.hpp"

namespace cering {

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

Json vec_to_json(const Algebra& a, const Vec& v);
Json subspace_to_json(const Subspace& s);
Json verdict_to_json(const Algebra& a, const Verdict& v);
Json algebra_summary_json(const Algebra& a);

/// Self-describing algebra spec document: field, dim, basis, unit,
/// table of [i, j, k, coefficient] quadruples (0-based, coefficients in
/// the textual scalar syntax).
Json algebra_to_spec_json(const Algebra& a);
AlgebraPtr algebra_from_spec_json(const Json& j, const std::string& name);

/// Parses a spec document from text; parse errors carry line numbers.
AlgebraPtr algebra_from_spec_text(const std::string& text, const std::string& name);

Json structure_to_json(const Algebra& a, const StructureReport& rep);
Json diffmat_report_to_json(const DiffmatReport& rep);

}  // namespace cering

#endif
