#pragma once

#include <string>
#include <vector>

#include "lperiod/cuspidal_datum.hpp"
#include "lperiod/fixed_points.hpp"
#include "lperiod/grassmannian_oracle.hpp"
#include "lperiod/period_formula.hpp"

namespace lperiod {

// String-based JSON boundary of the library; the underlying JSON library is
// an implementation detail of the sources.  All documents carry a
// schema_version field (currently 1).  Parse errors throw DomainError with
// the path of the offending field.
inline constexpr int kSchemaVersion = 1;

// {"schema_version":1, "parts":[...], "labels":[...], "dual":{...}, "n":..., "m":...}
// (schema_version and dual optional on input; subsets/permutations 1-based on the wire)
CuspidalDatum datum_from_json_text(const std::string& text);
std::string datum_to_json_text(const CuspidalDatum& datum);

// {"I":[...], "t":..., "sigma":[...]} with 1-based entries.
std::string fixed_point_to_json_text(const FixedPoint& fp);

// Wrapper document for a whole fixed-point listing.
std::string fixed_points_to_json_text(const CuspidalDatum& datum,
                                      const std::vector<FixedPoint>& fps);

// {"schema_version":1, "group":"cyclic:r"|"product:r1,r2", "q":..., "n":...,
//  "blocks":[{"tag":...,"dim":...,"character":[...]}]}
RepSpec rep_spec_from_json_text(const std::string& text);
std::string rep_spec_to_json_text(const RepSpec& spec);

std::string finiteness_report_to_json_text(const RepSpec& spec, const FinitenessReport& report);

}  // namespace lperiod
