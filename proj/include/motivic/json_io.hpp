#pragma once

#include <string>

#include <json.hpp>

#include "motivic/curves.hpp"
#include "motivic/gclass.hpp"
#include "motivic/genfun.hpp"
#include "motivic/lifting.hpp"
#include "motivic/powstruct.hpp"
#include "motivic/series.hpp"
#include "motivic/strata.hpp"

// JSON forms of the library types. Readers throw Error(InvalidInput) on
// malformed documents; writers always emit canonical forms.
namespace motivic::io {

using json = nlohmann::json;

json to_json(const IntPoly& p);
/// {"num": [["c", e], ...], "den": [...]}.
json to_json(const GClass& g);
/// Also accepts a class expression string such as "L^2 - 1" or an integer.
GClass class_from_json(const json& j);

json coeff_to_json(const Integer& c);
json coeff_to_json(const Rational& c);
json coeff_to_json(const Laurent& c);
json coeff_to_json(const GClass& c);

Integer integer_from_json(const json& j);
/// "p/q", ["p", "q"] or an integer.
Rational rational_from_json(const json& j);

/// {"vars": [...], "trunc": N, "terms": [[[e1, ...], coeff], ...]}.
template <class C>
json to_json(const TruncSeries<C>& s) {
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back(json::array({e, coeff_to_json(c)}));
  return {{"vars", s.vars()}, {"trunc", s.trunc()}, {"terms", terms}};
}

IntegerSeries integer_series_from_json(const json& j);
RationalSeries rational_series_from_json(const json& j);
/// Also accepts a string expression in t and L, truncated at `default_trunc`.
ClassSeries class_series_from_json(const json& j, int default_trunc = -1);

json to_json(const Branch& b);
Branch branch_from_json(const json& j);
json to_json(const CurveGerm& g);
CurveGerm germ_from_json(const json& j);
/// {"terms": [[num, den, i, j], ...]}; a string is parsed as an expression.
json to_json(const PlanePoly& f);
PlanePoly poly_from_json(const json& j);

json to_json(const JetStratum& s);
JetStratum stratum_from_json(const json& j);

/// [{"value": series, "weight": w}, ...]; a value may also be
/// {"coeff": class, "exp": k} for the monomial coeff * t^k.
json to_json(const MeasuredPartition& p);
MeasuredPartition partition_from_json(const json& j, int trunc);

json to_json(const ResolutionData& r);
ResolutionData resolution_from_json(const json& j);

json to_json(const GermInvariants& inv);
json to_json(const LiftReport& r);
json to_json(const Check& c);
json to_json(const std::vector<Check>& checks);

json error_json(const Error& e);

/// Reads and parses a file; InvalidInput when unreadable or malformed.
json read_file(const std::string& path);

}  // namespace motivic::io
