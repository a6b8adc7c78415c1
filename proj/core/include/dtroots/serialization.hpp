#pragma once

#include "dtroots/dataset.hpp"
#include "dtroots/homology.hpp"
#include "dtroots/max_degree.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace dtroots {

using Json = nlohmann::ordered_json;

/// {"type","n","g0","a","b","cones":[{"c","ni"}]}
Json to_json(const DataSet& ds);
/// Throws InvalidInput on missing or mistyped fields.
DataSet dataset_from_json(const Json& j);

std::string_view to_string(DegreeKind kind) noexcept;
/// Exact(N), Bounds(lo, hi) or NoRoot.
std::string describe(const MaxDegreeResult& result);
Json to_json(const MaxDegreeResult& result);

/// Rows as binary strings.
Json to_json(const F2Matrix& m);
F2Matrix matrix_from_json(const Json& j);
/// One line of 0/1 characters per row.
std::string to_plain(const F2Matrix& m);

/// Columns g, N, case_id, witness.
Json to_json(const std::vector<DegreeRow>& rows);
std::string to_csv(const std::vector<DegreeRow>& rows);

Json to_json(const CaseBCensus& census);

} // namespace dtroots
