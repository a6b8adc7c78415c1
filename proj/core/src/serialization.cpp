#include "dtroots/serialization.hpp"

#include "dtroots/error.hpp"

namespace dtroots {

Json to_json(const DataSet& ds)
{
    Json cones = Json::array();
    for (const auto& cone : ds.cones())
        cones.push_back({{"c", cone.c}, {"ni", cone.order}});
    return {{"type", std::string(1, to_char(ds.type()))},
            {"n", ds.degree()},
            {"g0", ds.base_genus()},
            {"a", ds.a()},
            {"b", ds.b()},
            {"cones", std::move(cones)}};
}

DataSet dataset_from_json(const Json& j)
{
    try {
        auto type = parse_twist_type(j.at("type").get<std::string>());
        if (!type)
            throw InvalidInput("unknown data set type " + j.at("type").dump());
        std::vector<ConePoint> cones;
        for (const auto& cone : j.at("cones"))
            cones.push_back({cone.at("ni").get<Int>(), cone.at("c").get<Int>()});
        return DataSet(*type, j.at("n").get<Int>(), j.at("g0").get<Int>(), j.at("a").get<Int>(),
                       j.at("b").get<Int>(), std::move(cones));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed data set JSON: ") + e.what());
    }
}

std::string_view to_string(DegreeKind kind) noexcept
{
    switch (kind) {
    case DegreeKind::exact:
        return "exact";
    case DegreeKind::bounds:
        return "bounds";
    case DegreeKind::no_root:
        break;
    }
    return "no_root";
}

std::string describe(const MaxDegreeResult& result)
{
    switch (result.kind) {
    case DegreeKind::exact:
        return "Exact(" + std::to_string(result.lower) + ")";
    case DegreeKind::bounds:
        return "Bounds(" + std::to_string(result.lower) + ", " + std::to_string(result.upper) + ")";
    case DegreeKind::no_root:
        break;
    }
    return "NoRoot";
}

Json to_json(const MaxDegreeResult& result)
{
    Json j = {{"kind", std::string(to_string(result.kind))}, {"case_id", result.case_id}};
    if (result.kind == DegreeKind::exact)
        j["N"] = result.lower;
    if (result.kind == DegreeKind::bounds) {
        j["lower"] = result.lower;
        j["upper"] = result.upper;
    }
    j["witness"] = result.witness ? to_json(*result.witness) : Json(nullptr);
    if (result.oracle_value) {
        j["oracle_N"] = *result.oracle_value;
        j["resolved_by_oracle"] = true;
    }
    return j;
}

Json to_json(const F2Matrix& m)
{
    return m.to_rows();
}

F2Matrix matrix_from_json(const Json& j)
{
    try {
        return F2Matrix::from_rows(j.get<std::vector<std::string>>());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed matrix JSON: ") + e.what());
    }
}

std::string to_plain(const F2Matrix& m)
{
    std::string out;
    for (const auto& row : m.to_rows())
        out += row + '\n';
    return out;
}

Json to_json(const std::vector<DegreeRow>& rows)
{
    Json out = Json::array();
    for (const auto& row : rows)
        out.push_back({{"g", row.genus},
                       {"N", row.degree},
                       {"case_id", row.case_id},
                       {"witness", row.witness ? to_json(*row.witness) : Json(nullptr)}});
    return out;
}

std::string to_csv(const std::vector<DegreeRow>& rows)
{
    std::string out = "g,N,case_id,witness\n";
    for (const auto& row : rows) {
        out += std::to_string(row.genus) + ',' + std::to_string(row.degree) + ',' + row.case_id + ',';
        if (row.witness)
            out += '"' + to_tuple_string(*row.witness) + '"';
        out += '\n';
    }
    return out;
}

Json to_json(const CaseBCensus& census)
{
    return {{"limit", census.limit},
            {"case11_count", census.case11_count},
            {"case11_N_eq_g", census.case11_degree_equals_genus},
            {"case12_count", census.case12_count},
            {"case12_N_eq_g_plus_1", census.case12_degree_equals_genus_plus_one},
            {"case12_two_power_maximal", census.case12_two_power_maximal},
            {"case11", to_json(census.case11)},
            {"case12", to_json(census.case12)}};
}

} // namespace dtroots
