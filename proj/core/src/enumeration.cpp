#include "dtroots/enumeration.hpp"

#include "dtroots/error.hpp"

#include <set>
#include <string>

namespace dtroots {

namespace {

void check_query(const GenusQuery& query)
{
    const Int minimum = query.type == TwistType::A ? 1 : 0;
    if (query.genus_param < minimum)
        throw InvalidInput("genus parameter for type " + std::string(1, to_char(query.type)) + " must be >= " +
                           std::to_string(minimum) + ", got " + std::to_string(query.genus_param));
}

} // namespace

Int max_candidate_degree(TwistType type, Int genus_param) noexcept
{
    return type == TwistType::A ? genus_param : 3 * genus_param;
}

void for_each_dataset(const GenusQuery& query, const std::function<bool(const DataSet&)>& visit)
{
    check_query(query);
    const Int total = dataset_genus(query.type, query.genus_param);
    SearchCache cache;

    Int first = 3, last = max_candidate_degree(query.type, query.genus_param);
    if (query.degree) {
        first = std::max<Int>(first, *query.degree);
        last = std::min(last, *query.degree);
    }
    for (Int n = first | 1; n <= last; n += 2) {
        const auto& solver = cache.solver(query.type, n);
        bool keep_going = for_each_signature(query.type, total, n, cache, [&](const Signature& sig) {
            return solver.for_each_dataset(sig.g0, sig.orders, visit);
        });
        if (!keep_going)
            return;
    }
}

std::vector<DataSet> enumerate_datasets(const GenusQuery& query)
{
    std::vector<DataSet> out;
    for_each_dataset(query, [&](const DataSet& ds) {
        out.push_back(ds);
        return true;
    });
    return out;
}

std::vector<DataSet> enumerate_classes(const GenusQuery& query)
{
    std::set<DataSet> classes;
    for_each_dataset(query, [&](const DataSet& ds) {
        classes.insert(canonical_form(ds));
        return true;
    });
    return {classes.begin(), classes.end()};
}

std::optional<DataSet> find_dataset(TwistType type, Int genus_param, Int degree, SearchCache& cache)
{
    if (genus_param < 0 || degree > max_candidate_degree(type, genus_param))
        return std::nullopt;
    return find_dataset_at_degree(type, dataset_genus(type, genus_param), degree, cache);
}

std::optional<DataSet> find_dataset(TwistType type, Int genus_param, Int degree)
{
    SearchCache cache;
    return find_dataset(type, genus_param, degree, cache);
}

bool root_exists(TwistType type, Int genus_param, SearchCache& cache)
{
    for (Int n = 3; n <= max_candidate_degree(type, genus_param); n += 2)
        if (find_dataset(type, genus_param, n, cache))
            return true;
    return false;
}

bool root_exists(TwistType type, Int genus_param)
{
    SearchCache cache;
    return root_exists(type, genus_param, cache);
}

bool root_exists_closed_form(TwistType type, Int genus_param) noexcept
{
    if (type == TwistType::A)
        return genus_param == 3 || genus_param >= 5;
    return genus_param >= 2;
}

} // namespace dtroots
