#include "dtroots/primary.hpp"

#include "dtroots/enumeration.hpp"
#include "dtroots/error.hpp"

#include <algorithm>

namespace dtroots {

namespace {

void check_degree(Int n)
{
    if (n < 3 || n % 2 == 0 || n > kMaxModulus)
        throw InvalidInput("primary degree must be odd and >= 3, got " + std::to_string(n));
}

} // namespace

bool is_primary(const DataSet& ds)
{
    if (!is_valid(ds))
        throw InvalidDataSet("not a valid data set: " + to_string(ds));
    return std::all_of(ds.cones().begin(), ds.cones().end(),
                       [&](const ConePoint& cone) { return cone.order == ds.degree(); });
}

bool primary_exists_closed_form(const PrimaryQuery& q)
{
    check_degree(q.degree);
    const Int n = q.degree;
    if (q.genus_param < 0)
        return false;
    if (q.type == TwistType::A) {
        for (Int g0 = 1; g0 * n <= q.genus_param; ++g0)
            if ((q.genus_param - g0 * n) % (n - 1) == 0)
                return true;
        return false;
    }
    const Int total = 2 * q.genus_param;
    for (Int g0 = 0; 2 * g0 * n <= total; ++g0) {
        const Int rest = total - 2 * g0 * n;
        if (rest % (n - 1) != 0)
            continue;
        const Int m = rest / (n - 1);
        if (g0 == 0 && m == 0)
            continue;
        if (m == 1 && n % 3 == 0)
            continue;
        return true;
    }
    return false;
}

bool primary_exists_bruteforce(const PrimaryQuery& q, SearchCache& cache)
{
    check_degree(q.degree);
    // Genus zero carries no roots.
    if (q.genus_param <= 0)
        return false;
    return find_dataset_at_degree(q.type, dataset_genus(q.type, q.genus_param), q.degree, cache, true).has_value();
}

bool primary_exists_bruteforce(const PrimaryQuery& q)
{
    SearchCache cache;
    return primary_exists_bruteforce(q, cache);
}

bool degree3_exists(TwistType type, Int genus_param, SearchCache& cache)
{
    return find_dataset(type, genus_param, 3, cache).has_value();
}

bool degree3_exists(TwistType type, Int genus_param)
{
    SearchCache cache;
    return degree3_exists(type, genus_param, cache);
}

DataSet construction_dataset(TwistType type, Int degree, Int g0, Int m)
{
    check_degree(degree);
    const Int n = degree;
    if (m < 0 || m > kMaxModulus)
        throw InvalidInput("cone count out of range: " + std::to_string(m));

    if (type == TwistType::A) {
        if (g0 < 1)
            throw InvalidInput("type A construction needs g0 >= 1");
        return DataSet(type, n, g0, 2, 2, std::vector<ConePoint>(static_cast<std::size_t>(m), ConePoint{n, 4}));
    }

    if (g0 < 0)
        throw InvalidInput("type B construction needs g0 >= 0");
    if (g0 == 0 && m == 0)
        throw InvalidInput("type B construction needs (g0, m) != (0, 0)");
    if (m == 1) {
        if (n % 3 == 0)
            throw Unconstructible("no primary type B data set with one cone when 3 divides " + std::to_string(n));
        return DataSet(type, n, g0, (n + 3) / 2, -3, {{n, (n + 3) / 2}});
    }
    std::vector<ConePoint> cones;
    const Int alternating = m % 2 == 0 ? m : m - 2;
    for (Int i = 0; i < alternating; ++i)
        cones.push_back({n, i % 2 == 0 ? -4 : 4});
    if (m % 2 == 1) {
        cones.push_back({n, 2});
        cones.push_back({n, 2});
    }
    return DataSet(type, n, g0, 2, -2, std::move(cones));
}

} // namespace dtroots
