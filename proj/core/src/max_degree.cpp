#include "dtroots/max_degree.hpp"

#include "dtroots/enumeration.hpp"
#include "dtroots/error.hpp"
#include "dtroots/sweep.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace dtroots {

MaxDegreeResult MaxDegreeResult::exact(Int n, std::string case_id, std::optional<DataSet> witness)
{
    return {DegreeKind::exact, n, n, std::move(case_id), std::move(witness), std::nullopt};
}

MaxDegreeResult MaxDegreeResult::bounds(Int lower, Int upper, std::string case_id, std::optional<DataSet> witness)
{
    if (lower > upper)
        throw std::logic_error("empty bounds [" + std::to_string(lower) + ", " + std::to_string(upper) + "] in " +
                               case_id);
    return {DegreeKind::bounds, lower, upper, std::move(case_id), std::move(witness), std::nullopt};
}

MaxDegreeResult MaxDegreeResult::none(std::string case_id)
{
    return {DegreeKind::no_root, 0, 0, std::move(case_id), std::nullopt, std::nullopt};
}

bool MaxDegreeResult::admits(Int n) const noexcept
{
    return kind != DegreeKind::no_root && lower <= n && n <= upper;
}

std::optional<Int> MaxDegreeResult::value() const noexcept
{
    if (kind == DegreeKind::exact)
        return lower;
    return oracle_value;
}

// ---------------------------------------------------------------------------
// Brute force

namespace {

// Smaller is simpler.
auto simplicity_key(const Signature& sig)
{
    std::vector<Int> descending(sig.orders.rbegin(), sig.orders.rend());
    std::vector<Int> distinct = sig.orders;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    return std::make_tuple(-sig.g0, sig.orders.size(), distinct.size(), std::move(descending));
}

std::optional<DataSet> simplest_dataset(TwistType type, Int total, Int degree, SearchCache& cache)
{
    const auto& solver = cache.solver(type, degree);
    std::optional<Signature> best;
    for_each_signature(type, total, degree, cache, [&](const Signature& sig) {
        if (solver.feasible(sig.orders) && (!best || simplicity_key(sig) < simplicity_key(*best)))
            best = sig;
        return true;
    });
    if (!best)
        return std::nullopt;
    return solver.first_dataset(best->g0, best->orders);
}

} // namespace

MaxDegreeResult max_degree_bruteforce(TwistType type, Int genus_param, SearchCache& cache)
{
    if (genus_param < 0)
        throw InvalidInput("genus parameter must be >= 0");
    const Int total = dataset_genus(type, genus_param);
    Int n = max_candidate_degree(type, genus_param);
    if (n % 2 == 0)
        --n;
    for (; n >= 3; n -= 2) {
        if (find_dataset_at_degree(type, total, n, cache))
            return MaxDegreeResult::exact(n, "search", simplest_dataset(type, total, n, cache));
    }
    return MaxDegreeResult::none("none");
}

MaxDegreeResult max_degree_bruteforce(TwistType type, Int genus_param)
{
    SearchCache cache;
    return max_degree_bruteforce(type, genus_param, cache);
}

// ---------------------------------------------------------------------------
// Closed form, type A

namespace {

Int pow2(int l)
{
    return Int{1} << l;
}

std::vector<ConePoint> nontrivial(std::initializer_list<ConePoint> cones)
{
    std::vector<ConePoint> out;
    for (const auto& cone : cones)
        if (cone.order > 1)
            out.push_back(cone);
    return out;
}

DataSet type_a(Int n, Int g0, std::vector<ConePoint> cones = {})
{
    return DataSet(TwistType::A, n, g0, 2, 2, std::move(cones));
}

struct Triple {
    Int k, k1, k2;
    Int degree() const { return (k1 + 1) / 4 * k2; }
};

// Admissible (k, k1, k2) with the largest resulting degree. The degree must
// be odd for the data set to exist.
std::optional<Triple> best_triple(Int g)
{
    std::optional<Triple> best;
    for (Int k = 1; 3 * k <= g; k += 2) {
        for (Int k1 : divisors(g + k)) {
            if (k1 % 4 != 3)
                continue;
            const Triple t{k, k1, (g + k) / k1};
            const Int n = t.degree();
            if (n % 2 == 0 || n % k != 0)
                continue;
            if (!best || n > best->degree())
                best = t;
        }
    }
    return best;
}

MaxDegreeResult closed_form_a(Int g)
{
    if (g < 3 || g == 4)
        return MaxDegreeResult::none("none");

    if (g % 2 == 1)
        return MaxDegreeResult::exact(g, "A1", type_a(g, 1));

    const int l = two_adic_valuation(g);
    const Int odd = odd_part(g);

    if (l % 2 == 1) {
        const Int order = (pow2(l) + 1) / 3;
        const Int n = order * odd;
        if (l == 1)
            return MaxDegreeResult::exact(n, "A2", type_a(odd, 2));
        return MaxDegreeResult::exact(n, "A2", type_a(n, 2, {{order, 1}}));
    }

    for (Int k1 : divisors(odd)) {
        if ((pow2(l) * k1 + 1) % 3 != 0)
            continue;
        const Int order = (pow2(l) * k1 + 1) / 3;
        const Int n = order * (odd / k1);
        return MaxDegreeResult::exact(n, "A3", type_a(n, 2, {{order, 1}}));
    }

    if (auto t = best_triple(g)) {
        const Int n = t->degree();
        return MaxDegreeResult::bounds(n, (g - 1) / 3, "A4",
                                       type_a(n, 2, nontrivial({{(t->k1 + 1) / 4, 1}, {n / t->k, 1}})));
    }

    if (l == 2)
        return MaxDegreeResult::exact(odd, "A5", type_a(odd, 4));

    const Int upper = (g - 1) / 4;
    std::optional<DataSet> witness;
    if (g % 6 == 4 && ((g + 2) / 6) % 2 == 1) {
        const Int k = (g + 2) / 6;
        witness = type_a(k, 4, {{k, 1}, {k, 1}});
    } else if (odd % 3 == 0) {
        const Int k = odd / 3;
        const Int n = (pow2(l - 1) + 1) * k;
        witness = type_a(n, 4, nontrivial({{n / (3 * k), 1}, {n / (3 * k), 1}}));
    }
    if (witness)
        return MaxDegreeResult::bounds(witness->degree(), upper, "A6", std::move(witness));
    Int lower = g / 6 + 1;
    lower |= 1;
    return MaxDegreeResult::bounds(lower, upper, "A6");
}

// ---------------------------------------------------------------------------
// Closed form, type B

bool odd_multiple(Int x, Int m)
{
    return x % m == 0 && (x / m) % 2 == 1;
}

// (n1*d, 0, (a, b); (c1, n1)) from the congruence system at degree n1*d.
DataSet one_cone_b(Int n1, Int d)
{
    auto solution = d == 1 ? solve_simple_system(n1) : solve_composite_system(n1, d);
    if (!solution)
        throw std::logic_error("congruence system unsolvable for n1=" + std::to_string(n1) + ", d=" +
                               std::to_string(d));
    return DataSet(TwistType::B, n1 * d, 0, solution->a.value(), solution->b.value(),
                   {{n1, solution->c1.value()}});
}

MaxDegreeResult single_cone_case(std::string id, Int n1, Int d)
{
    return MaxDegreeResult::exact(n1 * d, std::move(id), one_cone_b(n1, d));
}

MaxDegreeResult closed_form_b(Int gp)
{
    if (gp < 2)
        return MaxDegreeResult::none("none");

    // Cases 1-8: a single cone of order 2j+1 at degree (2j+1)d with g' = j*d.
    struct SingleCone {
        const char* id;
        Int j;
        Int divisor; // g' must be an odd multiple of this
    };
    static constexpr SingleCone single[] = {
        {"B1", 1, 3}, {"B2", 2, 2}, {"B3", 4, 12}, {"B4", 5, 5},
        {"B5", 8, 8}, {"B6", 11, 11}, {"B7", 16, 48}, {"B8", 17, 17},
    };
    for (const auto& c : single) {
        if (odd_multiple(gp, c.divisor))
            return single_cone_case(c.id, 2 * c.j + 1, gp / c.j);
    }

    const Int upper = 41 * gp / 20;
    const auto divs = divisors(gp);

    if (gp % 3 == 0) {
        for (Int l : divs) {
            if (l % 3 == 1 && odd_multiple(gp, 3 * l)) {
                const Int d = gp / l;
                return MaxDegreeResult::bounds((2 * l + 1) * d, upper, "B9", one_cone_b(2 * l + 1, d));
            }
        }
    }

    for (Int l : divs) {
        if (l % 3 == 2 && odd_multiple(gp, l)) {
            const Int d = gp / l;
            auto witness = one_cone_b(2 * l + 1, d);
            if (is_prime(gp))
                return MaxDegreeResult::exact(2 * gp + 1, "B10", std::move(witness));
            return MaxDegreeResult::bounds((2 * l + 1) * d, upper, "B10", std::move(witness));
        }
    }

    const Int five_quarters = 5 * gp / 4;
    if (gp % 6 == 1)
        return MaxDegreeResult::bounds(gp, five_quarters, "B11", DataSet(TwistType::B, gp, 1, 2, -2, {}));

    if (gp % 12 != 4)
        throw std::logic_error("type B case analysis missed g' = " + std::to_string(gp));
    const Int n = gp + 1;
    return MaxDegreeResult::bounds(n, five_quarters, "B12",
                                   DataSet(TwistType::B, n, 0, 2, -2, {{n, 1}, {n, -1}}));
}

} // namespace

MaxDegreeResult max_degree_closed_form(TwistType type, Int genus_param)
{
    if (genus_param > kMaxModulus)
        throw InvalidInput("genus parameter above " + std::to_string(kMaxModulus));
    return type == TwistType::A ? closed_form_a(genus_param) : closed_form_b(genus_param);
}

MaxDegreeResult resolve_with_oracle(MaxDegreeResult closed, const MaxDegreeResult& brute)
{
    if (brute.kind == DegreeKind::exact)
        closed.oracle_value = brute.lower;
    return closed;
}

bool consistent(const MaxDegreeResult& closed, const MaxDegreeResult& brute) noexcept
{
    if (closed.kind == DegreeKind::no_root || brute.kind == DegreeKind::no_root)
        return closed.kind == brute.kind;
    if (closed.kind == DegreeKind::exact)
        return closed.lower == brute.lower;
    return closed.admits(brute.lower);
}

// ---------------------------------------------------------------------------
// Tables

namespace {

void check_limit(Int limit)
{
    if (limit > kTableLimit)
        throw InvalidInput("table limit above " + std::to_string(kTableLimit));
}

} // namespace

std::vector<DegreeRow> exceptional_table(Int limit, unsigned jobs)
{
    check_limit(limit);
    auto rows = parallel_sweep<std::optional<DegreeRow>>(1, limit, jobs, [](Int g, SearchCache& cache) {
        std::optional<DegreeRow> row;
        // N < g/4 forces even g outside case A1; skip the cheap negatives.
        if (g % 2 == 1)
            return row;
        auto brute = max_degree_bruteforce(TwistType::A, g, cache);
        if (brute.kind == DegreeKind::exact && 4 * brute.lower < g)
            row = DegreeRow{g, brute.lower, max_degree_closed_form(TwistType::A, g).case_id, brute.witness};
        return row;
    });
    std::vector<DegreeRow> out;
    for (auto& row : rows)
        if (row)
            out.push_back(std::move(*row));
    return out;
}

std::optional<DataSet> two_power_dataset(Int genus_param)
{
    if (genus_param < 2 || genus_param % 2 != 0)
        return std::nullopt;
    const Int order = pow2(two_adic_valuation(genus_param)) + 1;
    const Int n = order * odd_part(genus_param);
    return DataSet(TwistType::B, n, 0, 2, -2, {{order, 1}, {order, -1}});
}

CaseBCensus caseB_census(Int limit, unsigned jobs)
{
    check_limit(limit);
    auto rows = parallel_sweep<std::optional<DegreeRow>>(2, limit, jobs, [](Int gp, SearchCache& cache) {
        std::optional<DegreeRow> row;
        auto closed = max_degree_closed_form(TwistType::B, gp);
        if (closed.case_id != "B11" && closed.case_id != "B12")
            return row;
        auto brute = max_degree_bruteforce(TwistType::B, gp, cache);
        if (brute.kind != DegreeKind::exact)
            throw std::logic_error("no root found for g' = " + std::to_string(gp));
        row = DegreeRow{gp, brute.lower, closed.case_id, brute.witness};
        return row;
    });

    CaseBCensus census;
    census.limit = limit;
    for (auto& row : rows) {
        if (!row)
            continue;
        const Int gp = row->genus;
        if (row->case_id == "B11") {
            ++census.case11_count;
            if (row->degree == gp)
                ++census.case11_degree_equals_genus;
            census.case11.push_back(std::move(*row));
        } else {
            ++census.case12_count;
            if (row->degree == gp + 1)
                census.case12_degree_equals_genus_plus_one.push_back(gp);
            auto candidate = two_power_dataset(gp);
            if (row->degree > gp + 1 && candidate && candidate->degree() == row->degree)
                ++census.case12_two_power_maximal;
            census.case12.push_back(std::move(*row));
        }
    }
    return census;
}

} // namespace dtroots
