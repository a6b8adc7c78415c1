// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Expected values are fixed constants.

#include "dtroots/arithmetic.hpp"
#include "dtroots/enumeration.hpp"
#include "dtroots/error.hpp"
#include "dtroots/homology.hpp"
#include "dtroots/max_degree.hpp"
#include "dtroots/primary.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace dtroots;

namespace {

// Wall-clock ceilings in seconds.
constexpr double kExceptionalTableSeconds = 120.0;
constexpr double kSquareRootSeconds = 10.0;

struct Verdict {
    bool passed = true;
    std::string detail;

    void fail(std::string why)
    {
        if (passed)
            detail = std::move(why);
        passed = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Verdict exceptional_table_criterion()
{
    struct Row {
        Int g;
        Int n;
        const char* printed;
    };
    const std::vector<Row> expected{
        {16, 3, "A(3,4,(2,2);(1,3),(1,3))"},
        {48, 9, "A(9,4,(2,2);(1,3),(1,3))"},
        {64, 15, "A(15,2,(2,2);(1,5),(1,5),(1,3))"},
        {112, 23, "A(23,2,(2,2);(1,23),(1,23),(1,23))"},
        {144, 29, "A(29,4,(2,2);(1,29))"},
        {192, 45, "A(45,2,(2,2);(1,5),(1,5),(1,3))"},
        {256, 45, "A(45,4,(2,2);(1,9),(1,5))"},
        {304, 63, "A(63,2,(2,2);(1,63),(1,63),(1,7))"},
        {336, 69, "A(69,2,(2,2);(1,23),(1,23),(1,23))"},
        {496, 105, "A(105,2,(2,2);(1,15),(1,15),(1,7))"},
    };
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    const auto rows = exceptional_table(500, 1);
    const double elapsed = seconds_since(start);
    if (rows.size() != expected.size())
        v.fail(std::to_string(rows.size()) + " rows");
    for (std::size_t i = 0; i < std::min(rows.size(), expected.size()); ++i) {
        const auto& row = rows[i];
        const auto& want = expected[i];
        if (row.genus != want.g || row.degree != want.n)
            v.fail("row " + std::to_string(row.genus) + " N=" + std::to_string(row.degree));
        else if (!row.witness || !are_equivalent(*row.witness, parse_dataset(want.printed)))
            v.fail("witness for g=" + std::to_string(row.genus) + " not equivalent to the printed one");
    }
    if (elapsed > kExceptionalTableSeconds)
        v.fail("took " + std::to_string(elapsed) + "s");
    if (v.passed)
        v.detail = "10 rows, witnesses equivalent, " + std::to_string(elapsed) + "s";
    return v;
}

Verdict census_criterion()
{
    Verdict v;
    const auto c = caseB_census(500, 1);
    const std::vector<Int> plus_one{4, 16, 64, 256};
    if (c.case11_count != 59)
        v.fail("case 11 count " + std::to_string(c.case11_count));
    if (c.case11_degree_equals_genus != 31)
        v.fail("case 11 with N=g' " + std::to_string(c.case11_degree_equals_genus));
    if (c.case12_count != 24)
        v.fail("case 12 count " + std::to_string(c.case12_count));
    if (c.case12_degree_equals_genus_plus_one != plus_one)
        v.fail("case 12 with N=g'+1 differs");
    if (c.case12_two_power_maximal != 19)
        v.fail("two-power maximal " + std::to_string(c.case12_two_power_maximal));
    if (v.passed)
        v.detail = "59/31, 24/{4,16,64,256}/19";
    return v;
}

Verdict existence_criterion()
{
    Verdict v;
    SearchCache cache;
    for (Int g = 1; g <= 200; ++g) {
        const bool expected = g == 3 || g >= 5;
        if (root_exists(TwistType::A, g, cache) != expected || root_exists_closed_form(TwistType::A, g) != expected)
            v.fail("type A g=" + std::to_string(g));
    }
    for (Int g = 0; g <= 100; ++g) {
        const bool expected = g >= 2;
        if (root_exists(TwistType::B, g, cache) != expected || root_exists_closed_form(TwistType::B, g) != expected)
            v.fail("type B g'=" + std::to_string(g));
    }
    if (v.passed)
        v.detail = "A g<=200, B g'<=100";
    return v;
}

Verdict agreement_criterion()
{
    Verdict v;
    int discrepancies = 0;
    for (auto type : {TwistType::A, TwistType::B}) {
        SearchCache cache;
        for (Int g = 1; g <= 500; ++g) {
            const auto closed = max_degree_closed_form(type, g);
            const auto brute = max_degree_bruteforce(type, g, cache);
            if (!consistent(closed, brute)) {
                ++discrepancies;
                v.fail(std::string(1, to_char(type)) + " g=" + std::to_string(g));
            }
        }
    }
    v.detail = v.passed ? "0 discrepancies over 1000 genera" : v.detail + ", " + std::to_string(discrepancies) + " total";
    return v;
}

Verdict congruence_criterion()
{
    Verdict v;
    for (Int n1 = 3; n1 <= 105; n1 += 2)
        for (Int d = 3; n1 * d <= 315; d += 2) {
            const auto got = solve_composite_system(n1, d);
            const bool expected = !(n1 % 3 == 0 && d % 3 != 0);
            if (got.has_value() != expected || oracle::composite_triple(n1, d).has_value() != expected)
                v.fail("composite (" + std::to_string(n1) + "," + std::to_string(d) + ")");
            if (got && !got->satisfies_invariants())
                v.fail("invalid solution for (" + std::to_string(n1) + "," + std::to_string(d) + ")");
        }
    for (Int n = 3; n <= 999; n += 2) {
        const auto got = solve_simple_system(n);
        if (got.has_value() != (n % 3 != 0) || (got && !got->satisfies_invariants()))
            v.fail("simple n=" + std::to_string(n));
    }
    if (v.passed)
        v.detail = "n1*d <= 315 and n <= 999";
    return v;
}

Verdict primary_criterion()
{
    Verdict v;
    SearchCache cache;
    auto exists = [&](TwistType t, Int n, Int g) { return primary_exists_bruteforce({t, n, g}, cache); };
    for (Int n = 3; n <= 13; n += 2) {
        const Int square = (n - 1) * (n - 1);
        for (Int g = square + 1; g <= square + 2 * n; ++g)
            if (!exists(TwistType::A, n, g))
                v.fail("A n=" + std::to_string(n) + " g=" + std::to_string(g));
        if (exists(TwistType::A, n, square))
            v.fail("A present at (n-1)^2, n=" + std::to_string(n));
        for (Int g = 1; g < n; ++g)
            if (exists(TwistType::A, n, g))
                v.fail("A present below n, n=" + std::to_string(n));

        const Int start = (n - 3) * (n - 1) / 2;
        const Int hole = (n * n - 2 * n - 1) / 2;
        for (Int g = std::max<Int>(start, 1); g <= start + 2 * n; ++g)
            if (exists(TwistType::B, n, g) != !(n % 3 == 0 && g == hole))
                v.fail("B n=" + std::to_string(n) + " g'=" + std::to_string(g));
        if (start >= 2 && exists(TwistType::B, n, start - 1))
            v.fail("B present below threshold, n=" + std::to_string(n));
    }
    for (auto type : {TwistType::A, TwistType::B})
        for (Int n = 3; n <= 13; n += 2)
            for (Int g = 0; g <= 120; ++g)
                if (primary_exists_bruteforce({type, n, g}, cache) != primary_exists_closed_form({type, n, g}))
                    v.fail("grid disagreement " + std::string(1, to_char(type)) + " n=" + std::to_string(n) +
                           " g=" + std::to_string(g));
    if (v.passed)
        v.detail = "thresholds for n <= 13, grid genus <= 120";
    return v;
}

Verdict degree_three_criterion()
{
    Verdict v;
    SearchCache cache;
    for (auto type : {TwistType::A, TwistType::B})
        for (Int g = 1; g <= 300; ++g)
            if (root_exists(type, g, cache) && !degree3_exists(type, g, cache))
                v.fail(std::string(1, to_char(type)) + " g=" + std::to_string(g));
    if (v.passed)
        v.detail = "both types, genus <= 300";
    return v;
}

Verdict square_root_criterion()
{
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    for (int g = 2; g <= 6; ++g)
        if (find_square_root(psi_twist_a1(g)))
            v.fail("root of psi(t_a1) at g=" + std::to_string(g));
    for (int g = 2; g <= 8; g += 2)
        if (find_square_root(psi_twist_b(g)))
            v.fail("root of psi(t_b) at g=" + std::to_string(g));
    for (int g = 2; g <= 4; ++g) {
        const auto a = psi_twist_a1(g);
        for (const auto& p : enumerate_orthogonal(g))
            if (multiply(a, transpose(p)) == p && transpose(p) != p)
                v.fail("asymmetric P at g=" + std::to_string(g));
    }
    const double elapsed = seconds_since(start);
    if (elapsed > kSquareRootSeconds)
        v.fail("took " + std::to_string(elapsed) + "s");
    if (v.passed)
        v.detail = "exhaustive, " + std::to_string(elapsed) + "s";
    return v;
}

Verdict construction_criterion()
{
    Verdict v;
    int checked = 0;
    for (auto type : {TwistType::A, TwistType::B})
        for (Int n = 3; n <= 15; n += 2)
            for (Int g0 = 0; g0 <= 4; ++g0)
                for (Int m = 0; m <= 4; ++m) {
                    const bool admissible = type == TwistType::A ? g0 >= 1 : (g0 > 0 || m > 0);
                    if (!admissible)
                        continue;
                    if (type == TwistType::B && m == 1 && n % 3 == 0) {
                        try {
                            construction_dataset(type, n, g0, m);
                            v.fail("no Unconstructible for n=" + std::to_string(n));
                        } catch (const Unconstructible&) {
                        }
                        continue;
                    }
                    const auto ds = construction_dataset(type, n, g0, m);
                    const Int expected = (type == TwistType::A ? g0 * n : 2 * g0 * n) + m * (n - 1);
                    if (!is_valid(ds) || !is_primary(ds) || genus(ds) != expected)
                        v.fail(to_string(ds));
                    ++checked;
                }
    if (v.passed)
        v.detail = std::to_string(checked) + " data sets";
    return v;
}

Verdict property_criterion()
{
    Verdict v;
    std::mt19937_64 rng(45);
    auto pick = [&](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };
    std::vector<DataSet> sample;
    while (sample.size() < 10000) {
        const auto type = pick(0, 1) ? TwistType::A : TwistType::B;
        const Int n = 2 * pick(1, 22) + 1;
        const auto orders = [&] {
            std::vector<Int> out;
            for (Int d = 3; d <= n; d += 2)
                if (n % d == 0)
                    out.push_back(d);
            return out;
        }();
        std::vector<ConePoint> cones;
        for (Int i = pick(0, 3); i > 0; --i) {
            const Int order = orders[static_cast<std::size_t>(pick(0, static_cast<Int>(orders.size()) - 1))];
            cones.push_back({order, pick(1, order - 1)});
        }
        const Int a = pick(1, n - 1), b = pick(1, n - 1);
        if (type == TwistType::B && !cones.empty()) {
            Int sum = a + b;
            for (std::size_t i = 0; i + 1 < cones.size(); ++i)
                sum += n / cones[i].order * cones[i].c;
            const Int order = cones.back().order;
            for (Int c = 0; c < order; ++c)
                if (oracle::mod(sum + n / order * c, n) == 0)
                    cones.back().c = c;
        }
        DataSet ds(type, n, pick(type == TwistType::A ? 1 : 0, 3), a, b, cones);
        if (is_valid(ds))
            sample.push_back(ds);
    }

    for (const auto& ds : sample) {
        const auto orbit = equivalence_orbit(ds);
        const auto canon = canonical_form(ds);
        if (canonical_form(canon) != canon)
            v.fail("canonical_form not idempotent on " + to_string(ds));
        if (!are_equivalent(ds, ds))
            v.fail("not reflexive on " + to_string(ds));
        for (const auto& member : orbit) {
            if (!is_valid(member) || genus(member) != genus(ds))
                v.fail("orbit member differs: " + to_string(member));
            if (canonical_form(member) != canon)
                v.fail("canonical form varies on the orbit of " + to_string(ds));
            if (!are_equivalent(member, ds) || !are_equivalent(ds, member))
                v.fail("not symmetric on " + to_string(ds));
        }
    }
    // Transitivity over triples drawn from the same orbit and from random pairs.
    for (std::size_t i = 0; i + 2 < sample.size(); i += 3) {
        const auto& x = sample[i];
        const auto orbit = equivalence_orbit(x);
        const auto& y = orbit[static_cast<std::size_t>(pick(0, static_cast<Int>(orbit.size()) - 1))];
        const auto yorbit = equivalence_orbit(y);
        const auto& z = yorbit[static_cast<std::size_t>(pick(0, static_cast<Int>(yorbit.size()) - 1))];
        if (!are_equivalent(x, z))
            v.fail("not transitive on " + to_string(x));
        const auto& w = sample[i + 1];
        if (w.type() == x.type() && are_equivalent(x, w) != (canonical_form(x) == canonical_form(w)))
            v.fail("equivalence disagrees with canonical forms");
    }
    if (v.passed)
        v.detail = "10000 valid data sets, n <= 45";
    return v;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"1 exceptional table", exceptional_table_criterion},
        {"2 case B census", census_criterion},
        {"3 existence thresholds", existence_criterion},
        {"4 max-degree agreement", agreement_criterion},
        {"5 congruence solvers", congruence_criterion},
        {"6 primary-root boundaries", primary_criterion},
        {"7 degree-3 roots", degree_three_criterion},
        {"8 square roots in homology", square_root_criterion},
        {"9 construction data sets", construction_criterion},
        {"10 equivalence properties", property_criterion},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        failures += !v.passed;
        std::printf("%s AC%s: %s\n", v.passed ? "PASS" : "FAIL", name, v.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
