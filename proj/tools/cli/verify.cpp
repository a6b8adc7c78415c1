#include "verify.hpp"

#include "dtroots/enumeration.hpp"
#include "dtroots/error.hpp"
#include "dtroots/homology.hpp"
#include "dtroots/max_degree.hpp"
#include "dtroots/primary.hpp"
#include "dtroots/sweep.hpp"

#include <algorithm>
#include <optional>

namespace dtroots::cli {

namespace {

using Mismatch = std::optional<std::string>;

// First genus in [first, last] where check() reports a mismatch.
template <class Check>
ClaimResult sweep_claim(std::string suite, std::string claim, Int first, Int last, unsigned jobs, Check check)
{
    auto results = parallel_sweep<Mismatch>(first, last, jobs, check);
    ClaimResult out{std::move(suite), std::move(claim), true, "checked " + std::to_string(last - first + 1) + " values"};
    for (auto& r : results) {
        if (r) {
            out.passed = false;
            out.detail = *r;
            break;
        }
    }
    return out;
}

std::string label(TwistType type, Int g)
{
    return std::string(1, to_char(type)) + " g=" + std::to_string(g);
}

std::vector<ClaimResult> existence(Int limit, unsigned jobs)
{
    std::vector<ClaimResult> out;
    for (auto [type, bound] : {std::pair{TwistType::A, limit}, std::pair{TwistType::B, limit / 2}}) {
        out.push_back(sweep_claim("thm32", std::string("root existence, type ") + to_char(type), 0, bound, jobs,
                                  [type](Int g, SearchCache& cache) -> Mismatch {
                                      if (type == TwistType::A && g == 0)
                                          return std::nullopt;
                                      if (root_exists(type, g, cache) != root_exists_closed_form(type, g))
                                          return label(type, g);
                                      return std::nullopt;
                                  }));
    }
    return out;
}

ClaimResult max_degree_claim(std::string suite, TwistType type, Int limit, unsigned jobs)
{
    return sweep_claim(std::move(suite), std::string("maximal degree, type ") + to_char(type), 1, limit, jobs,
                       [type](Int g, SearchCache& cache) -> Mismatch {
                           const auto closed = max_degree_closed_form(type, g);
                           const auto brute = max_degree_bruteforce(type, g, cache);
                           if (!consistent(closed, brute))
                               return label(type, g) + " case " + closed.case_id;
                           if (closed.witness && (!is_valid(*closed.witness) ||
                                                  closed.witness->degree() != closed.lower ||
                                                  genus(*closed.witness) != dataset_genus(type, g)))
                               return label(type, g) + " witness " + to_string(*closed.witness);
                           return std::nullopt;
                       });
}

std::vector<ClaimResult> primary_claims(TwistType type, Int limit)
{
    const std::string suite = type == TwistType::A ? "thm51" : "thm52";
    SearchCache cache;
    const Int grid = std::min<Int>(limit, 120);

    ClaimResult agree{suite, "primary existence grid, odd n <= 15, genus <= " + std::to_string(grid), true, ""};
    for (Int n = 3; n <= 15 && agree.passed; n += 2)
        for (Int g = 0; g <= grid; ++g) {
            PrimaryQuery q{type, n, g};
            if (primary_exists_bruteforce(q, cache) != primary_exists_closed_form(q)) {
                agree.passed = false;
                agree.detail = "n=" + std::to_string(n) + " g=" + std::to_string(g);
                break;
            }
        }

    ClaimResult boundary{suite, "threshold behaviour, odd n <= 13", true, ""};
    auto fail = [&](Int n, Int g, const char* what) {
        if (boundary.passed) {
            boundary.passed = false;
            boundary.detail = std::string(what) + " at n=" + std::to_string(n) + " g=" + std::to_string(g);
        }
    };
    for (Int n = 3; n <= 13; n += 2) {
        auto exists = [&](Int g) { return primary_exists_bruteforce(PrimaryQuery{type, n, g}, cache); };
        if (type == TwistType::A) {
            const Int square = (n - 1) * (n - 1);
            for (Int g = square + 1; g <= square + 2 * n; ++g)
                if (!exists(g))
                    fail(n, g, "missing above threshold");
            if (exists(square))
                fail(n, square, "present at threshold");
            for (Int g = 0; g < n; ++g)
                if (exists(g))
                    fail(n, g, "present below degree");
        } else {
            const Int start = (n - 3) * (n - 1) / 2;
            const Int hole = (n * n - 2 * n - 1) / 2;
            for (Int g = std::max<Int>(start, 1); g <= start + 2 * n; ++g) {
                const bool expected = !(n % 3 == 0 && g == hole);
                if (exists(g) != expected)
                    fail(n, g, expected ? "missing above threshold" : "present at excluded genus");
            }
            if (start >= 2 && exists(start - 1))
                fail(n, start - 1, "present below threshold");
        }
    }
    return {agree, boundary};
}

std::vector<ClaimResult> degree_three(Int limit, unsigned jobs)
{
    std::vector<ClaimResult> out;
    for (auto type : {TwistType::A, TwistType::B})
        out.push_back(sweep_claim("cor53", std::string("roots imply degree-3 roots, type ") + to_char(type), 0,
                                  limit, jobs, [type](Int g, SearchCache& cache) -> Mismatch {
                                      if (type == TwistType::A && g == 0)
                                          return std::nullopt;
                                      if (root_exists(type, g, cache) && !degree3_exists(type, g, cache))
                                          return label(type, g);
                                      return std::nullopt;
                                  }));
    return out;
}

std::vector<ClaimResult> homology_claims()
{
    std::vector<ClaimResult> out;
    ClaimResult a1{"prop21", "no square root of psi(t_a1), 2 <= g <= 6", true, ""};
    for (int g = 2; g <= 6; ++g)
        if (find_square_root(psi_twist_a1(g))) {
            a1.passed = false;
            a1.detail = "root at g=" + std::to_string(g);
        }
    out.push_back(a1);

    ClaimResult b{"prop21", "no square root of psi(t_b), even g <= 8", true, ""};
    for (int g = 2; g <= 8; g += 2)
        if (find_square_root(psi_twist_b(g))) {
            b.passed = false;
            b.detail = "root at g=" + std::to_string(g);
        }
    out.push_back(b);

    ClaimResult sym{"prop21", "orthogonal P with A P^T = P is symmetric, g <= 4", true, ""};
    for (int g = 2; g <= 4; ++g) {
        const auto a = psi_twist_a1(g);
        for_each_orthogonal(g, [&](const F2Matrix& p) {
            if (multiply(a, transpose(p)) == p && transpose(p) != p) {
                sym.passed = false;
                sym.detail = "asymmetric solution at g=" + std::to_string(g);
                return false;
            }
            return true;
        });
    }
    out.push_back(sym);
    return out;
}

} // namespace

std::vector<ClaimResult> run_suite(std::string_view suite, Int limit, unsigned jobs)
{
    if (suite == "all") {
        std::vector<ClaimResult> out;
        for (auto name : kSuites) {
            auto part = run_suite(name, limit, jobs);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    if (limit < 1 || limit > kTableLimit)
        throw InvalidInput("--limit must be in [1, " + std::to_string(kTableLimit) + "]");
    if (suite == "thm32")
        return existence(limit, jobs);
    if (suite == "thm41")
        return {max_degree_claim("thm41", TwistType::A, limit, jobs)};
    if (suite == "thm45")
        return {max_degree_claim("thm45", TwistType::B, limit, jobs)};
    if (suite == "thm51")
        return primary_claims(TwistType::A, limit);
    if (suite == "thm52")
        return primary_claims(TwistType::B, limit);
    if (suite == "cor53")
        return degree_three(limit, jobs);
    if (suite == "prop21")
        return homology_claims();
    throw InvalidInput("unknown suite '" + std::string(suite) + "'");
}

} // namespace dtroots::cli
