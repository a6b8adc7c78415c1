#pragma once

#include "dtroots/dataset.hpp"
#include "dtroots/signature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dtroots {

enum class DegreeKind { exact, bounds, no_root };

/// Maximal root degree N for one genus: an exact value, an inclusive range
/// [lower, upper], or no root at all.
///
/// case_id names the branch that produced the result: "A1".."A6" and
/// "B1".."B12" for the closed forms, "search" for the brute force, "none"
/// when no root exists. A witness, when present, is a valid data set of
/// degree N (exact) or degree `lower` (bounds).
struct MaxDegreeResult {
    DegreeKind kind = DegreeKind::no_root;
    Int lower = 0;
    Int upper = 0;
    std::string case_id;
    std::optional<DataSet> witness;
    /// Brute-force N attached to a Bounds result (see resolve_with_oracle).
    std::optional<Int> oracle_value;

    static MaxDegreeResult exact(Int n, std::string case_id, std::optional<DataSet> witness = std::nullopt);
    static MaxDegreeResult bounds(Int lower, Int upper, std::string case_id,
                                  std::optional<DataSet> witness = std::nullopt);
    static MaxDegreeResult none(std::string case_id);

    bool admits(Int n) const noexcept;
    /// Exact N, or the attached oracle value for bounds.
    std::optional<Int> value() const noexcept;
};

/// Largest degree of any valid data set, by descending search over candidate
/// degrees. Among the signatures at that degree the witness prefers larger
/// g0, then fewer cones, then fewer distinct cone orders, then the smaller
/// order list read from the largest order down.
MaxDegreeResult max_degree_bruteforce(TwistType type, Int genus_param);
MaxDegreeResult max_degree_bruteforce(TwistType type, Int genus_param, SearchCache& cache);

/// The case analysis for type A (cases A1-A6) and type B (cases B1-B12),
/// guards evaluated in order. Genera without roots give NoRoot.
MaxDegreeResult max_degree_closed_form(TwistType type, Int genus_param);

/// Copy of `closed` with the brute-force value attached as oracle_value.
MaxDegreeResult resolve_with_oracle(MaxDegreeResult closed, const MaxDegreeResult& brute);

/// True when the brute-force result is compatible with the closed form:
/// same exact value, inside the bounds, or both without roots.
bool consistent(const MaxDegreeResult& closed, const MaxDegreeResult& brute) noexcept;

/// One row of a max-degree table.
struct DegreeRow {
    Int genus = 0;
    Int degree = 0;
    std::string case_id;
    std::optional<DataSet> witness;
};

inline constexpr Int kTableLimit = 2000;

/// Type A genera g <= limit whose maximal degree satisfies N < g/4, with the
/// closed-form case label and a brute-force witness.
std::vector<DegreeRow> exceptional_table(Int limit, unsigned jobs = 1);

/// The type B data set (2^l + 1)k, 0, (2,-2); (1, 2^l+1), (-1, 2^l+1) for
/// g' = 2^l k with l >= 1 and k odd; its degree exceeds g' + 1 when k > 1.
std::optional<DataSet> two_power_dataset(Int genus_param);

struct CaseBCensus {
    Int limit = 0;
    std::vector<DegreeRow> case11;
    std::vector<DegreeRow> case12;
    Int case11_count = 0;
    Int case11_degree_equals_genus = 0;
    Int case12_count = 0;
    std::vector<Int> case12_degree_equals_genus_plus_one;
    /// Case 12 genera with N > g'+1 where two_power_dataset attains N.
    Int case12_two_power_maximal = 0;
};

CaseBCensus caseB_census(Int limit, unsigned jobs = 1);

} // namespace dtroots
