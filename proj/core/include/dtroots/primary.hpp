#pragma once

#include "dtroots/dataset.hpp"
#include "dtroots/signature.hpp"

namespace dtroots {

/// A primary-root question: is there a data set of this type and genus
/// whose cones all have order equal to the degree?
struct PrimaryQuery {
    TwistType type;
    Int degree;
    Int genus_param;
};

/// True iff every cone order equals the degree. Throws InvalidDataSet for
/// invalid input.
bool is_primary(const DataSet& ds);

/// Counting criterion: g = g0*n + m(n-1) with g0 >= 1 (type A), or
/// 2g' = 2*g0*n + m(n-1) with (g0, m) != (0, 0) and no single cone when
/// 3 | n (type B). Throws InvalidInput unless the degree is odd and >= 3.
bool primary_exists_closed_form(const PrimaryQuery& q);

/// Search restricted to cones of full order.
bool primary_exists_bruteforce(const PrimaryQuery& q);
bool primary_exists_bruteforce(const PrimaryQuery& q, SearchCache& cache);

bool degree3_exists(TwistType type, Int genus_param);
bool degree3_exists(TwistType type, Int genus_param, SearchCache& cache);

/// Explicit primary data set with base genus g0 and m cones.
/// Type A: (n, g0, (2,2); (4,n) x m).
/// Type B: (2,-2) with cones -4, 4, -4, ... for even m, the same ending in
/// 2, 2 for odd m >= 3, and ((n+3)/2, -3; ((n+3)/2, n)) for m = 1.
/// Throws Unconstructible for type B with m = 1 and 3 | n, InvalidInput for
/// other parameters outside the admissible range.
DataSet construction_dataset(TwistType type, Int degree, Int g0, Int m);

} // namespace dtroots
