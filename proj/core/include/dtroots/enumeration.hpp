#pragma once

#include "dtroots/dataset.hpp"
#include "dtroots/signature.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace dtroots {

/// genus_param is the data-set genus g for type A and g' = g/2 for type B.
struct GenusQuery {
    TwistType type;
    Int genus_param;
    std::optional<Int> degree;
};

/// Candidate degrees: odd n with 3 <= n <= g (type A) or 3 <= n <= 3g' (type B).
Int max_candidate_degree(TwistType type, Int genus_param) noexcept;

/// Streams every valid data set of the queried type and genus in the order
/// (n, g0, cone-order multiset, residues), each once. `visit` returns false
/// to stop early. Throws InvalidInput on a negative genus parameter (or a
/// zero one for type A).
void for_each_dataset(const GenusQuery& query, const std::function<bool(const DataSet&)>& visit);

std::vector<DataSet> enumerate_datasets(const GenusQuery& query);

/// Canonical representatives, one per equivalence class, sorted.
std::vector<DataSet> enumerate_classes(const GenusQuery& query);

/// Some data set of the given type, genus and degree, if one exists.
std::optional<DataSet> find_dataset(TwistType type, Int genus_param, Int degree);
std::optional<DataSet> find_dataset(TwistType type, Int genus_param, Int degree, SearchCache& cache);

/// Brute-force existence of a nontrivial root (a data set of any degree).
bool root_exists(TwistType type, Int genus_param);
bool root_exists(TwistType type, Int genus_param, SearchCache& cache);

/// Closed form: type A iff g = 3 or g >= 5; type B iff g' >= 2.
bool root_exists_closed_form(TwistType type, Int genus_param) noexcept;

} // namespace dtroots
