#pragma once

// Search machinery shared by the enumeration, max-degree and primary-root
// modules. A "signature" is the non-residue part of a data set: the base
// genus g0 and the multiset of cone orders. For a fixed degree n the genus
// equation is linear in the cone contributions n - n/n_i, so signatures are
// integer partitions over a small coin set; residue existence is decided
// separately by ResidueSolver.

#include "dtroots/dataset.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dtroots {

/// Genus contribution (n/d)(d-1) of one cone of order d at degree n.
constexpr Int cone_contribution(Int degree, Int order) noexcept
{
    return degree - degree / order;
}

/// The admissible cone orders at degree n: divisors d > 1, ascending.
std::vector<Int> cone_orders(Int degree);

/// Data-set genus for a query parameter: g for type A, 2g' for type B.
constexpr Int dataset_genus(TwistType type, Int genus_param) noexcept
{
    return type == TwistType::A ? genus_param : 2 * genus_param;
}

/// Reachability table for cone-order multisets at a fixed degree.
///
/// Row j records which remainders are sums of contributions of orders with
/// index >= j, so enumeration never enters a dead branch.
class SignatureTable {
public:
    SignatureTable(Int degree, std::vector<Int> orders, Int capacity);

    Int degree() const noexcept { return degree_; }
    Int capacity() const noexcept { return capacity_; }
    const std::vector<Int>& orders() const noexcept { return orders_; }

    bool reachable(Int remainder) const noexcept { return reachable_from(0, remainder); }

    /// Visits every non-decreasing order list whose contributions sum to
    /// `remainder`, in lexicographic order. `visit(std::span<const Int>)`
    /// returns false to stop; the function then returns false.
    template <class Visit>
    bool for_each_multiset(Int remainder, Visit&& visit) const
    {
        if (!reachable(remainder))
            return true;
        std::vector<Int> current;
        return walk(0, remainder, current, visit);
    }

private:
    bool reachable_from(std::size_t index, Int remainder) const noexcept;

    template <class Visit>
    bool walk(std::size_t index, Int remainder, std::vector<Int>& current, Visit& visit) const
    {
        if (remainder == 0)
            return visit(std::span<const Int>(current));
        for (std::size_t i = index; i < orders_.size(); ++i) {
            const Int next = remainder - contributions_[i];
            if (next < 0)
                break;
            if (!reachable_from(i, next))
                continue;
            current.push_back(orders_[i]);
            bool keep_going = walk(i, next, current, visit);
            current.pop_back();
            if (!keep_going)
                return false;
        }
        return true;
    }

    Int degree_;
    std::vector<Int> orders_;
    std::vector<Int> contributions_;
    Int capacity_;
    std::vector<std::vector<std::uint64_t>> reach_;
};

/// Decides and constructs residues (a, b, c_i) for a signature at a fixed
/// degree and type. Type A imposes no condition linking the cones to (a, b);
/// for type B the sum condition is decided with cyclic sumsets over Z/n.
///
/// Not thread-safe: per-order sets are cached lazily.
class ResidueSolver {
public:
    ResidueSolver(TwistType type, Int degree);
    ~ResidueSolver();
    ResidueSolver(ResidueSolver&&) noexcept;
    ResidueSolver& operator=(ResidueSolver&&) noexcept;

    TwistType type() const noexcept { return type_; }
    Int degree() const noexcept { return degree_; }

    /// Units (a, b) satisfying D3A (type A) or D3B (type B), ascending.
    const std::vector<std::pair<Int, Int>>& pairs() const noexcept { return pairs_; }

    bool feasible(std::span<const Int> orders) const;

    /// Lexicographically first (a, b) that extends to a full data set, with
    /// cone residues chosen greedily in ascending order.
    std::optional<DataSet> first_dataset(Int g0, std::span<const Int> orders) const;

    /// Visits every data set with this signature in lexicographic residue
    /// order. Residues of equal-order cones are non-decreasing, so each cone
    /// multiset appears once. Type B fixes the last cone residue from the
    /// sum condition. Returns false if `visit` stopped the walk.
    bool for_each_dataset(Int g0, std::span<const Int> orders,
                          const std::function<bool(const DataSet&)>& visit) const;

private:
    struct Impl;

    TwistType type_;
    Int degree_;
    std::vector<std::pair<Int, Int>> pairs_;
    std::unique_ptr<Impl> impl_;
};

struct Signature {
    Int g0;
    std::vector<Int> orders;

    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Per-thread memo of signature tables and residue solvers. Tables grow on
/// demand when a larger genus is requested.
class SearchCache {
public:
    const SignatureTable& table(Int degree, Int capacity, bool primary_only = false);
    const ResidueSolver& solver(TwistType type, Int degree);

private:
    std::map<std::pair<Int, bool>, std::unique_ptr<SignatureTable>> tables_;
    std::map<std::pair<int, Int>, std::unique_ptr<ResidueSolver>> solvers_;
};

/// Visits signatures of data-set genus `dataset_genus` at `degree`, with g0
/// ascending and order lists lexicographic. Signatures need not admit
/// residues. Returns false if `visit` stopped the walk.
bool for_each_signature(TwistType type, Int dataset_genus, Int degree, SearchCache& cache,
                        const std::function<bool(const Signature&)>& visit, bool primary_only = false);

/// First signature (in for_each_signature order) that admits residues, and
/// the data set built from it.
std::optional<DataSet> find_dataset_at_degree(TwistType type, Int dataset_genus, Int degree,
                                              SearchCache& cache, bool primary_only = false);

} // namespace dtroots
