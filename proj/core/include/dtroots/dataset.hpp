#pragma once

#include "dtroots/arithmetic.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dtroots {

/// Type A: the complement of the twist circle is nonorientable.
/// Type B: the complement is orientable (only for even surface genus).
enum class TwistType { A, B };

char to_char(TwistType type) noexcept;
std::optional<TwistType> parse_twist_type(std::string_view text) noexcept;

/// A cone point of the quotient orbifold: residue c modulo its order.
/// Ordered by (order, c), which is the normal form for cone lists.
struct ConePoint {
    Int order;
    Int c;

    friend bool operator==(const ConePoint&, const ConePoint&) = default;
    friend auto operator<=>(const ConePoint&, const ConePoint&) = default;
};

/// The arithmetic invariant (n, g0, (a,b); (c_1,n_1), ..., (c_m,n_m)) of a
/// root conjugacy class.
///
/// Construction only normalizes: residues are reduced to [0, modulus) and the
/// cone list is sorted by (order, c). Conditions D1-D4B are checked by
/// validate(), not by the constructor, so invalid tuples can be represented
/// and reported on.
class DataSet {
public:
    /// Throws InvalidInput if n < 1 or any cone order is < 1.
    DataSet(TwistType type, Int n, Int g0, Int a, Int b, std::vector<ConePoint> cones = {});

    TwistType type() const noexcept { return type_; }
    Int degree() const noexcept { return n_; }
    Int base_genus() const noexcept { return g0_; }
    Int a() const noexcept { return a_; }
    Int b() const noexcept { return b_; }
    const std::vector<ConePoint>& cones() const noexcept { return cones_; }

    // Total order: type, n, g0, a, b, then cone list lexicographically.
    friend bool operator==(const DataSet&, const DataSet&) = default;
    friend auto operator<=>(const DataSet&, const DataSet&) = default;

private:
    TwistType type_;
    Int n_;
    Int g0_;
    Int a_;
    Int b_;
    std::vector<ConePoint> cones_;
};

enum class Condition { D1, D2, D3A, D3B, D4B };

std::string_view to_string(Condition condition) noexcept;

struct ValidationReport {
    std::vector<Condition> violations;

    bool valid() const noexcept { return violations.empty(); }
    bool violates(Condition c) const noexcept;
};

/// Reports exactly the violated conditions among D1, D2 and D3A (type A) or
/// D3B, D4B (type B). D4B counts as violated when some cone order does not
/// divide n, since its sum is then undefined.
ValidationReport validate(const DataSet& ds);
bool is_valid(const DataSet& ds);

/// Data-set genus: g0*n + sum (n/n_i)(n_i - 1) for type A and
/// 2*g0*n + sum (n/n_i)(n_i - 1) for type B. Throws InvalidDataSet.
Int genus(const DataSet& ds);

/// Closure of {ds} under the equivalence moves, as a sorted duplicate-free
/// list. Type B: the involution (a,b,c_i) -> (-b,-a,-c_i). Type A: swapping a
/// and b (when b+a = ab), (a,b) -> (-b,-a) (when b-a = ab), negating b, and
/// negating a single c_i. Reordering cones is absorbed by normalization.
/// Throws InvalidDataSet.
std::vector<DataSet> equivalence_orbit(const DataSet& ds);

/// Lexicographically least member of equivalence_orbit(ds). Computed without
/// materializing the orbit: for type A the (a,b) moves and the cone sign
/// flips act independently.
DataSet canonical_form(const DataSet& ds);

/// Throws TypeMismatch when the types differ, InvalidDataSet when either
/// argument is invalid.
bool are_equivalent(const DataSet& x, const DataSet& y);

/// Renders "A(n,g0,(a,b);(c1,n1),...)". Residues are printed in [0, modulus).
std::string to_string(const DataSet& ds);

/// Renders the tuple without the type prefix, in the style
/// "(3,4,(2,2);(1,3),(1,3))".
std::string to_tuple_string(const DataSet& ds);

/// Parses "A(3,4,(2,2);(1,3),(1,3))". Residues may be negative. Whitespace
/// is ignored. Throws InvalidInput on malformed text.
DataSet parse_dataset(std::string_view text);

} // namespace dtroots
