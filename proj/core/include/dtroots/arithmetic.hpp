#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace dtroots {

using Int = std::int64_t;

/// Inputs to the congruence solvers are capped so that every product of two
/// residues fits comfortably in 64 bits.
inline constexpr Int kMaxModulus = 1'000'000;

/// Least non-negative representative of x modulo n (n >= 1).
constexpr Int floor_mod(Int x, Int n) noexcept
{
    Int r = x % n;
    return r < 0 ? r + n : r;
}

Int gcd(Int x, Int y) noexcept;

/// A residue class stored as its least non-negative representative.
class Residue {
public:
    Residue(Int value, Int modulus);

    Int value() const noexcept { return value_; }
    Int modulus() const noexcept { return modulus_; }
    bool is_unit() const noexcept { return gcd(value_, modulus_) == 1; }

    Residue operator-() const { return {-value_, modulus_}; }

    friend bool operator==(const Residue&, const Residue&) = default;
    friend auto operator<=>(const Residue&, const Residue&) = default;

private:
    Int value_;
    Int modulus_;
};

/// Inverse of x modulo n. Throws NotInvertible when gcd(x, n) != 1 and
/// InvalidInput when n < 1.
Residue mod_inverse(Int x, Int n);

/// Non-throwing variant of mod_inverse.
std::optional<Int> try_mod_inverse(Int x, Int n) noexcept;

/// A solution (a, b, c1) of
///   gcd(a,n) = gcd(b,n) = gcd(c1,n1) = 1,
///   b - a = ab (mod n),
///   a + b + c1 * (n / n1) = 0 (mod n).
struct CongruenceSolution {
    Residue a;
    Residue b;
    Residue c1;
    Int n;
    Int n1;

    bool satisfies_invariants() const noexcept;
};

/// Solves the system with n = n1 * d for odd n1, d >= 3. A solution exists
/// unless 3 | n1 and 3 does not divide d. The returned solution comes from the
/// CRT construction over the primes of n1; a residue scan is used only if that
/// construction fails to produce a valid triple.
std::optional<CongruenceSolution> solve_composite_system(Int n1, Int d);

/// The d = 1 case of the system: (a, b, c1) modulo n with gcd(c1, n) = 1.
/// Solvable iff n is not divisible by 3, in which case the solution is
/// ((n+3)/2, -3, (n+3)/2).
std::optional<CongruenceSolution> solve_simple_system(Int n);

/// Scans all a in [0, n) and returns the first solution of the system with
/// modulus n = n1 * d, or nothing. Cost O(n log n).
std::optional<CongruenceSolution> scan_congruence_system(Int n1, Int d);

// Elementary number theory used across the library. Trial division is
// adequate for the desk-scale inputs handled here.
std::vector<Int> prime_factors(Int n);
std::vector<Int> divisors(Int n);
bool is_prime(Int n);
int two_adic_valuation(Int n);
Int odd_part(Int n);

} // namespace dtroots
