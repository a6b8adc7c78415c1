#include "dtroots/arithmetic.hpp"

#include "dtroots/error.hpp"

#include <string>

namespace dtroots {

Int gcd(Int x, Int y) noexcept
{
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    while (y != 0) {
        Int t = x % y;
        x = y;
        y = t;
    }
    return x;
}

Residue::Residue(Int value, Int modulus) : value_(0), modulus_(modulus)
{
    if (modulus < 1)
        throw InvalidInput("residue modulus must be >= 1, got " + std::to_string(modulus));
    value_ = floor_mod(value, modulus);
}

std::optional<Int> try_mod_inverse(Int x, Int n) noexcept
{
    if (n < 1)
        return std::nullopt;
    Int r0 = n, r1 = floor_mod(x, n);
    Int s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1)
        return std::nullopt;
    return floor_mod(s0, n);
}

Residue mod_inverse(Int x, Int n)
{
    if (n < 1)
        throw InvalidInput("modulus must be >= 1");
    auto inv = try_mod_inverse(x, n);
    if (!inv)
        throw NotInvertible(std::to_string(x) + " is not invertible modulo " + std::to_string(n));
    return {*inv, n};
}

bool CongruenceSolution::satisfies_invariants() const noexcept
{
    if (n1 < 1 || n % n1 != 0)
        return false;
    if (a.modulus() != n || b.modulus() != n || c1.modulus() != n1)
        return false;
    if (!a.is_unit() || !b.is_unit() || !c1.is_unit())
        return false;
    const Int av = a.value(), bv = b.value();
    if (floor_mod(bv - av, n) != floor_mod(av * bv, n))
        return false;
    return floor_mod(av + bv + c1.value() * (n / n1), n) == 0;
}

namespace {

void check_odd_at_least_three(Int x, const char* name)
{
    if (x < 3 || x % 2 == 0)
        throw InvalidInput(std::string(name) + " must be an odd integer >= 3, got " + std::to_string(x));
}

CongruenceSolution make_solution(Int a, Int b, Int c1, Int n, Int n1)
{
    return {Residue(a, n), Residue(b, n), Residue(c1, n1), n, n1};
}

// Product of the distinct primes of `n` that satisfy `keep`.
template <class Pred>
Int radical_where(Int n, Pred keep)
{
    Int r = 1;
    for (Int p : prime_factors(n))
        if (keep(p))
            r *= p;
    return r;
}

// Constructive path: a1 is fixed modulo p (primes shared with `shared_with`)
// and modulo q (the remaining primes of n1), then b1 and c1 follow.
std::optional<CongruenceSolution> construct(Int n1, Int d)
{
    const Int n = n1 * d;
    const bool three_divides_n1 = n1 % 3 == 0;
    const Int shared_with = three_divides_n1 ? d / 3 : d;

    const Int p = radical_where(n1, [&](Int prime) { return shared_with % prime == 0; });
    const Int q = radical_where(n1, [&](Int prime) { return shared_with % prime != 0; });

    // a1 = target (mod q), a1 = 1 (mod p)
    Int target = 0;
    if (q > 1) {
        auto inv = try_mod_inverse(shared_with, q);
        if (!inv)
            return std::nullopt;
        target = three_divides_n1 ? floor_mod(-*inv, q) : floor_mod(-3 * *inv, q);
    }
    Int a1 = target;
    if (p > 1) {
        auto q_inv = try_mod_inverse(q, p);
        if (!q_inv)
            return std::nullopt;
        Int t = floor_mod((1 - target) * *q_inv, p);
        a1 = target + q * t;
    }
    a1 = floor_mod(a1, n1);

    auto denom_inv = try_mod_inverse(a1 * d + 1, n1);
    if (!denom_inv)
        return std::nullopt;
    const Int b1 = floor_mod(a1 * *denom_inv, n1);
    const Int c1 = floor_mod(-(a1 + b1), n1);

    auto sol = make_solution(a1 * d + 2, b1 * d - 2, c1, n, n1);
    if (!sol.satisfies_invariants())
        return std::nullopt;
    return sol;
}

} // namespace

std::optional<CongruenceSolution> scan_congruence_system(Int n1, Int d)
{
    const Int n = n1 * d;
    for (Int a = 1; a < n; ++a) {
        if (gcd(a, n) != 1)
            continue;
        // b(1 - a) = a forces 1 - a to be a unit, and then b is unique.
        auto inv = try_mod_inverse(1 - a, n);
        if (!inv)
            continue;
        const Int b = floor_mod(a * *inv, n);
        if (gcd(b, n) != 1)
            continue;
        const Int s = floor_mod(a + b, n);
        if (s % d != 0)
            continue;
        const Int c1 = floor_mod(-(s / d), n1);
        if (gcd(c1, n1) != 1)
            continue;
        return make_solution(a, b, c1, n, n1);
    }
    return std::nullopt;
}

std::optional<CongruenceSolution> solve_composite_system(Int n1, Int d)
{
    check_odd_at_least_three(n1, "n1");
    check_odd_at_least_three(d, "d");
    if (n1 > kMaxModulus / d)
        throw InvalidInput("n1 * d exceeds the modulus cap " + std::to_string(kMaxModulus));

    if (n1 % 3 == 0 && d % 3 != 0)
        return std::nullopt;
    if (auto sol = construct(n1, d))
        return sol;
    return scan_congruence_system(n1, d);
}

std::optional<CongruenceSolution> solve_simple_system(Int n)
{
    check_odd_at_least_three(n, "n");
    if (n > kMaxModulus)
        throw InvalidInput("n exceeds the modulus cap " + std::to_string(kMaxModulus));
    if (n % 3 == 0)
        return std::nullopt;
    const Int half = (n + 3) / 2;
    return make_solution(half, -3, half, n, n);
}

std::vector<Int> prime_factors(Int n)
{
    std::vector<Int> out;
    if (n < 2)
        return out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        out.push_back(p);
        while (n % p == 0)
            n /= p;
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

std::vector<Int> divisors(Int n)
{
    std::vector<Int> small, large;
    if (n < 1)
        return small;
    for (Int k = 1; k * k <= n; ++k) {
        if (n % k != 0)
            continue;
        small.push_back(k);
        if (k != n / k)
            large.push_back(n / k);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool is_prime(Int n)
{
    if (n < 2)
        return false;
    for (Int p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

int two_adic_valuation(Int n)
{
    if (n == 0)
        return 0;
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return v;
}

Int odd_part(Int n)
{
    if (n == 0)
        return 0;
    while (n % 2 == 0)
        n /= 2;
    return n;
}

} // namespace dtroots
