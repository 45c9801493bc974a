#ifndef DESCENT_KIT_ARITH_HPP
#define DESCENT_KIT_ARITH_HPP

// Exact integer utilities shared by every other header: integer roots,
// primality, factorization and squarefree decomposition.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace descent_kit {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs_value(const BigInt& n) { return n < 0 ? BigInt(-n) : n; }

inline BigInt gcd(const BigInt& a, const BigInt& b)
{
    return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

inline BigInt ipow(BigInt base, unsigned exponent)
{
    BigInt result = 1;
    while (exponent != 0) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1;
        if (exponent != 0)
            base *= base;
    }
    return result;
}

inline std::string to_string(const BigInt& n) { return n.str(); }

/// Floor of the square root, by integer Newton iteration.
inline BigInt isqrt(const BigInt& n)
{
    if (n < 0)
        throw std::invalid_argument("isqrt: negative argument");
    if (n < 2)
        return n;
    // Start strictly above the root so the iteration decreases monotonically.
    BigInt x = BigInt(1) << (boost::multiprecision::msb(n) / 2 + 1);
    for (;;) {
        BigInt y = (x + n / x) >> 1;
        if (y >= x)
            return x;
        x = std::move(y);
    }
}

/// Floor of the k-th root (k >= 1), by integer Newton iteration.
inline BigInt iroot(const BigInt& n, unsigned k)
{
    if (k == 0)
        throw std::invalid_argument("iroot: zero index");
    if (n < 0)
        throw std::invalid_argument("iroot: negative argument");
    if (k == 1 || n < 2)
        return n;
    if (k == 2)
        return isqrt(n);
    BigInt x = BigInt(1) << (boost::multiprecision::msb(n) / k + 1);
    for (;;) {
        BigInt y = ((k - 1) * x + n / ipow(x, k - 1)) / k;
        if (y >= x)
            return x;
        x = std::move(y);
    }
}

namespace detail {

// Quadratic-residue masks: a square must be a residue modulo each of these.
inline bool passes_square_residue_filters(const BigInt& n)
{
    static const auto masks = [] {
        struct Mask {
            unsigned modulus;
            std::vector<bool> residue;
        };
        std::vector<Mask> out;
        for (unsigned m : {64u, 63u, 65u, 11u}) {
            Mask mask{m, std::vector<bool>(m, false)};
            for (unsigned r = 0; r < m; ++r)
                mask.residue[(r * r) % m] = true;
            out.push_back(std::move(mask));
        }
        return out;
    }();
    for (const auto& mask : masks) {
        const auto r = static_cast<unsigned>(n % mask.modulus);
        if (!mask.residue[r])
            return false;
    }
    return true;
}

} // namespace detail

/// Returns r with r*r == n, or nothing if n is not a perfect square.
inline std::optional<BigInt> perfect_square_root(const BigInt& n)
{
    if (n < 0)
        return std::nullopt;
    if (!detail::passes_square_residue_filters(n))
        return std::nullopt;
    BigInt r = isqrt(n);
    if (r * r == n)
        return r;
    return std::nullopt;
}

/// Returns r with r^k == n, or nothing.
inline std::optional<BigInt> perfect_power_root(const BigInt& n, unsigned k)
{
    if (n < 0)
        return std::nullopt;
    BigInt r = iroot(n, k);
    if (ipow(r, k) == n)
        return r;
    return std::nullopt;
}

namespace detail {

inline const std::vector<std::uint32_t>& small_primes()
{
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

inline bool miller_rabin_round(const BigInt& n, const BigInt& n_minus_1,
                               const BigInt& odd_part, unsigned twos, const BigInt& base)
{
    BigInt x = boost::multiprecision::powm(base, odd_part, n);
    if (x == 1 || x == n_minus_1)
        return true;
    for (unsigned i = 1; i < twos; ++i) {
        x = (x * x) % n;
        if (x == n_minus_1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

} // namespace detail

/// Miller-Rabin with the first 13 prime bases: deterministic below 3.3e24,
/// a strong probable-prime test above that.
inline bool is_prime(const BigInt& n)
{
    if (n < 2)
        return false;
    static constexpr unsigned bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned b : bases) {
        if (n == b)
            return true;
        if (n % b == 0)
            return false;
    }
    const BigInt n_minus_1 = n - 1;
    const unsigned twos = boost::multiprecision::lsb(n_minus_1);
    const BigInt odd_part = n_minus_1 >> twos;
    for (unsigned b : bases)
        if (!detail::miller_rabin_round(n, n_minus_1, odd_part, twos, BigInt(b)))
            return false;
    return true;
}

inline bool is_prime(std::int64_t n) { return is_prime(BigInt(n)); }

struct PrimePower {
    BigInt prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer together with its prime factorization, primes ascending.
struct Factorization {
    BigInt value = 1;
    std::vector<PrimePower> factors;

    BigInt product() const
    {
        BigInt out = 1;
        for (const auto& f : factors)
            out *= ipow(f.prime, f.exponent);
        return out;
    }
};

/// Result of a factorization attempt with a work budget. `cofactor` is the
/// part left unsplit (1 when the factorization is complete); it is known to
/// be composite whenever it is not 1.
struct PartialFactorization {
    Factorization found;
    BigInt cofactor = 1;

    bool complete() const { return cofactor == 1; }
};

namespace detail {

inline void add_factor(std::vector<PrimePower>& factors, const BigInt& prime, unsigned exponent)
{
    for (auto& f : factors) {
        if (f.prime == prime) {
            f.exponent += exponent;
            return;
        }
    }
    factors.push_back({prime, exponent});
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n, or nothing once `budget` multiplications are spent.
inline std::optional<BigInt> pollard_brent(const BigInt& n, std::uint64_t budget, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uint64_t spent = 0;
    while (spent < budget) {
        const BigInt c = BigInt(rng() % 1'000'003u) + 1;
        BigInt y = BigInt(rng()) % n;
        BigInt g = 1, q = 1, x, ys;
        constexpr std::uint64_t block = 128;
        for (std::uint64_t r = 1; g == 1 && spent < budget; r <<= 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                y = (y * y + c) % n;
            for (std::uint64_t k = 0; k < r && g == 1; k += block) {
                ys = y;
                const std::uint64_t steps = std::min(block, r - k);
                for (std::uint64_t i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    q = (q * abs_value(x - y)) % n;
                }
                spent += steps;
                g = gcd(q, n);
            }
        }
        if (g == n) {
            // Backtrack one step at a time from the last saved point.
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs_value(x - ys), n);
            } while (g == 1);
        }
        if (g != 1 && g != n)
            return g;
    }
    return std::nullopt;
}

inline void split_cofactor(const BigInt& n, std::vector<PrimePower>& factors,
                           std::vector<BigInt>& stuck, std::uint64_t budget)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        add_factor(factors, n, 1);
        return;
    }
    if (auto root = perfect_square_root(n)) {
        std::vector<PrimePower> sub;
        std::vector<BigInt> sub_stuck;
        split_cofactor(*root, sub, sub_stuck, budget);
        for (const auto& f : sub)
            add_factor(factors, f.prime, 2 * f.exponent);
        for (const auto& s : sub_stuck) {
            stuck.push_back(s);
            stuck.push_back(s);
        }
        return;
    }
    auto factor = pollard_brent(n, budget, static_cast<std::uint64_t>(boost::multiprecision::msb(n)));
    if (!factor) {
        stuck.push_back(n);
        return;
    }
    split_cofactor(*factor, factors, stuck, budget);
    split_cofactor(n / *factor, factors, stuck, budget);
}

} // namespace detail

/// Trial division by primes up to `trial_bound` (at most 10^6), then
/// primality testing and Pollard rho on what remains, spending at most
/// `rho_budget` modular multiplications per cofactor.
inline PartialFactorization partial_factorize(const BigInt& n, std::uint32_t trial_bound,
                                              std::uint64_t rho_budget)
{
    if (n <= 0)
        throw std::invalid_argument("factorize: argument must be positive");
    PartialFactorization out;
    out.found.value = n;
    BigInt rest = n;
    for (std::uint32_t p : detail::small_primes()) {
        if (p > trial_bound)
            break;
        if (BigInt(p) * p > rest)
            break;
        if (rest % p != 0)
            continue;
        unsigned e = 0;
        do {
            rest /= p;
            ++e;
        } while (rest % p == 0);
        out.found.factors.push_back({BigInt(p), e});
    }
    std::vector<BigInt> stuck;
    detail::split_cofactor(rest, out.found.factors, stuck, rho_budget);
    for (const auto& s : stuck)
        out.cofactor *= s;
    std::sort(out.found.factors.begin(), out.found.factors.end(),
              [](const PrimePower& l, const PrimePower& r) { return l.prime < r.prime; });
    return out;
}

/// Complete factorization of n >= 1; n == 1 gives an empty factor list.
inline Factorization factorize(const BigInt& n)
{
    auto partial = partial_factorize(n, 1u << 16, ~std::uint64_t{0});
    return std::move(partial.found);
}

/// n = d * z^2 with d squarefree.
struct SquarefreeSplit {
    BigInt d = 1;
    BigInt z = 1;

    friend bool operator==(const SquarefreeSplit&, const SquarefreeSplit&) = default;
};

inline SquarefreeSplit squarefree_decompose(const Factorization& f)
{
    SquarefreeSplit out;
    for (const auto& pp : f.factors) {
        if (pp.exponent % 2 == 1)
            out.d *= pp.prime;
        out.z *= ipow(pp.prime, pp.exponent / 2);
    }
    return out;
}

inline bool is_squarefree(const BigInt& n)
{
    if (n < 1)
        return false;
    for (const auto& f : factorize(n).factors)
        if (f.exponent > 1)
            return false;
    return true;
}

/// Non-negative residue of base^exponent modulo m (m >= 1).
inline std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t m)
{
    BigInt r = boost::multiprecision::powm(BigInt(((base % m) + m) % m), BigInt(exponent), BigInt(m));
    return static_cast<std::int64_t>(r);
}

} // namespace descent_kit

#endif // DESCENT_KIT_ARITH_HPP
