#ifndef DESCENT_KIT_DESCENT_HPP
#define DESCENT_KIT_DESCENT_HPP

// Descent for x^2 + d z^2 = 2 y^p: a solution is written as
//
//   (x + z sqrt(-d)) / sqrt(2) = e1 * ((a + e2 b sqrt(-d)) / sqrt(2))^p
//
// with a^2 + b^2 d = 2y. This header expands such a power, recovers
// (a, b, e1, e2) from a solution, and carries the parity and congruence
// filters used to rule out the remaining cases.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"

namespace descent_kit {

enum class ParityVerdict { YMustBeOdd, YParityUnknown };

inline std::string_view to_string(ParityVerdict v)
{
    return v == ParityVerdict::YMustBeOdd ? "Y_MUST_BE_ODD" : "Y_PARITY_UNKNOWN";
}

/// With x and z odd, an even y forces d = 7 (mod 8).
inline ParityVerdict mod8_filter(const BigInt& d)
{
    if (d < 1 || (d & 1) == 0)
        throw std::invalid_argument("mod8_filter: d must be a positive odd integer, got " + d.str());
    return d % 8 == 7 ? ParityVerdict::YParityUnknown : ParityVerdict::YMustBeOdd;
}

/// A unit of the ring of integers of Q(sqrt(-d)), stored as (re + im sqrt(-d)) / den.
struct Unit {
    int re = 1;
    int im = 0;
    int den = 1;

    bool is_rational() const { return im == 0; }
    friend bool operator==(const Unit&, const Unit&) = default;
};

inline std::string to_string(const Unit& u)
{
    std::string s = "(" + std::to_string(u.re) + (u.im < 0 ? "-" : "+")
                    + std::to_string(u.im < 0 ? -u.im : u.im) + "*sqrt(-d))";
    if (u.den != 1)
        s += "/" + std::to_string(u.den);
    return s;
}

/// {+-1} in general, {+-1, +-i} for d = 1, the sixth roots of unity for d = 3.
/// Rational units come first.
inline std::vector<Unit> units_for(const BigInt& d)
{
    std::vector<Unit> units{{1, 0, 1}, {-1, 0, 1}};
    if (d == 1) {
        units.push_back({0, 1, 1});
        units.push_back({0, -1, 1});
    } else if (d == 3) {
        units.push_back({1, 1, 2});
        units.push_back({-1, 1, 2});
        units.push_back({1, -1, 2});
        units.push_back({-1, -1, 2});
    }
    return units;
}

struct DescentParams {
    BigInt a;
    BigInt b;
    Unit eps1;
    int eps2 = 1;
    BigInt d;
    BigInt y;
};

inline DescentParams make_descent_params(const BigInt& a, const BigInt& b, Unit eps1, int eps2,
                                         const BigInt& d)
{
    if (a < 1 || (a & 1) == 0 || b < 1 || (b & 1) == 0)
        throw std::invalid_argument("descent params: a and b must be positive odd integers");
    if (d < 1 || (d & 1) == 0 || !is_squarefree(d))
        throw std::invalid_argument("descent params: d must be a positive odd squarefree integer");
    if (eps2 != 1 && eps2 != -1)
        throw std::invalid_argument("descent params: eps2 must be +1 or -1");
    if (gcd(a, b * d) != 1)
        throw std::invalid_argument("descent params: gcd(a, bd) must be 1");
    bool unit_ok = false;
    for (const auto& u : units_for(d))
        unit_ok = unit_ok || u == eps1;
    if (!unit_ok)
        throw std::invalid_argument("descent params: " + to_string(eps1) + " is not a unit for d = " + d.str());
    return {a, b, eps1, eps2, d, (a * a + b * b * d) / 2};
}

/// Element u + v sqrt(-d) of Z[sqrt(-d)].
struct QuadInt {
    BigInt u;
    BigInt v;
};

inline QuadInt multiply(const QuadInt& l, const QuadInt& r, const BigInt& d)
{
    return {l.u * r.u - d * l.v * r.v, l.u * r.v + l.v * r.u};
}

inline QuadInt power(QuadInt base, unsigned exponent, const BigInt& d)
{
    QuadInt result{1, 0};
    while (exponent != 0) {
        if (exponent & 1u)
            result = multiply(result, base, d);
        exponent >>= 1;
        if (exponent != 0)
            base = multiply(base, base, d);
    }
    return result;
}

/// Signed coordinates (x, z) of e1 * ((a + e2 b sqrt(-d)) / sqrt(2))^p * sqrt(2),
/// or nothing when they are not integers.
inline std::optional<QuadInt> try_expand_signed(const DescentParams& params, unsigned p)
{
    const QuadInt raw = power({params.a, params.eps2 * params.b}, p, params.d);
    const QuadInt scaled = multiply({params.eps1.re, params.eps1.im}, raw, params.d);
    const BigInt denom = BigInt(params.eps1.den) << ((p - 1) / 2);
    if (scaled.u % denom != 0 || scaled.v % denom != 0)
        return std::nullopt;
    return QuadInt{scaled.u / denom, scaled.v / denom};
}

inline QuadInt expand_signed(const DescentParams& params, unsigned p)
{
    auto e = try_expand_signed(params, p);
    if (!e)
        throw std::logic_error("expand_pth_power: expansion not divisible by 2^((p-1)/2)");
    return *std::move(e);
}

struct Expansion {
    BigInt x;
    BigInt z;

    friend bool operator==(const Expansion&, const Expansion&) = default;
};

/// |x| and |z| with (x + z sqrt(-d)) / sqrt(2) = e1 ((a + e2 b sqrt(-d)) / sqrt(2))^p.
inline Expansion expand_pth_power(const DescentParams& params, unsigned p)
{
    if (p <= 3 || !is_prime(BigInt(p)))
        throw std::invalid_argument("expand_pth_power: p must be a prime greater than 3");
    const QuadInt e = expand_signed(params, p);
    return {abs_value(e.u), abs_value(e.v)};
}

/// Recovers (a, b, e1, e2) with the expansion reproducing (x, z) exactly.
///
/// b runs upward from 1 with a = sqrt(2y - b^2 d). Rational units are tried
/// over the whole b range before the non-rational ones, so for d = 1 the
/// representation with e1 = +-1 is reported when both exist.
inline std::optional<DescentParams> find_descent(const BigInt& x, const BigInt& z, const BigInt& d,
                                                 unsigned p)
{
    if (x < 1 || z < 1 || d < 1)
        throw std::invalid_argument("find_descent: x, z, d must be positive");
    if (p <= 3 || !is_prime(BigInt(p)))
        throw std::invalid_argument("find_descent: p must be a prime greater than 3");
    if (gcd(x, d * z) != 1)
        throw std::invalid_argument("find_descent: gcd(x, dz) must be 1");
    const BigInt norm = x * x + d * z * z;
    if ((norm & 1) != 0)
        throw std::invalid_argument("find_descent: x^2 + dz^2 is odd");
    const auto y = perfect_power_root(norm / 2, p);
    if (!y)
        throw std::invalid_argument("find_descent: (x^2 + dz^2)/2 is not a perfect p-th power");
    if ((d & 1) == 0 || !is_squarefree(d))
        return std::nullopt;

    const BigInt two_y = 2 * *y;
    const auto units = units_for(d);
    for (bool rational_pass : {true, false}) {
        for (BigInt b = 1; b * b * d < two_y; b += 2) {
            const auto a = perfect_square_root(two_y - b * b * d);
            if (!a || (*a & 1) == 0 || gcd(*a, b * d) != 1)
                continue;
            for (const auto& unit : units) {
                if (unit.is_rational() != rational_pass)
                    continue;
                for (int eps2 : {1, -1}) {
                    DescentParams candidate{*a, b, unit, eps2, d, *y};
                    const auto e = try_expand_signed(candidate, p);
                    if (e && e->u == x && e->v == z)
                        return candidate;
                }
            }
        }
    }
    return std::nullopt;
}

enum class DCase { D1, DP };

enum class CongruenceCase { D1M2Zero, D1General, DP };

enum class CongruenceConclusion { ForcesMZero, RequiresQPm1, NoConstraint };

inline std::string_view to_string(CongruenceCase c)
{
    switch (c) {
    case CongruenceCase::D1M2Zero: return "D1_M2_ZERO";
    case CongruenceCase::D1General: return "D1_GENERAL";
    case CongruenceCase::DP: return "DP";
    }
    return "?";
}

inline std::string_view to_string(CongruenceConclusion c)
{
    switch (c) {
    case CongruenceConclusion::ForcesMZero: return "FORCES_M_ZERO";
    case CongruenceConclusion::RequiresQPm1: return "REQUIRES_Q_PM1";
    case CongruenceConclusion::NoConstraint: return "NO_CONSTRAINT";
    }
    return "?";
}

/// Outcome of reading the imaginary-part identity modulo p (or p^2).
///
/// In the REQUIRES_Q_PM1 cases the reduction leaves p^(m1-m2-1) q^(n/2) = +-1
/// (mod p); this holds only if m1 = m2 + 1 and q^(n/2) = +-1 (mod p).
/// `admits_solution` is false whenever the congruence is contradicted.
struct CongruenceVerdict {
    CongruenceCase kind = CongruenceCase::D1M2Zero;
    CongruenceConclusion conclusion = CongruenceConclusion::NoConstraint;
    std::int64_t residue = 0; // q^(n/2) mod p
    bool residue_is_pm1 = false;
    std::int64_t forced_m1 = 0; // m2 + 1
    bool exponent_consistent = false;
    bool admits_solution = false;
};

inline CongruenceVerdict congruence_filter(DCase d_case, std::int64_t m1, std::int64_t m2, std::int64_t p,
                                           std::int64_t q, std::int64_t n)
{
    if (n < 0 || n % 2 != 0)
        throw std::invalid_argument("congruence_filter: n must be even, got " + std::to_string(n));
    if (m2 < 0 || m2 > m1)
        throw std::invalid_argument("congruence_filter: need 0 <= m2 <= m1");
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("congruence_filter: p must be a prime greater than 3");

    CongruenceVerdict v;
    v.residue = pow_mod(q, static_cast<std::uint64_t>(n / 2), p);
    v.residue_is_pm1 = v.residue == 1 || v.residue == p - 1;
    v.forced_m1 = m2 + 1;
    v.exponent_consistent = m1 == m2 + 1;

    if (d_case == DCase::D1 && m2 == 0) {
        // 2^((p-1)/2) p^(m/2) q^(n/2) = +-1 (mod p) leaves no room for m >= 1.
        v.kind = CongruenceCase::D1M2Zero;
        v.conclusion = CongruenceConclusion::ForcesMZero;
        v.admits_solution = m1 == 0;
        return v;
    }
    v.kind = d_case == DCase::D1 ? CongruenceCase::D1General : CongruenceCase::DP;
    v.conclusion = CongruenceConclusion::RequiresQPm1;
    v.admits_solution = v.residue_is_pm1 && v.exponent_consistent;
    return v;
}

} // namespace descent_kit

#endif // DESCENT_KIT_DESCENT_HPP
