#ifndef DESCENT_KIT_ORACLE_HPP
#define DESCENT_KIT_ORACLE_HPP

// Decision procedure for x^2 + p^m q^n = 2 y^p with gcd(x, y) = 1.
//
// For n odd the equation has no solution when d != 7 (mod 8) and
// gcd(p, h(-d)) = 1, apart from (p, q, x, y, m, n) = (5, 17, 21417, 47, 3, 1).
// For n even it has none when q^(n/2) != +-1 (mod p) and either m is even or
// p != 7 (mod 8). Everything else is reported as inconclusive; the oracle
// never claims more than these hypotheses give.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"
#include "class_number.hpp"

namespace descent_kit {

struct EquationInstance {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t m = 0;
    std::int64_t n = 0;

    friend bool operator==(const EquationInstance&, const EquationInstance&) = default;
};

inline EquationInstance make_instance(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t n)
{
    if (p <= 3 || !is_prime(p))
        throw std::invalid_argument("p must be a prime greater than 3, got " + std::to_string(p));
    if (q < 3 || !is_prime(q))
        throw std::invalid_argument("q must be an odd prime, got " + std::to_string(q));
    if (p == q)
        throw std::invalid_argument("p and q must be distinct");
    if (m < 0 || n < 0)
        throw std::invalid_argument("m and n must be non-negative");
    return {p, q, m, n};
}

/// p^m q^n = d z^2 with d in {1, p, q, pq} and z = p^floor(m/2) q^floor(n/2).
inline SquarefreeSplit instance_split(const EquationInstance& inst)
{
    SquarefreeSplit out;
    if (inst.m % 2 == 1)
        out.d *= inst.p;
    if (inst.n % 2 == 1)
        out.d *= inst.q;
    out.z = ipow(BigInt(inst.p), static_cast<unsigned>(inst.m / 2))
            * ipow(BigInt(inst.q), static_cast<unsigned>(inst.n / 2));
    return out;
}

enum class VerdictTag { NoSolutionByTheorem, KnownExceptional, Inconclusive };

inline std::string_view to_string(VerdictTag t)
{
    switch (t) {
    case VerdictTag::NoSolutionByTheorem: return "NO_SOLUTION_BY_THEOREM";
    case VerdictTag::KnownExceptional: return "KNOWN_EXCEPTIONAL";
    case VerdictTag::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

struct Condition {
    std::string name;
    bool holds = false;
    std::string detail;

    friend bool operator==(const Condition&, const Condition&) = default;
};

struct Verdict {
    VerdictTag tag = VerdictTag::Inconclusive;
    std::vector<Condition> reasons;
    BigInt d;
    BigInt z;
    std::int64_t h = 0;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

inline bool is_known_exceptional(const EquationInstance& inst)
{
    return inst == EquationInstance{5, 17, 3, 1};
}

inline Verdict classify(const EquationInstance& inst)
{
    if (inst.m < 1 || inst.n < 1)
        throw std::invalid_argument("classify: m and n must both be positive");
    const auto split = instance_split(inst);
    Verdict v;
    v.d = split.d;
    v.z = split.z;
    v.h = class_number(static_cast<std::int64_t>(split.d));
    const bool h_coprime = std::gcd(inst.p, v.h) == 1;
    const std::string h_detail = "h(-" + split.d.str() + ") = " + std::to_string(v.h);

    if (inst.n % 2 == 1) {
        const auto d_mod_8 = static_cast<int>(split.d % 8);
        v.reasons.push_back({"n_odd", true, ""});
        v.reasons.push_back({"d_not_7_mod_8", d_mod_8 != 7, "d = " + std::to_string(d_mod_8) + " (mod 8)"});
        v.reasons.push_back({"gcd_p_h_is_1", h_coprime, h_detail});
    } else {
        const std::int64_t residue = pow_mod(inst.q, static_cast<std::uint64_t>(inst.n / 2), inst.p);
        v.reasons.push_back({"n_even", true, ""});
        v.reasons.push_back({"q_half_n_not_pm1_mod_p", residue != 1 && residue != inst.p - 1,
                             "q^(n/2) = " + std::to_string(residue) + " (mod p)"});
        if (inst.m % 2 == 0) {
            v.reasons.push_back({"m_even", true, ""});
        } else {
            v.reasons.push_back({"p_not_7_mod_8", inst.p % 8 != 7, "p = " + std::to_string(inst.p % 8) + " (mod 8)"});
        }
        // d is 1 or p here, so h(-d) < p and the gcd condition is automatic.
        v.reasons.push_back({"gcd_p_h_is_1", h_coprime, h_detail});
    }

    bool all_hold = true;
    for (const auto& r : v.reasons)
        all_hold = all_hold && r.holds;
    if (!all_hold)
        v.tag = VerdictTag::Inconclusive;
    else if (is_known_exceptional(inst))
        v.tag = VerdictTag::KnownExceptional;
    else
        v.tag = VerdictTag::NoSolutionByTheorem;
    return v;
}

/// x^2 + p^m q^n = 2 y^N with p | N is the same problem with Y = y^(N/p).
struct ExponentReduction {
    EquationInstance instance;
    std::int64_t factor = 1; // N / p
};

inline ExponentReduction reduce_exponent(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t n,
                                         std::int64_t N)
{
    if (N < 1 || N % p != 0)
        throw std::invalid_argument("reduce_exponent: p = " + std::to_string(p) + " does not divide N = "
                                    + std::to_string(N));
    return {make_instance(p, q, m, n), N / p};
}

/// x^2 + p^(2m) (p+2)^(2p) = 2 y^p for twin primes (p, p+2).
///
/// By Fermat, (p+2)^p = 2 (mod p), and 2 != +-1 (mod p) for p >= 5, so the
/// even-exponent branch applies with m even.
inline Verdict twin_prime_verdict(std::int64_t p, std::int64_t m)
{
    if (p <= 3 || !is_prime(p) || !is_prime(p + 2))
        throw std::invalid_argument("twin_prime_verdict: p and p + 2 must both be primes greater than 3, got p = "
                                    + std::to_string(p));
    if (m < 1)
        throw std::invalid_argument("twin_prime_verdict: m must be positive");
    const auto inst = make_instance(p, p + 2, 2 * m, 2 * p);
    const std::int64_t residue = pow_mod(p + 2, static_cast<std::uint64_t>(p), p);
    if (residue != 2)
        throw std::logic_error("twin_prime_verdict: (p+2)^p is not 2 mod p");
    Verdict v = classify(inst);
    v.reasons.insert(v.reasons.begin(), Condition{"fermat_residue_is_2", true, "(p+2)^p = 2 (mod p)"});
    return v;
}

} // namespace descent_kit

#endif // DESCENT_KIT_ORACLE_HPP
