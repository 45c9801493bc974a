#ifndef DESCENT_KIT_LEHMER_HPP
#define DESCENT_KIT_LEHMER_HPP

// Lehmer pairs of the shape alpha = (a + b*sqrt(-d)) / sqrt(2), their
// Lehmer numbers, primitive divisors, and the small-index exception tables.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "sequences.hpp"

namespace descent_kit {

/// The pair (alpha, conj alpha) with alpha = (a + b*sqrt(-d)) / sqrt(2).
///
///   R = (alpha + conj alpha)^2 = 2a^2
///   S = (alpha - conj alpha)^2 = -2b^2 d
///   Q = alpha * conj alpha     = (a^2 + b^2 d) / 2
///
/// Only instances that form a genuine Lehmer pair are constructible: a and b
/// odd, d odd and squarefree, gcd(a, bd) = 1, gcd(R, Q) = 1 and Q > 1 (Q = 1
/// makes alpha / conj alpha a root of unity).
struct LehmerParams {
    BigInt a, b, d;
    BigInt R, S, Q;
};

class invalid_lehmer_params : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline LehmerParams make_params(const BigInt& a, const BigInt& b, const BigInt& d)
{
    if (a < 1 || (a & 1) == 0)
        throw invalid_lehmer_params("a must be a positive odd integer, got " + a.str());
    if (b < 1 || (b & 1) == 0)
        throw invalid_lehmer_params("b must be a positive odd integer, got " + b.str());
    if (d < 1 || (d & 1) == 0)
        throw invalid_lehmer_params("d must be a positive odd integer, got " + d.str());
    if (!is_squarefree(d))
        throw invalid_lehmer_params("d must be squarefree, got " + d.str());
    if (const BigInt g = gcd(a, b * d); g != 1)
        throw invalid_lehmer_params("gcd(a, bd) = " + g.str() + ", expected 1");
    LehmerParams out{a, b, d, 2 * a * a, -2 * b * b * d, (a * a + b * b * d) / 2};
    if (const BigInt g = gcd(out.R, out.Q); g != 1)
        throw invalid_lehmer_params("gcd(R, Q) = " + g.str() + ", not a Lehmer pair");
    if (out.Q == 1)
        throw invalid_lehmer_params("alpha / conj(alpha) is a root of unity");
    return out;
}

/// L_0 .. L_t by the two-step recurrence
///   L_k = R L_{k-1} - Q L_{k-2}   (k odd)
///   L_k =   L_{k-1} - Q L_{k-2}   (k even)
/// with L_0 = 0, L_1 = 1.
inline std::vector<BigInt> lehmer_numbers(const LehmerParams& params, unsigned t)
{
    std::vector<BigInt> out;
    out.reserve(t + 1);
    out.push_back(0);
    if (t == 0)
        return out;
    out.push_back(1);
    for (unsigned k = 2; k <= t; ++k) {
        BigInt next = (k % 2 == 1) ? params.R * out[k - 1] : out[k - 1];
        next -= params.Q * out[k - 2];
        out.push_back(std::move(next));
    }
    return out;
}

inline BigInt lehmer_number(const LehmerParams& params, unsigned t)
{
    if (t < 1)
        throw std::invalid_argument("lehmer_number: t must be positive");
    return lehmer_numbers(params, t).back();
}

/// Binomial expansion of (alpha^t - conj alpha^t) / (alpha - conj alpha) for odd t:
///   2^(1-t) * sum_{j odd} C(t,j) R^((t-j)/2) S^((j-1)/2)
inline BigInt lehmer_closed_form(const LehmerParams& params, unsigned t)
{
    if (t % 2 == 0)
        throw std::invalid_argument("lehmer_closed_form: t must be odd");
    BigInt sum = 0;
    BigInt binom = t; // C(t, 1)
    for (unsigned j = 1; j <= t; j += 2) {
        sum += binom * ipow(params.R, (t - j) / 2) * ipow(params.S, (j - 1) / 2);
        if (j + 2 <= t)
            binom = binom * (t - j) * (t - j - 1) / ((j + 1) * (j + 2));
    }
    const BigInt denom = BigInt(1) << (t - 1);
    if (sum % denom != 0)
        throw std::logic_error("lehmer_closed_form: binomial sum not divisible by 2^(t-1)");
    return sum / denom;
}

/// Primes dividing L_t but not (alpha^2 - conj alpha^2)^2 L_1 ... L_{t-1}.
///
/// The primitive part of L_t is isolated by dividing out every gcd with the
/// non-primitive product, then factored with a bounded budget. A composite
/// remainder that resists factoring is reported in `undetermined_cofactor`
/// rather than guessed at; it still proves a primitive divisor exists.
struct PrimitiveDivisorReport {
    BigInt lehmer_value;
    BigInt primitive_part = 1;
    std::vector<BigInt> primes;
    BigInt undetermined_cofactor = 1;

    bool exists() const { return primitive_part != 1; }
    bool complete() const { return undetermined_cofactor == 1; }
};

namespace detail {

inline void strip_common(BigInt& value, const BigInt& other)
{
    if (other == 0)
        return;
    for (BigInt g = gcd(value, other); g != 1; g = gcd(value, other))
        value /= g;
}

} // namespace detail

inline PrimitiveDivisorReport primitive_divisors(const LehmerParams& params, unsigned t,
                                                 std::uint64_t rho_budget = 2'000'000)
{
    if (t < 2)
        throw std::invalid_argument("primitive_divisors: t must be at least 2");
    const auto seq = lehmer_numbers(params, t);
    PrimitiveDivisorReport out;
    out.lehmer_value = seq[t];
    BigInt part = abs_value(seq[t]);
    // (alpha^2 - conj alpha^2)^2 = R * S
    detail::strip_common(part, params.R * params.S);
    for (unsigned i = 1; i < t && part != 1; ++i)
        detail::strip_common(part, seq[i]);
    out.primitive_part = part;
    if (part == 1)
        return out;
    auto pf = partial_factorize(part, 1'000'000, rho_budget);
    for (const auto& f : pf.found.factors)
        out.primes.push_back(f.prime);
    out.undetermined_cofactor = pf.cofactor;
    return out;
}

/// An entry (a, b) = ((alpha + conj alpha)^2, (alpha - conj alpha)^2) of the
/// tables of Lehmer pairs without primitive divisor.
struct ExceptionEntry {
    std::int64_t a_param = 0;
    std::int64_t b_param = 0;

    friend bool operator==(const ExceptionEntry&, const ExceptionEntry&) = default;
};

/// Parameters, up to equivalence, whose p-th Lehmer number has no primitive
/// divisor, for primes 7 <= p <= 29.
inline std::vector<ExceptionEntry> exception_table(std::int64_t p)
{
    if (p < 7 || p > 29)
        throw std::invalid_argument("exception_table: p must lie in [7, 29], got " + std::to_string(p));
    if (!is_prime(p))
        throw std::invalid_argument("exception_table: p must be prime, got " + std::to_string(p));
    if (p == 7)
        return {{1, -7}, {1, -19}, {3, -5}, {5, -7}, {13, -3}, {14, -22}};
    if (p == 13)
        return {{1, -7}};
    return {};
}

/// Equivalent pairs differ by a factor in {+-1, +-sqrt(-1)}, which maps
/// (R, S) to itself or to (-R, -S).
inline bool matches_exception(const LehmerParams& params, std::int64_t p)
{
    for (const auto& e : exception_table(p)) {
        if (params.R == e.a_param && params.S == e.b_param)
            return true;
        if (params.R == -e.a_param && params.S == -e.b_param)
            return true;
    }
    return false;
}

/// One parameter pair of the two families describing index-5 Lehmer numbers
/// without primitive divisor:
///   (F_{k-2e}, F_{k-2e} - 4F_k), k >= 3
///   (L_{k-2e}, L_{k-2e} - 4L_k), k != 1
struct Lehmer5Candidate {
    SequenceKind kind = SequenceKind::Fibonacci;
    std::int64_t k = 0;
    int eps = 1;
    BigInt a_param;
    BigInt b_param;
    /// a with a_param = 2a^2, if any.
    std::optional<BigInt> half_square_root;
    bool a_odd = false;
};

inline std::vector<Lehmer5Candidate> lehmer5_candidates(std::int64_t k_max)
{
    if (k_max < 3)
        throw std::invalid_argument("lehmer5_candidates: k_max must be at least 3");
    std::vector<Lehmer5Candidate> out;
    for (SequenceKind kind : {SequenceKind::Fibonacci, SequenceKind::Lucas}) {
        const auto seq = terms(kind, k_max + 2);
        std::vector<std::optional<BigInt>> two_x_squared(seq.size());
        for (const auto& hit : cohn_scan(kind, k_max + 2))
            two_x_squared[static_cast<std::size_t>(hit.k)] = hit.x;
        const std::int64_t k_min = kind == SequenceKind::Fibonacci ? 3 : 0;
        for (std::int64_t k = k_min; k <= k_max; ++k) {
            if (kind == SequenceKind::Lucas && k == 1)
                continue;
            for (int eps : {1, -1}) {
                const std::int64_t idx = k - 2 * eps;
                if (idx < 0)
                    continue;
                Lehmer5Candidate c;
                c.kind = kind;
                c.k = k;
                c.eps = eps;
                c.a_param = seq[static_cast<std::size_t>(idx)];
                c.b_param = c.a_param - 4 * seq[static_cast<std::size_t>(k)];
                c.half_square_root = two_x_squared[static_cast<std::size_t>(idx)];
                c.a_odd = c.half_square_root && (*c.half_square_root & 1) == 1;
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

/// Reads (2a^2, -2b^2 d) off a candidate: a from the first coordinate, then
/// b^2 d = -b_param / 2 split into square and squarefree part. Returns nothing
/// when the candidate does not come from a valid Lehmer pair of our shape.
inline std::optional<LehmerParams> candidate_params(const Lehmer5Candidate& c)
{
    if (!c.half_square_root || !c.a_odd || c.b_param >= 0 || (c.b_param & 1) != 0)
        return std::nullopt;
    const BigInt b2d = -c.b_param / 2;
    const auto split = squarefree_decompose(factorize(b2d));
    try {
        return make_params(*c.half_square_root, split.z, split.d);
    } catch (const invalid_lehmer_params&) {
        return std::nullopt;
    }
}

} // namespace descent_kit

#endif // DESCENT_KIT_LEHMER_HPP
