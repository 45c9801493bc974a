#ifndef DESCENT_KIT_REP_SOLVER_HPP
#define DESCENT_KIT_REP_SOLVER_HPP

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <vector>

#include "arith.hpp"

namespace descent_kit {

struct Representation {
    BigInt x;
    BigInt z;

    friend bool operator==(const Representation&, const Representation&) = default;
    friend auto operator<=>(const Representation& l, const Representation& r)
    {
        if (l.x != r.x)
            return l.x < r.x ? std::strong_ordering::less : std::strong_ordering::greater;
        if (l.z != r.z)
            return l.z < r.z ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

/// All positive (x, z) with x^2 + d z^2 = 2N, sorted by x. Enumerates z up to
/// sqrt(2N/d) and tests the remainder for squareness. With `coprime_only`,
/// keeps only pairs with gcd(x, dz) = 1.
inline std::vector<Representation> solve_rep(const BigInt& d, const BigInt& N, bool coprime_only = false)
{
    if (d < 1 || N < 1)
        throw std::invalid_argument("solve_rep: d and N must be positive");
    const BigInt target = 2 * N;
    std::vector<Representation> out;
    for (BigInt z = 1; d * z * z < target; ++z) {
        const auto x = perfect_square_root(target - d * z * z);
        if (!x)
            continue;
        if (coprime_only && gcd(*x, d * z) != 1)
            continue;
        out.push_back({*x, z});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace descent_kit

#endif // DESCENT_KIT_REP_SOLVER_HPP
