#ifndef DESCENT_KIT_CLASS_NUMBER_HPP
#define DESCENT_KIT_CLASS_NUMBER_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"

namespace descent_kit {

/// A primitive positive definite form a x^2 + b xy + c y^2 in reduced position:
/// |b| <= a <= c, and b >= 0 whenever |b| = a or a = c.
struct ReducedForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }

    friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

inline bool is_reduced(const ReducedForm& f)
{
    const std::int64_t abs_b = f.b < 0 ? -f.b : f.b;
    if (f.a <= 0 || abs_b > f.a || f.a > f.c)
        return false;
    if ((abs_b == f.a || f.a == f.c) && f.b < 0)
        return false;
    return true;
}

/// Field discriminant of Q(sqrt(-d)).
inline std::int64_t discriminant_of(std::int64_t d)
{
    if (d < 1 || !is_squarefree(BigInt(d)))
        throw std::invalid_argument("discriminant_of: d must be a positive squarefree integer, got "
                                    + std::to_string(d));
    return d % 4 == 3 ? -d : -4 * d;
}

/// All primitive reduced forms of negative discriminant D, ordered by (a, b).
///
/// A reduced form satisfies 3a^2 <= |D|, so scanning a up to sqrt(|D|/3) and
/// b in (-a, a] with the right parity is exhaustive.
inline std::vector<ReducedForm> reduced_forms(std::int64_t D)
{
    if (D >= 0 || (D % 4 != 0 && D % 4 != -3))
        throw std::invalid_argument("reduced_forms: D must be negative and congruent to 0 or 1 mod 4, got "
                                    + std::to_string(D));
    const std::int64_t absD = -D;
    std::vector<ReducedForm> forms;
    for (std::int64_t a = 1; 3 * a * a <= absD; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            const std::int64_t num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            const ReducedForm f{a, b, num / (4 * a)};
            if (!is_reduced(f))
                continue;
            if (std::gcd(std::gcd(f.a, f.b), f.c) != 1)
                continue;
            forms.push_back(f);
        }
    }
    return forms;
}

/// h(-d): the number of primitive reduced forms of the field discriminant.
inline std::int64_t class_number(std::int64_t d)
{
    return static_cast<std::int64_t>(reduced_forms(discriminant_of(d)).size());
}

} // namespace descent_kit

#endif // DESCENT_KIT_CLASS_NUMBER_HPP
