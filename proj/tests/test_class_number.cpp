#include <gtest/gtest.h>

#include <descent_kit/class_number.hpp>

using namespace descent_kit;

namespace {

// Reference count without the sqrt(|D|/3) bound: every a up to |D|, with
// reduction checked from the definition.
std::vector<ReducedForm> unbounded_scan(std::int64_t D)
{
    std::vector<ReducedForm> out;
    for (std::int64_t a = 1; a <= -D; ++a)
        for (std::int64_t b = -a; b <= a; ++b) {
            if ((b * b - D) % (4 * a) != 0)
                continue;
            const std::int64_t c = (b * b - D) / (4 * a);
            const bool reduced = -a < b && b <= a && a <= c && !(a == c && b < 0);
            if (reduced && std::gcd(std::gcd(a, b), c) == 1)
                out.push_back({a, b, c});
        }
    return out;
}

} // namespace

TEST(DiscriminantOf, Examples)
{
    EXPECT_EQ(discriminant_of(85), -340);
    EXPECT_EQ(discriminant_of(7), -7);
    EXPECT_EQ(discriminant_of(1), -4);
    EXPECT_THROW(discriminant_of(12), std::invalid_argument);
    EXPECT_THROW(discriminant_of(0), std::invalid_argument);
}

TEST(ClassNumber, Examples)
{
    EXPECT_EQ(class_number(1), 1);
    EXPECT_EQ(class_number(5), 2);
    EXPECT_EQ(class_number(85), 4);
    EXPECT_EQ(reduced_forms(-20), (std::vector<ReducedForm>{{1, 0, 5}, {2, 2, 3}}));
    EXPECT_EQ(reduced_forms(-340), (std::vector<ReducedForm>{{1, 0, 85}, {2, 2, 43}, {5, 0, 17}, {10, 10, 11}}));
    EXPECT_THROW(class_number(4), std::invalid_argument);
}

TEST(ClassNumber, ClassNumberOneFields)
{
    for (std::int64_t d : {1, 2, 3, 7, 11, 19, 43, 67, 163})
        EXPECT_EQ(class_number(d), 1) << d;
    EXPECT_EQ(class_number(21), 4);
    EXPECT_EQ(class_number(23), 3);
}

TEST(ClassNumber, BoundedScanIsExhaustive)
{
    for (std::int64_t D = -3; D >= -2000; --D) {
        if (D % 4 != 0 && D % 4 != -3)
            continue;
        const auto forms = reduced_forms(D);
        ASSERT_EQ(forms, unbounded_scan(D)) << D;
        for (const auto& f : forms) {
            ASSERT_EQ(f.discriminant(), D);
            ASSERT_LE(3 * f.a * f.a, -D);
        }
    }
}

TEST(ClassNumber, BelowPrimeForPrimes)
{
    for (std::int64_t p = 2; p < 300; ++p)
        if (is_prime(p)) {
            EXPECT_LT(class_number(p), p) << p;
        }
}
