#include <random>

#include <gtest/gtest.h>

#include <descent_kit/arith.hpp>

using namespace descent_kit;

namespace {

// Reference: peel factors off by plain repeated division.
std::vector<PrimePower> naive_factor(std::uint64_t n)
{
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            out.push_back({BigInt(p), e});
    }
    if (n > 1)
        out.push_back({BigInt(n), 1});
    return out;
}

} // namespace

TEST(Factorize, KnownValues)
{
    const auto f = factorize(2125);
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.factors[0], (PrimePower{5, 3}));
    EXPECT_EQ(f.factors[1], (PrimePower{17, 1}));

    EXPECT_TRUE(factorize(1).factors.empty());

    const auto g = factorize(BigInt(458690014));
    ASSERT_EQ(g.factors.size(), 2u);
    EXPECT_EQ(g.factors[0], (PrimePower{2, 1}));
    EXPECT_EQ(g.factors[1], (PrimePower{47, 5}));
}

TEST(Factorize, RejectsZero)
{
    EXPECT_THROW(factorize(0), std::invalid_argument);
    EXPECT_THROW(factorize(-3), std::invalid_argument);
}

TEST(Factorize, LargeCofactorsNeedRho)
{
    // Two primes above the trial-division bound.
    const BigInt p("1000000007"), q("998244353");
    const auto f = factorize(p * q * q);
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.factors[0], (PrimePower{q, 2}));
    EXPECT_EQ(f.factors[1], (PrimePower{p, 1}));
}

TEST(Factorize, PropertyReassemblesRandomValues)
{
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000'000);
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t n = dist(rng);
        const auto f = factorize(n);
        EXPECT_EQ(f.product(), n);
        EXPECT_EQ(f.factors, naive_factor(n)) << n;
        for (std::size_t j = 0; j < f.factors.size(); ++j) {
            EXPECT_TRUE(is_prime(f.factors[j].prime));
            if (j > 0) {
                EXPECT_LT(f.factors[j - 1].prime, f.factors[j].prime);
            }
        }
    }
}

TEST(PartialFactorize, ReportsStuckCofactor)
{
    // Product of two ~40-bit primes with no rho budget left over.
    const BigInt p("1099511627791"), q("1099511627803");
    ASSERT_TRUE(is_prime(p));
    ASSERT_TRUE(is_prime(q));
    const auto pf = partial_factorize(p * q * 3, 1000, 0);
    EXPECT_FALSE(pf.complete());
    EXPECT_EQ(pf.cofactor, p * q);
    ASSERT_EQ(pf.found.factors.size(), 1u);
    EXPECT_EQ(pf.found.factors[0].prime, 3);
}

TEST(SquarefreeDecompose, Examples)
{
    EXPECT_EQ(squarefree_decompose(factorize(2125)), (SquarefreeSplit{85, 5}));
    EXPECT_EQ(squarefree_decompose(factorize(1)), (SquarefreeSplit{1, 1}));
    EXPECT_EQ(squarefree_decompose(factorize(81)), (SquarefreeSplit{1, 9}));
}

TEST(SquarefreeDecompose, PropertyRandom)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> dist(1, 100'000'000);
    for (int i = 0; i < 300; ++i) {
        const BigInt n = dist(rng);
        const auto s = squarefree_decompose(factorize(n));
        EXPECT_EQ(s.d * s.z * s.z, n);
        EXPECT_TRUE(is_squarefree(s.d));
    }
}

TEST(PerfectSquareRoot, Examples)
{
    EXPECT_EQ(perfect_square_root(6241), BigInt(79));
    EXPECT_EQ(perfect_square_root(0), BigInt(0));
    EXPECT_EQ(perfect_square_root(2), std::nullopt);
    EXPECT_EQ(perfect_square_root(-4), std::nullopt);
}

TEST(PerfectSquareRoot, PropertyRandomSquares)
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000'000'000'000'000ull);
    for (int i = 0; i < 2000; ++i) {
        const BigInt r = dist(rng);
        EXPECT_EQ(perfect_square_root(r * r), r);
        EXPECT_EQ(perfect_square_root(r * r + 1), std::nullopt);
        EXPECT_EQ(perfect_square_root(r * r - 1), r == 1 ? std::optional<BigInt>(0) : std::nullopt);
    }
}

TEST(PerfectSquareRoot, HugeValues)
{
    const BigInt r = ipow(BigInt(10), 50) + 12345;
    EXPECT_EQ(perfect_square_root(r * r), r);
    EXPECT_EQ(isqrt(r * r + 2 * r), r);
    EXPECT_EQ(isqrt(r * r - 1), r - 1);
}

TEST(PerfectPowerRoot, Examples)
{
    EXPECT_EQ(perfect_power_root(229345007, 5), BigInt(47));
    EXPECT_EQ(perfect_power_root(229345008, 5), std::nullopt);
    EXPECT_EQ(iroot(ipow(BigInt(12345), 7) - 1, 7), BigInt(12344));
}

TEST(IsPrime, SmallAndLarge)
{
    int count = 0;
    for (int n = 0; n < 1000; ++n)
        count += is_prime(BigInt(n)) ? 1 : 0;
    EXPECT_EQ(count, 168);
    EXPECT_TRUE(is_prime(BigInt("170141183460469231731687303715884105727"))); // 2^127 - 1
    EXPECT_FALSE(is_prime(BigInt("3825123056546413051")));                   // strong pseudoprime to bases 2..23
}
