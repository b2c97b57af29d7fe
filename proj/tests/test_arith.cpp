#include "hall/arith.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hall;

namespace {

const std::vector<unsigned long> kSmallPrimes{2, 3, 5, 7, 11, 13};

TEST(PiPart, Examples) {
    EXPECT_EQ(pi_part(48, {2, 3}), 48);
    EXPECT_EQ(pi_part(120, {2, 3}), 24);
    EXPECT_EQ(pi_part(1, {2, 3, 5}), 1);
}

TEST(PiPart, MultiplicativeOnCoprimeArguments) {
    std::uniform_int_distribution<unsigned long> d(1, 200000);
    const PrimeSet pi{2, 3, 7};
    for (int i = 0; i < 2000; ++i) {
        unsigned long a = d(oracle::rng()), b = d(oracle::rng());
        if (oracle::gcd(a, b) != 1) continue;
        EXPECT_EQ(pi_part(BigInt(a) * b, pi), pi_part(a, pi) * pi_part(b, pi)) << a << " " << b;
    }
}

TEST(PiPart, AgreesWithRepeatedDivision) {
    std::uniform_int_distribution<unsigned long> d(1, 1000000000);
    const PrimeSet pi{2, 5, 11};
    for (int i = 0; i < 500; ++i) {
        unsigned long n = d(oracle::rng());
        BigInt want = oracle::r_part(n, 2) * oracle::r_part(n, 5) * oracle::r_part(n, 11);
        EXPECT_EQ(pi_part(n, pi), want) << n;
        EXPECT_EQ(is_pi_number(n, pi), want == n);
    }
}

TEST(MultOrder, Examples) {
    EXPECT_EQ(mult_order(7, 3), 1u);
    EXPECT_EQ(mult_order(2, 7), 3u);
    EXPECT_EQ(mult_order(7, 2), 2u);
    EXPECT_EQ(mult_order(5, 2), 1u);
    EXPECT_THROW(mult_order(9, 3), ArithError);
    EXPECT_THROW(mult_order(4, 2), ArithError);
}

TEST(MultOrder, MatchesDirectPowering) {
    for (unsigned long r : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul})
        for (unsigned long q = 2; q < 60; ++q) {
            if (q % r == 0) continue;
            unsigned long m = 1, x = q % r;
            while (x != 1) {
                x = x * q % r;
                ++m;
            }
            EXPECT_EQ(mult_order(q, r), m) << q << " mod " << r;
        }
}

TEST(EStar, Examples) {
    EXPECT_EQ(e_star(1), 2u);
    EXPECT_EQ(e_star(4), 4u);
    EXPECT_EQ(e_star(6), 3u);
    EXPECT_EQ(e_star(3), 6u);
    EXPECT_EQ(e_star(2), 1u);
}

TEST(RPart, Examples) {
    EXPECT_EQ(r_part_q_pow_minus_1(7, 4, 3), 3);
    EXPECT_EQ(r_part_q_pow_minus_1(7, 1, 5), 1);
    EXPECT_EQ(r_part_q_pow_minus_1(3, 2, 2), 8);
    EXPECT_EQ(r_part_q_pow_minus_eta(5, 3, 3, Sign::Plus), 1);
    EXPECT_EQ(r_part_q_pow_minus_eta(7, 2, 2, Sign::Plus), 16);
    EXPECT_EQ(r_part_q_pow_minus_eta(5, 2, 3, Sign::Minus), 3);
    EXPECT_EQ(r_part_product(7, 2, 2, Sign::Plus), 32);
    EXPECT_EQ(r_part_product(3, 1, 2, Sign::Plus), 2);
    // (5-1)_3 (5^2-1)_3 = 1 * 3
    EXPECT_EQ(r_part_product(5, 2, 3, Sign::Plus), 3);
    EXPECT_THROW(r_part_q_pow_minus_1(9, 2, 3), ArithError);
}

// Every closed form against the r-part of q^n - eta^n computed by repeated division.
TEST(RPart, ClosedFormsMatchDirectComputation) {
    for (unsigned long q = 3; q <= 49; q += 2)
        for (unsigned long r : kSmallPrimes) {
            if (q % r == 0) continue;
            for (Sign eta : {Sign::Plus, Sign::Minus}) {
                BigInt prod = 1;
                for (unsigned long n = 1; n <= 12; ++n) {
                    const BigInt v = oracle::q_pow_minus_eta(q, n, to_int(eta));
                    const BigInt want = oracle::r_part(v, r);
                    prod *= want;
                    SCOPED_TRACE(testing::Message() << "q=" << q << " n=" << n << " r=" << r << " eta=" << to_int(eta));
                    EXPECT_EQ(r_part_q_pow_minus_eta(q, n, r, eta), want);
                    EXPECT_EQ(identities::general_minus_eta(q, n, r, eta), want);
                    if (eta == Sign::Plus) EXPECT_EQ(r_part_q_pow_minus_1(q, n, r), want);
                    if (r == 2) EXPECT_EQ(identities::two_part_minus_eta(q, n, eta), want);
                    if (r == 3) EXPECT_EQ(identities::three_part_minus_eta(q, n, eta), want);
                    EXPECT_EQ(r_part_product(q, n, r, eta), prod);
                    if (r != 2) EXPECT_EQ(identities::general_product(q, n, r, eta), prod);
                    if (r == 2) EXPECT_EQ(identities::two_part_product(q, n, eta), prod);
                    if (r == 3) EXPECT_EQ(identities::three_part_product(q, n, eta), prod);
                }
            }
        }
}

TEST(RPart, EvenQForOddPrimes) {
    for (unsigned long q : {2ul, 4ul, 8ul, 16ul, 32ul})
        for (unsigned long r : {3ul, 5ul, 7ul, 11ul, 13ul})
            for (unsigned long n = 1; n <= 12; ++n)
                EXPECT_EQ(r_part_q_pow_minus_1(q, n, r), oracle::r_part(oracle::power(BigInt(q), n) - 1, r));
}

TEST(SymmetricDominates, Examples) {
    EXPECT_TRUE(symmetric_dominates(7, 5, 3));
    EXPECT_FALSE(symmetric_dominates(7, 5, 1));
    EXPECT_TRUE(symmetric_dominates(5, 7, 4));
}

TEST(SymmetricDominates, HoldsFromHalfOfRPlusOne) {
    for (unsigned long q : oracle::odd_prime_powers_up_to(49))
        for (unsigned long r : {3ul, 5ul, 7ul, 11ul, 13ul}) {
            if (q % r == 0) continue;
            for (unsigned long m = (r + 1) / 2; m <= 12; ++m) {
                BigInt lhs = 1;
                for (unsigned long i = 1; i < m; ++i) lhs *= oracle::r_part(oracle::power(BigInt(q), 2 * i) - 1, r);
                const BigInt rhs = oracle::r_part(oracle::factorial(m), r);
                EXPECT_EQ(symmetric_dominates(q, r, m), lhs > rhs);
                EXPECT_TRUE(symmetric_dominates(q, r, m)) << "q=" << q << " r=" << r << " m=" << m;
            }
        }
}

TEST(Epsilon, ExamplesAndMultiplicativity) {
    EXPECT_EQ(epsilon(5), Sign::Plus);
    EXPECT_EQ(epsilon(7), Sign::Minus);
    EXPECT_EQ(epsilon(13), Sign::Plus);
    EXPECT_THROW(epsilon(4), ArithError);
    for (unsigned long a = 1; a < 80; a += 2)
        for (unsigned long b = 1; b < 80; b += 2) EXPECT_EQ(epsilon(a) * epsilon(b), epsilon(BigInt(a) * b));
}

TEST(Factorize, Examples) {
    auto f = factorize(168);
    EXPECT_EQ(f.factors, (std::map<BigInt, unsigned>{{2, 3}, {3, 1}, {7, 1}}));
    EXPECT_TRUE(factorize(1).factors.empty());
    EXPECT_EQ(factorize(5040).factors, (std::map<BigInt, unsigned>{{2, 4}, {3, 2}, {5, 1}, {7, 1}}));
    EXPECT_THROW(factorize(0), ArithError);
}

TEST(Factorize, AgreesWithTrialDivision) {
    std::uniform_int_distribution<unsigned long> d(1, 1000000000000ul);
    for (int i = 0; i < 300; ++i) {
        unsigned long n = d(oracle::rng());
        auto want = oracle::factor_small(n);
        auto got = factorize(n);
        ASSERT_EQ(got.factors.size(), want.size()) << n;
        for (auto [p, e] : want) EXPECT_EQ(got.factors[BigInt(p)], e) << n;
        EXPECT_TRUE(got.consistent());
    }
}

TEST(Factorize, LargeSemiprimesAndPowers) {
    // products of two primes above the trial-division range
    const BigInt a("1000000007"), b("998244353"), c("72384467"), d("5618383");
    EXPECT_EQ(factorize(a * b).factors, (std::map<BigInt, unsigned>{{b, 1}, {a, 1}}));
    EXPECT_EQ(factorize(c * d).factors, (std::map<BigInt, unsigned>{{d, 1}, {c, 1}}));
    EXPECT_EQ(factorize(a * a * a).factors, (std::map<BigInt, unsigned>{{a, 3}}));
    // 2^64 + 1 = 274177 * 67280421310721
    BigInt f6 = oracle::power(BigInt(2), 64) + 1;
    EXPECT_EQ(factorize(f6).factors, (std::map<BigInt, unsigned>{{BigInt(274177), 1}, {BigInt("67280421310721"), 1}}));
}

TEST(Factorize, ProductAndPrimality) {
    for (unsigned long q : {29ul, 31ul, 47ul, 49ul})
        for (unsigned long n = 1; n <= 16; ++n)
            for (int s : {1, -1}) {
                BigInt v = oracle::q_pow_minus_eta(q, n, s);
                auto f = factorize(v);
                BigInt prod = 1;
                for (auto& [p, e] : f.factors) {
                    EXPECT_TRUE(is_prime(p)) << p;
                    prod *= oracle::power(p, e);
                }
                EXPECT_EQ(prod, v);
            }
}

TEST(IsPrime, MatchesTrialDivision) {
    for (unsigned long n = 0; n < 20000; ++n) EXPECT_EQ(is_prime(n), oracle::is_prime_small(n)) << n;
    std::uniform_int_distribution<unsigned long> d(1000000, 4000000000ul);
    for (int i = 0; i < 300; ++i) {
        unsigned long n = d(oracle::rng());
        EXPECT_EQ(is_prime(n), oracle::is_prime_small(n)) << n;
    }
}

TEST(PrimeSet, ParseAndOperations) {
    PrimeSet s = PrimeSet::parse(" 5, 2,3 ");
    EXPECT_EQ(s.primes(), (std::vector<unsigned long>{2, 3, 5}));
    EXPECT_EQ(s.to_string(), "2,3,5");
    EXPECT_THROW(PrimeSet::parse("2,4"), ArithError);
    EXPECT_THROW(PrimeSet::parse("2,x"), ArithError);
    EXPECT_TRUE(PrimeSet({2, 3}).subset_of(s));
    EXPECT_EQ(s.intersect({3, 7}), PrimeSet({3}));
    EXPECT_EQ(s.unite({7}), PrimeSet({2, 3, 5, 7}));
    EXPECT_EQ(s.dividing(84), PrimeSet({2, 3}));
    EXPECT_EQ(s.product(), 30);
}

TEST(PrimePower, Detection) {
    BigInt p;
    unsigned long a;
    ASSERT_TRUE(prime_power(49, p, a));
    EXPECT_EQ(p, 7);
    EXPECT_EQ(a, 2u);
    ASSERT_TRUE(prime_power(32, p, a));
    EXPECT_EQ(a, 5u);
    EXPECT_FALSE(prime_power(12, p, a));
    EXPECT_FALSE(prime_power(1, p, a));
}

}  // namespace
