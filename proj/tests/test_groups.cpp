#include "hall/groups.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hall;
using oracle::power;

namespace {

BigInt order_of(const std::string& text) { return order(validate(parse_group(text))).order.value; }

BigInt gcd_ul(const BigInt& a, unsigned long b) { return oracle::gcd(a, BigInt(b)); }

// Independent textbook order formulas.
BigInt psl_order(unsigned long n, const BigInt& q, int eta, bool simple) {
    BigInt o = power(q, n * (n - 1) / 2);
    for (unsigned long i = 2; i <= n; ++i) o *= eta == 1 || i % 2 == 0 ? BigInt(power(q, i) - 1) : BigInt(power(q, i) + 1);
    return simple ? BigInt(o / oracle::gcd(BigInt(n), BigInt(q - eta))) : o;
}

BigInt psp_order(unsigned long m, const BigInt& q, bool simple) {
    BigInt o = power(q, m * m);
    for (unsigned long i = 1; i <= m; ++i) o *= power(q, 2 * i) - 1;
    return simple ? BigInt(o / 2) : o;
}

BigInt so_odd_order(unsigned long m, const BigInt& q) { return psp_order(m, q, false); }

BigInt so_even_order(unsigned long m, const BigInt& q, int eta) {
    BigInt o = power(q, m * (m - 1)) * (power(q, m) - eta);
    for (unsigned long i = 1; i < m; ++i) o *= power(q, 2 * i) - 1;
    return o;
}

BigInt chevalley(const BigInt& q, unsigned long N, std::initializer_list<unsigned long> degrees, int sign = 1) {
    BigInt o = power(q, N);
    for (unsigned long d : degrees) o *= (sign == 1 || d % 2 == 0) ? BigInt(power(q, d) - 1) : BigInt(power(q, d) + 1);
    return o;
}

TEST(Order, SpecExamples) {
    EXPECT_EQ(order_of("PSL(2,7)"), 168);
    EXPECT_EQ(order(validate(parse_group("PSL(2,7)"))).order.factors,
              (std::map<BigInt, unsigned>{{2, 3}, {3, 1}, {7, 1}}));
    EXPECT_EQ(order_of("Sym(7)"), 5040);
    EXPECT_EQ(order_of("M11"), 7920);
}

TEST(Order, LinearAndUnitaryMatchFormula) {
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul, 7ul, 8ul, 9ul, 11ul, 13ul, 25ul, 27ul})
        for (unsigned long n = 2; n <= 8; ++n)
            for (const char* s : {"", ",-"}) {
                const int eta = *s ? -1 : 1;
                const std::string args = "(" + std::to_string(n) + "," + std::to_string(q) + s + ")";
                const bool simple_ok = !(n == 2 && q <= 3) && !(n == 3 && q == 2 && eta == -1);
                if (simple_ok) EXPECT_EQ(order_of("PSL" + args), psl_order(n, q, eta, true)) << args;
                EXPECT_EQ(order_of("SL" + args), psl_order(n, q, eta, false)) << args;
            }
}

TEST(Order, SymplecticMatchesFormula) {
    for (unsigned long q : {3ul, 5ul, 7ul, 9ul, 11ul, 13ul, 25ul})
        for (unsigned long m = 2; m <= 6; ++m) {
            const std::string args = "(" + std::to_string(2 * m) + "," + std::to_string(q) + ")";
            EXPECT_EQ(order_of("PSp" + args), psp_order(m, q, true)) << args;
            EXPECT_EQ(order_of("Sp" + args), psp_order(m, q, false)) << args;
        }
}

TEST(Order, OrthogonalMatchesFormula) {
    for (unsigned long q : {3ul, 5ul, 7ul, 9ul, 11ul, 13ul})
        for (unsigned long n = 7; n <= 12; ++n) {
            const std::string qs = std::to_string(q);
            const unsigned long m = n / 2;
            if (n % 2 == 1) {
                const BigInt omega = so_odd_order(m, q) / 2;
                EXPECT_EQ(order_of("O(" + std::to_string(n) + "," + qs + ")"), omega);
                EXPECT_EQ(order_of("PO(" + std::to_string(n) + "," + qs + ")"), omega);
                continue;
            }
            for (int eta : {1, -1}) {
                const std::string args = std::string(eta == 1 ? "+(" : "-(") + std::to_string(n) + "," + qs + ")";
                const BigInt so = so_even_order(m, q, eta);
                EXPECT_EQ(order_of("O" + args), so / 2) << args;
                EXPECT_EQ(order_of("PO" + args), so / gcd_ul(power(BigInt(q), m) - eta, 4)) << args;
            }
        }
}

TEST(Order, ExceptionalMatchesFormula) {
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul, 7ul, 8ul, 9ul, 11ul, 13ul}) {
        const std::string a = "(" + std::to_string(q) + ")";
        if (q != 2) EXPECT_EQ(order_of("G2" + a), chevalley(q, 6, {2, 6}));
        EXPECT_EQ(order_of("F4" + a), chevalley(q, 24, {2, 6, 8, 12}));
        EXPECT_EQ(order_of("E6" + a), chevalley(q, 36, {2, 5, 6, 8, 9, 12}) / gcd_ul(BigInt(q - 1), 3));
        EXPECT_EQ(order_of("2E6" + a), chevalley(q, 36, {2, 5, 6, 8, 9, 12}, -1) / gcd_ul(BigInt(q + 1), 3));
        EXPECT_EQ(order_of("E7" + a), chevalley(q, 63, {2, 6, 8, 10, 12, 14, 18}) / gcd_ul(BigInt(q - 1), 2));
        EXPECT_EQ(order_of("E8" + a), chevalley(q, 120, {2, 8, 12, 14, 18, 20, 24, 30}));
        const BigInt Q(q);
        EXPECT_EQ(order_of("3D4" + a), power(Q, 12) * (power(Q, 8) + power(Q, 4) + 1) * (power(Q, 6) - 1) * (Q * Q - 1));
    }
    for (unsigned long a : {3ul, 5ul, 7ul}) {
        const BigInt q = power(BigInt(3), a);
        EXPECT_EQ(order_of("2G2(3^" + std::to_string(a) + ")"), power(q, 3) * (power(q, 3) + 1) * (q - 1));
    }
}

TEST(Order, AlternatingAndSymmetric) {
    for (unsigned long n = 5; n <= 30; ++n) {
        EXPECT_EQ(order_of("Sym(" + std::to_string(n) + ")"), oracle::factorial(n));
        EXPECT_EQ(order_of("Alt(" + std::to_string(n) + ")"), oracle::factorial(n) / 2);
    }
}

TEST(Order, RespectsExceptionalIsomorphisms) {
    EXPECT_EQ(order_of("PSL(2,9)"), order_of("PO-(4,3)"));
    for (unsigned long q : {5ul, 7ul, 9ul, 11ul, 13ul}) {
        const std::string qs = std::to_string(q);
        EXPECT_EQ(order_of("PSL(2," + qs + ")"), order_of("PO(3," + qs + ")"));
        EXPECT_EQ(order_of("PSL(2," + qs + ")"), order_of("O(3," + qs + ")"));
        EXPECT_EQ(order_of("PSp(4," + qs + ")"), order_of("PO(5," + qs + ")"));
        EXPECT_EQ(order_of("PSp(4," + qs + ")"), order_of("O(5," + qs + ")"));
        EXPECT_EQ(order_of("PSL(4," + qs + ")"), order_of("PO+(6," + qs + ")"));
        EXPECT_EQ(order_of("PSL(4," + qs + ",-)"), order_of("PO-(6," + qs + ")"));
        EXPECT_EQ(order_of("PSL(2," + std::to_string(q * q) + ")"), order_of("PO-(4," + qs + ")"));
        EXPECT_EQ(order_of("PSL(2," + std::to_string(q * q) + ")"), order_of("O-(4," + qs + ")"));
    }
}

TEST(Order, SporadicTable) {
    const auto& t = sporadic_table();
    EXPECT_EQ(t.size(), 26u);
    std::map<std::string, BigInt> known{{"M11", 7920},
                                        {"M12", 95040},
                                        {"M22", 443520},
                                        {"M23", 10200960},
                                        {"M24", 244823040},
                                        {"J1", 175560},
                                        {"J2", 604800},
                                        {"J3", 50232960},
                                        {"HS", 44352000},
                                        {"McL", 898128000},
                                        {"Co1", BigInt("4157776806543360000")},
                                        {"M", BigInt("808017424794512875886459904961710757005754368000000000")}};
    for (auto& [name, fo] : t) {
        EXPECT_TRUE(fo.consistent()) << name;
        auto it = known.find(name);
        if (it != known.end()) EXPECT_EQ(fo.value, it->second) << name;
    }
    for (auto& [name, v] : known) EXPECT_EQ(order_of(name), v) << name;
}

TEST(Order, PiPartMatchesArithPerPrime) {
    // |G|_pi = product over r of r-parts computed by the closed forms, classical families.
    const PrimeSet pi{2, 3, 5};
    for (unsigned long q : {5ul, 7ul, 11ul, 13ul})
        for (unsigned long n = 2; n <= 8; ++n)
            for (Sign eta : {Sign::Plus, Sign::Minus}) {
                const std::string name = "SL(" + std::to_string(n) + "," + std::to_string(q) + (eta == Sign::Minus ? ",-)" : ")");
                const BigInt ord = order_of(name);
                BigInt want = 1;
                for (unsigned long r : pi.primes()) {
                    if (q % r == 0) {
                        want *= oracle::r_part(ord, r);
                        continue;
                    }
                    want *= r_part_product(q, n, r, eta) / r_part_q_pow_minus_eta(q, 1, r, eta);
                }
                EXPECT_EQ(pi_part(ord, pi), want) << name;
            }
}

TEST(Spectrum, Examples) {
    auto spec = [](const std::string& s) { return prime_spectrum(validate(parse_group(s))); };
    EXPECT_EQ(spec("PSL(2,7)"), (std::vector<BigInt>{2, 3, 7}));
    EXPECT_EQ(spec("Sp(4,7)"), (std::vector<BigInt>{2, 3, 5, 7}));
    EXPECT_EQ(spec("G2(11)"), (std::vector<BigInt>{2, 3, 5, 7, 11, 19, 37}));
    EXPECT_EQ(spec("M23"), (std::vector<BigInt>{2, 3, 5, 7, 11, 23}));
}

TEST(Spectrum, ProductDividesOrderAndCoversIt) {
    for (const char* g : {"PSL(5,7)", "PSU(6,11)", "PSp(8,9)", "O(9,5)", "F4(3)", "E7(2)", "3D4(5)", "Alt(17)"}) {
        const GroupSpec s = validate(parse_group(g));
        BigInt rest = order(s).order.value;
        for (const BigInt& p : prime_spectrum(s)) {
            ASSERT_EQ(rest % p, 0) << g;
            while (rest % p == 0) rest /= p;
        }
        EXPECT_EQ(rest, 1) << g;
    }
}

TEST(PiInGroup, Intersects) {
    EXPECT_EQ(pi_in_group(validate(parse_group("PSL(2,7)")), PrimeSet{2, 3, 5}), PrimeSet({2, 3}));
}

TEST(Validate, Normalizations) {
    GroupSpec sp;
    sp.family = Family::Symplectic;
    sp.n = 2;
    sp.p = 7;
    sp.a = 1;
    const GroupSpec v = validate(sp);
    EXPECT_EQ(v.family, Family::LinearUnitary);
    EXPECT_EQ(v.n, 2u);
    EXPECT_EQ(v.eta, Eta::Plus);
    EXPECT_EQ(v.variant, Variant::Simple);
    EXPECT_FALSE(v.aliases.empty());

    const GroupSpec o5 = validate(parse_group("PO(5,7)"));
    EXPECT_EQ(o5.family, Family::Symplectic);
    EXPECT_EQ(o5.n, 4u);
    ASSERT_EQ(o5.aliases.size(), 1u);
    EXPECT_NE(o5.aliases[0].find("PSp(4,7)"), std::string::npos);

    const GroupSpec u2 = validate(parse_group("PSU(2,9)"));
    EXPECT_EQ(u2.eta, Eta::Plus);

    const GroupSpec o4 = validate(parse_group("PO-(4,3)"));
    EXPECT_EQ(o4.family, Family::LinearUnitary);
    EXPECT_EQ(o4.q(), 9);
}

TEST(Validate, Errors) {
    EXPECT_THROW(validate(parse_group("Alt(4)")), NonSimple);
    EXPECT_THROW(validate(parse_group("PSL(2,3)")), NonSimple);
    EXPECT_THROW(validate(parse_group("PSU(3,2)")), NonSimple);
    EXPECT_THROW(validate(parse_group("G2(2)")), NonSimple);
    EXPECT_THROW(validate(parse_group("2G2(3)")), NonSimple);
    EXPECT_THROW(validate(parse_group("PO+(4,5)")), NonSimple);
    EXPECT_THROW(validate(parse_group("PSL(2,6)")), InvalidParameter);
    EXPECT_THROW(validate(parse_group("Sp(5,7)")), InvalidParameter);
    EXPECT_THROW(validate(parse_group("Sp(4,8)")), InvalidParameter);
    EXPECT_THROW(validate(parse_group("O+(7,5)")), InvalidParameter);
    EXPECT_THROW(validate(parse_group("2G2(9)")), InvalidParameter);
    EXPECT_THROW(validate(parse_group("GL(3,5)")), InvalidParameter);
    try {
        validate(parse_group("Alt(3)"));
        FAIL();
    } catch (const GroupError& e) {
        EXPECT_EQ(e.rule(), "alt-degree");
    }
}

TEST(Parse, Errors) {
    EXPECT_THROW(parse_group("PSL(2)"), ParseError);
    EXPECT_THROW(parse_group("Foo(3)"), ParseError);
    EXPECT_THROW(parse_group(""), ParseError);
    EXPECT_THROW(parse_group("PSL(2,7"), ParseError);
}

TEST(Parse, Forms) {
    EXPECT_EQ(parse_group("E6-(5)"), parse_group("2E6(5)"));
    EXPECT_EQ(parse_group("E6(5,-)"), parse_group("2E6(5)"));
    EXPECT_EQ(parse_group("PSL(2,3^2)").q(), 9);
    EXPECT_EQ(parse_group("PSU(4,7)"), parse_group("PSL(4,7,-)"));
    EXPECT_EQ(parse_group("M23").family, Family::Sporadic);
    EXPECT_EQ(canonical_sporadic("M23"), std::optional<std::string>("M23"));
    EXPECT_FALSE(canonical_sporadic("M25").has_value());
}

TEST(Parse, NameRoundTrip) {
    for (const char* g : {"PSL(4,7,-)", "SL(3,25)", "GL(2,5)", "GL(2,7,-)", "Sp(10,7)", "PSp(6,9)", "O(11,7)", "PO(9,3)",
                          "O+(12,7)", "PO-(10,5)", "G2(5)", "F4(7)", "E6(4)", "E6(4,-)", "E7(3)", "E8(2)", "3D4(3)",
                          "2G2(27)", "Alt(7)", "Sym(9)", "M23", "J1", "Co1", "HN"}) {
        const GroupSpec s = validate(parse_group(g));
        const GroupSpec back = validate(parse_group(s.name()));
        EXPECT_EQ(back, s) << g << " -> " << s.name();
        EXPECT_EQ(order(back).order.value, order(s).order.value) << g;
    }
}

TEST(Weyl, Orders) {
    EXPECT_EQ(weyl_order("G2"), 12);
    EXPECT_EQ(weyl_order("F4"), 1152);
    EXPECT_EQ(weyl_order("E6"), 51840);
    EXPECT_EQ(weyl_order("E7"), 2903040);
    EXPECT_EQ(weyl_order("E8"), 696729600);
    EXPECT_THROW(weyl_order("B9"), InvalidParameter);
}

TEST(FactorQPowMinus, MatchesFactorize) {
    for (unsigned long q : {2ul, 5ul, 13ul, 49ul})
        for (unsigned long d = 1; d <= 24; ++d)
            for (int s : {1, -1}) {
                if (q == 2 && d == 1 && s == 1) continue;
                FactoredInt f = factor_q_pow_minus(q, d, s);
                const BigInt v = power(BigInt(q), d) - s;
                EXPECT_EQ(f.value, v);
                EXPECT_EQ(f.factors, factorize(v).factors) << q << "^" << d << "-" << s;
            }
}

}  // namespace
