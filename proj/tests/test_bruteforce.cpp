#include "hall/bruteforce.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace hall;

namespace {

// Whether some conjugate of h contains k, by running over every element of g.
bool conjugate_into(const ConcreteGroup& g, const SubgroupHandle& k, const SubgroupHandle& h) {
    for (Idx x = 0; x < g.order(); ++x) {
        bool all = true;
        for (Idx y : k.elements)
            if (!h.contains(g.conj(y, x))) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

bool is_pi_group(const SubgroupHandle& h, const PrimeSet& pi) { return is_pi_number(BigInt(h.order()), pi); }

TEST(Build, Orders) {
    EXPECT_EQ(build_group(GroupKind::PSL2, 7).order(), 168u);
    EXPECT_EQ(build_group(GroupKind::Sym, 7).order(), 5040u);
    EXPECT_EQ(build_group(GroupKind::SL2, 5).order(), 120u);
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        for (GroupKind k : {GroupKind::SL2, GroupKind::PSL2, GroupKind::GL2, GroupKind::PGL2}) {
            auto g = build_group(k, p);
            EXPECT_EQ(BigInt(static_cast<unsigned long>(g.order())), expected_order(k, p)) << kind_name(k) << p;
        }
        const BigInt psl = BigInt(p) * (p * p - 1) / (p == 2 ? 1 : 2);
        EXPECT_EQ(expected_order(GroupKind::PSL2, p), psl);
        EXPECT_EQ(expected_order(GroupKind::GL2, p), BigInt((p * p - 1) * (p * p - p)));
    }
    for (unsigned long n = 2; n <= 7; ++n) {
        EXPECT_EQ(BigInt(static_cast<unsigned long>(build_group(GroupKind::Sym, n).order())), oracle::factorial(n));
        if (n >= 3) EXPECT_EQ(BigInt(static_cast<unsigned long>(build_group(GroupKind::Alt, n).order())), oracle::factorial(n) / 2);
    }
}

TEST(Build, Errors) {
    EXPECT_THROW(build_group(GroupKind::PSL2, 9), NonPrimeField);
    EXPECT_THROW(build_group(GroupKind::SL2, 19), ArithError);
    EXPECT_THROW(build_group(GroupKind::Sym, 9), ArithError);
    EXPECT_THROW(build_group(GroupKind::Sym, 7, 1000), BudgetExceeded);
}

TEST(Build, GroupAxioms) {
    for (auto [k, p] : std::vector<std::pair<GroupKind, unsigned long>>{
             {GroupKind::PSL2, 5}, {GroupKind::SL2, 5}, {GroupKind::PGL2, 5}, {GroupKind::Alt, 5}, {GroupKind::Sym, 5}}) {
        auto g = build_group(k, p);
        const Idx n = g.order();
        std::uniform_int_distribution<Idx> d(0, n - 1);
        for (int i = 0; i < 2000; ++i) {
            Idx a = d(oracle::rng()), b = d(oracle::rng()), c = d(oracle::rng());
            EXPECT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
            EXPECT_EQ(g.mul(a, g.inv(a)), g.identity());
            EXPECT_EQ(g.mul(g.identity(), a), a);
            EXPECT_EQ(g.conj(a, b), g.mul(g.mul(g.inv(b), a), b));
        }
        for (Idx a = 0; a < n; ++a) EXPECT_EQ(n % g.element_order(a), 0u);
    }
}

TEST(Build, ElementOrdersOfPSL27) {
    auto g = build_group(GroupKind::PSL2, 7);
    std::map<unsigned long, std::size_t> want{{1, 1}, {2, 21}, {3, 56}, {4, 42}, {7, 48}};
    EXPECT_EQ(order_statistics(g, generate(g, g.generators())), want);
}

TEST(Build, OtherGeneratorsGiveTheSameGroup) {
    auto g = build_group(GroupKind::Alt, 6);
    // (0 1 2) and (1 2 3 4 5) generate Alt6
    auto perm = [](std::vector<unsigned> img) {
        Elem e = 0;
        for (std::size_t i = 0; i < img.size(); ++i) e |= Elem(img[i]) << (8 * i);
        return e;
    };
    const Idx a = *g.index_of(perm({1, 2, 0, 3, 4, 5}));
    const Idx b = *g.index_of(perm({0, 2, 3, 4, 5, 1}));
    auto h = with_generators(g, {a, b});
    EXPECT_EQ(h.order(), g.order());
    EXPECT_EQ(find_hall_subgroups(h, {2, 3}).class_count, find_hall_subgroups(g, {2, 3}).class_count);
    EXPECT_THROW(with_generators(g, {a}), ArithError);
}

TEST(Subgroups, GenerateAndLagrange) {
    auto g = build_group(GroupKind::Sym, 5);
    std::uniform_int_distribution<Idx> d(0, g.order() - 1);
    for (int i = 0; i < 200; ++i) {
        auto h = generate(g, {d(oracle::rng()), d(oracle::rng())});
        EXPECT_TRUE(is_subgroup(g, h));
        EXPECT_EQ(120 % h.order(), 0u);
        EXPECT_TRUE(std::is_sorted(h.elements.begin(), h.elements.end()));
        for (Idx x : h.generators) EXPECT_TRUE(h.contains(x));
    }
    SubgroupHandle broken{{0, 1}, {}};
    auto probe = generate(g, {1});
    if (probe.order() != 2) EXPECT_FALSE(is_subgroup(g, broken));
}

TEST(Census, Examples) {
    auto c5 = find_hall_subgroups(build_group(GroupKind::PSL2, 5), {2, 3});
    EXPECT_EQ(c5.hall_order, 12);
    EXPECT_EQ(c5.class_count, 1u);
    EXPECT_TRUE(c5.exhaustive);

    auto g7 = build_group(GroupKind::PSL2, 7);
    auto c7 = find_hall_subgroups(g7, {2, 3});
    EXPECT_EQ(c7.hall_order, 24);
    EXPECT_EQ(c7.class_count, 2u);
    // PSL2(7) has 14 subgroups isomorphic to Sym4, 7 in each class.
    EXPECT_EQ(c7.halls_found.size(), 14u);

    auto g11 = build_group(GroupKind::PSL2, 11);
    auto c11 = find_hall_subgroups(g11, {2, 3});
    EXPECT_EQ(c11.hall_order, 12);
    ASSERT_EQ(c11.class_count, 2u);
    std::set<std::size_t> involutions;
    auto parts = conjugacy_class_count(g11, c11.halls_found);
    for (auto& part : parts) involutions.insert(order_statistics(g11, c11.halls_found[part.front()])[2]);
    EXPECT_EQ(involutions, (std::set<std::size_t>{3, 7}));  // Alt4 and the dihedral group of order 12
}

TEST(Census, ClassesArePartitionedCorrectly) {
    auto g = build_group(GroupKind::PSL2, 7);
    auto c = find_hall_subgroups(g, {2, 3});
    auto parts = conjugacy_class_count(g, c.halls_found);
    ASSERT_EQ(parts.size(), 2u);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) {
            const auto& a = c.halls_found[parts[i].front()];
            const auto& b = c.halls_found[parts[j].front()];
            EXPECT_EQ(conjugate_into(g, a, b), i == j);
        }
    for (std::size_t i = 0; i < c.halls_found.size(); ++i)
        EXPECT_EQ(c.hall_class[i], c.hall_class[parts[c.hall_class[i]].front()]);
    EXPECT_EQ(conjugacy_class_count(g, {c.halls_found[0]}).size(), 1u);
}

TEST(Census, SylowTwoSubgroupsOfSym4AreConjugate) {
    auto g = build_group(GroupKind::Sym, 4);
    auto c = find_hall_subgroups(g, {2});
    EXPECT_EQ(c.hall_order, 8);
    EXPECT_EQ(c.halls_found.size(), 3u);
    EXPECT_EQ(conjugacy_class_count(g, c.halls_found).size(), 1u);
}

TEST(Census, ConjugatesAreSubgroupsOfTheSameOrder) {
    auto g = build_group(GroupKind::Sym, 5);
    auto c = find_hall_subgroups(g, {2, 3});
    auto conj = conjugates(g, c.halls_found[0]);
    EXPECT_EQ(conj.front(), c.halls_found[0]);
    EXPECT_EQ(conj.size(), 5u);  // Sym4 is self-normalizing of index 5
    for (auto& h : conj) EXPECT_TRUE(is_subgroup(g, h));
}

TEST(Census, GL2HasNoHallWhenSL2ClassesFuse) {
    auto c = find_hall_subgroups(build_group(GroupKind::GL2, 7), {2, 3});
    EXPECT_EQ(c.hall_order, 288);
    EXPECT_EQ(c.class_count, 0u);
    EXPECT_TRUE(c.exhaustive);
    auto d = find_hall_subgroups(build_group(GroupKind::GL2, 5), {2, 3});
    EXPECT_EQ(d.class_count, 1u);
}

TEST(Census, AltAndSymSeven) {
    auto s7 = build_group(GroupKind::Sym, 7);
    auto c = find_hall_subgroups(s7, {2, 3});
    EXPECT_EQ(c.hall_order, 144);
    EXPECT_EQ(c.class_count, 1u);
    EXPECT_EQ(point_orbits(s7, c.halls_found[0]), (std::vector<std::size_t>{3, 4}));
    // The Hall subgroup of Alt7 is the even part of Sym3 x Sym4.
    auto a7 = build_group(GroupKind::Alt, 7);
    auto ca = find_hall_subgroups(a7, {2, 3});
    EXPECT_EQ(ca.hall_order, 72);
    EXPECT_EQ(ca.class_count, 1u);
    std::size_t even = 0;
    for (Idx x : c.halls_found[0].elements)
        if (a7.index_of(s7.element(x))) ++even;
    EXPECT_EQ(even, 72u);
}

TEST(Census, BudgetMarksNonExhaustive) {
    SearchBudget tight;
    tight.closure_steps = 5;
    auto c = find_hall_subgroups(build_group(GroupKind::PSL2, 7), {2, 3}, tight);
    EXPECT_FALSE(c.exhaustive);
}

TEST(Dpi, WitnessesAreNotConjugateIntoSomeHall) {
    for (auto [kind, p] : std::vector<std::pair<GroupKind, unsigned long>>{
             {GroupKind::SL2, 5}, {GroupKind::SL2, 13}, {GroupKind::PSL2, 7}, {GroupKind::PSL2, 13}}) {
        auto g = build_group(kind, p);
        auto c = find_hall_subgroups(g, {2, 3});
        auto w = find_dpi_counterexample(g, {2, 3}, c);
        ASSERT_TRUE(w.has_value()) << kind_name(kind) << p;
        EXPECT_TRUE(is_subgroup(g, *w));
        EXPECT_TRUE(is_pi_group(*w, {2, 3}));
        bool escapes = false;
        for (auto& part : conjugacy_class_count(g, c.halls_found))
            if (!conjugate_into(g, *w, c.halls_found[part.front()])) escapes = true;
        EXPECT_TRUE(escapes) << kind_name(kind) << p;
    }
}

TEST(Dpi, SL25WitnessIsTheDicyclicGroup) {
    auto g = build_group(GroupKind::SL2, 5);
    auto c = find_hall_subgroups(g, {2, 3});
    EXPECT_EQ(c.class_count, 1u);
    EXPECT_EQ(c.hall_order, 24);
    auto w = find_dpi_counterexample(g, {2, 3}, c);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->order(), 12u);
    EXPECT_FALSE(conjugate_into(g, *w, c.halls_found[0]));
}

TEST(Dpi, NoWitnessInPiGroups) {
    auto g = build_group(GroupKind::Sym, 4);
    auto c = find_hall_subgroups(g, {2, 3});
    EXPECT_FALSE(find_dpi_counterexample(g, {2, 3}, c).has_value());
}

TEST(Projection, SL2ToPSL2IsAHomomorphismWithKernelOfOrderTwo) {
    auto sl = build_group(GroupKind::SL2, 7);
    auto psl = build_group(GroupKind::PSL2, 7);
    std::map<Idx, int> fibre;
    for (Idx x = 0; x < sl.order(); ++x) ++fibre[project_to_psl2(sl, psl, x)];
    EXPECT_EQ(fibre.size(), psl.order());
    for (auto& [k, v] : fibre) EXPECT_EQ(v, 2);
    std::uniform_int_distribution<Idx> d(0, sl.order() - 1);
    for (int i = 0; i < 500; ++i) {
        Idx a = d(oracle::rng()), b = d(oracle::rng());
        EXPECT_EQ(project_to_psl2(sl, psl, sl.mul(a, b)),
                  psl.mul(project_to_psl2(sl, psl, a), project_to_psl2(sl, psl, b)));
    }
}

TEST(Verify, ClassifierAgreesWithCensus) {
    auto g = build_group(GroupKind::PSL2, 7);
    auto v = verify_report(g, classify(*spec_of(GroupKind::PSL2, 7), {2, 3}));
    EXPECT_TRUE(v.all_pass());
    auto s = build_group(GroupKind::Sym, 7);
    EXPECT_TRUE(verify_report(s, classify(*spec_of(GroupKind::Sym, 7), {2, 3})).all_pass());
}

TEST(Verify, CorruptedReportFailsWithFieldDiff) {
    auto g = build_group(GroupKind::PSL2, 7);
    auto r = classify(*spec_of(GroupKind::PSL2, 7), {2, 3});
    r.k_pi = KPi::of(3);
    r.classes[0].class_count = 3;
    auto v = verify_report(g, r);
    EXPECT_FALSE(v.all_pass());
    bool k_failed = false;
    for (auto& c : v.comparisons)
        if (!c.pass && c.field.find("k_pi") != std::string::npos) {
            k_failed = true;
            EXPECT_EQ(c.expected, "3");
            EXPECT_EQ(c.actual, "2");
        }
    EXPECT_TRUE(k_failed);
}

TEST(Verify, NonExhaustiveNeverPasses) {
    auto g = build_group(GroupKind::PSL2, 7);
    SearchBudget tight;
    tight.closure_steps = 5;
    EXPECT_FALSE(verify_report(g, classify(*spec_of(GroupKind::PSL2, 7), {2, 3}), tight).all_pass());
}

TEST(Concrete, ParseAndSpec) {
    EXPECT_EQ(parse_concrete("PSL(2,7)"), std::make_pair(GroupKind::PSL2, 7ul));
    EXPECT_EQ(parse_concrete("SL(2,5)"), std::make_pair(GroupKind::SL2, 5ul));
    EXPECT_EQ(parse_concrete("PGL(2,5)"), std::make_pair(GroupKind::PGL2, 5ul));
    EXPECT_EQ(parse_concrete("Alt(6)"), std::make_pair(GroupKind::Alt, 6ul));
    EXPECT_THROW(parse_concrete("PSp(4,3)"), ParseError);
    EXPECT_FALSE(spec_of(GroupKind::PGL2, 5).has_value());
    for (GroupKind k : {GroupKind::SL2, GroupKind::PSL2, GroupKind::GL2, GroupKind::PGL2, GroupKind::Sym, GroupKind::Alt})
        EXPECT_EQ(kind_from_name(kind_name(k)), k);
    for (auto [k, p] : std::vector<std::pair<GroupKind, unsigned long>>{
             {GroupKind::SL2, 7}, {GroupKind::PSL2, 11}, {GroupKind::GL2, 5}, {GroupKind::Sym, 6}, {GroupKind::Alt, 7}})
        EXPECT_EQ(order(validate(*spec_of(k, p))).order.value, expected_order(k, p));
}

}  // namespace
