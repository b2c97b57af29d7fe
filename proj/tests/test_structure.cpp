#include "hall/structure.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hall;

namespace {

const PrimeSet kAll{2, 3, 5, 7, 11, 13, 17, 19, 23};

TEST(Structure, Atoms) {
    EXPECT_EQ(structure_order("Z(12)", kAll), 12);
    EXPECT_EQ(structure_order("D(12)", kAll), 12);  // dihedral of order 12
    EXPECT_EQ(structure_order("Sym4", kAll), 24);
    EXPECT_EQ(structure_order("Sym(6)", kAll), 720);
    EXPECT_EQ(structure_order("Alt6", kAll), 360);
    EXPECT_EQ(structure_order("SL2(5)", kAll), 120);
    EXPECT_EQ(structure_order("Q8", kAll), 8);
    EXPECT_EQ(structure_order("W(F4)", kAll), 1152);
    EXPECT_EQ(structure_order("G2(2)", kAll), 12096);
    EXPECT_EQ(structure_order("Omega7(2)", kAll), 1451520);
    EXPECT_EQ(structure_order("L3(4)", kAll), 20160);
    EXPECT_EQ(structure_order("M22", kAll), 443520);
    EXPECT_EQ(structure_order("2_2", kAll), 2);
    EXPECT_EQ(structure_order("3^2", kAll), 9);
}

TEST(Structure, Operators) {
    EXPECT_EQ(structure_order("Sym3 × Sym4", kAll), 144);
    EXPECT_EQ(structure_order("Sym3 x Sym4", kAll), 144);
    EXPECT_EQ(structure_order("3^2:Q8.2", kAll), 144);
    EXPECT_EQ(structure_order("2^4:(3 × Alt4):2", kAll), 16 * 36 * 2);
    EXPECT_EQ(structure_order("Z(4) ∘ SL2(3)", kAll), 48);
    EXPECT_EQ(structure_order("Sym4 wr Sym3", kAll), 24 * 24 * 24 * 6);
    EXPECT_EQ(structure_order("Z(2)^5", kAll), 32);
    EXPECT_EQ(structure_order("Alt6/2", kAll), 180);
    EXPECT_EQ(structure_order("Z(2) wr Sym3 wr Sym2", kAll), oracle::power(BigInt(2 * 2 * 2 * 6), 2) * 2);
}

TEST(Structure, HallWrapperTakesPiPart) {
    EXPECT_EQ(structure_order("Hall(D(24))", {2, 3}), 24);
    EXPECT_EQ(structure_order("Hall(D(28))", {2, 3}), 4);
    EXPECT_EQ(structure_order("Hall(Z(10))", {2, 3}), 2);
    EXPECT_EQ(structure_order("Hall(SL2(7) wr Sym5)", {2, 3}), oracle::power(BigInt(48), 5) * 24);
}

TEST(Structure, Errors) {
    EXPECT_THROW(structure_order("Foo(3)", kAll), StructureError);
    EXPECT_THROW(structure_order("Z(4", kAll), StructureError);
    EXPECT_THROW(structure_order("Alt6/7", kAll), StructureError);
    EXPECT_THROW(structure_order("", kAll), StructureError);
}

}  // namespace
