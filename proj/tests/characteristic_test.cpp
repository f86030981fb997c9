#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "corpus.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "rigidity/characteristic.hpp"
#include "rigidity/errors.hpp"

using namespace rigidity;
using namespace rigidity::testing;

TEST(Characteristic, DetectsViolation) {
  const CombinatorialBase b = base_of(cube());
  CharMatrix l = colouring_to_matrix({0, 1, 2, 0, 1, 2});
  EXPECT_TRUE(is_characteristic(b, l).ok);
  for (int r = 0; r < 3; ++r) l.entries(r, 1) = l.entries(r, 0);
  const auto check = is_characteristic(b, l);
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.determinant, 0);
  EXPECT_EQ(check.violating_vertex.size(), 3u);
  EXPECT_THROW(is_characteristic(base_of(simplex()), l), Error);
}

TEST(Characteristic, HirzebruchMatricesAreCharacteristic) {
  for (int k = -5; k <= 5; ++k) EXPECT_TRUE(is_characteristic(polygon(4), hirzebruch(k)).ok) << k;
}

TEST(Colourings, CountsMatchExhaustiveScan) {
  for (const auto& p : {simplex(), cube(), prism(3), prism(5), dodecahedron()})
    EXPECT_EQ(static_cast<long>(enumerate_colourings(p).size()), colourings_by_scan(p));
}

TEST(Colourings, ClassCounts) {
  EXPECT_EQ(colouring_classes(simplex()), 1);
  EXPECT_EQ(colouring_classes(barrel(5)), 1);
  EXPECT_EQ(colouring_classes(barrel(6)), 4);
}

TEST(Colourings, MatricesAreCharacteristic) {
  for (const auto& [name, p] : catalog_corpus()) {
    const auto reps = colouring_class_representatives(p);
    ASSERT_FALSE(reps.empty()) << name;
    for (const auto& chi : reps) EXPECT_TRUE(is_characteristic(base_of(p), colouring_to_matrix(chi)).ok) << name;
  }
}

TEST(LiftMod2, DisplayedBlockAndRoundTrip) {
  Matrix block(3, 3);
  const int v[3][3] = {{1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) block(r, c) = v[r][c];
  EXPECT_EQ(std::abs(determinant(block)), 1);
  for (const auto& [name, p] : catalog_corpus()) {
    const CombinatorialBase b = base_of(p);
    const CharMatrix l2 = reduce_mod2(colouring_to_matrix(colouring_class_representatives(p).front()));
    const CharMatrix lifted = lift_mod2(b, l2);
    EXPECT_TRUE(is_characteristic(b, lifted).ok) << name;
    EXPECT_EQ(reduce_mod2(lifted), l2) << name;
  }
}

TEST(LiftMod2, EveryOddZeroOneBlockIsUnimodular) {
  for (int code = 0; code < 512; ++code) {
    Matrix a(3, 3);
    for (int i = 0; i < 9; ++i) a(i / 3, i % 3) = code >> i & 1;
    const std::int64_t d = determinant(a);
    if (d % 2 != 0) ASSERT_TRUE(d == 1 || d == -1);
  }
}

TEST(PairEquivalence, ScrambledSelfPairs) {
  std::mt19937 rng(99);
  for (const auto& [name, p] : catalog_corpus()) {
    const CharMatrix l = colouring_to_matrix(colouring_class_representatives(p).back());
    for (int trial = 0; trial < 3; ++trial) {
      const Scrambled s = scramble(p, l, rng);
      ASSERT_TRUE(is_characteristic(base_of(s.p), s.l).ok);
      const auto w = pairs_equivalent(base_of(p), l, base_of(s.p), s.l);
      ASSERT_TRUE(w.has_value()) << name;
      EXPECT_TRUE(verify_pair_equivalence(l, s.l, *w)) << name;
      const auto back = pairs_equivalent(base_of(s.p), s.l, base_of(p), l);
      EXPECT_TRUE(back.has_value()) << name;
    }
  }
}

TEST(PairEquivalence, HirzebruchInequivalent) {
  EXPECT_FALSE(pairs_equivalent(polygon(4), hirzebruch(2), polygon(4), hirzebruch(4)).has_value());
  EXPECT_TRUE(pairs_equivalent(polygon(4), hirzebruch(2), polygon(4), hirzebruch(-2)).has_value());
}

TEST(PairEquivalence, BarrelSixColouringClassesInequivalent) {
  const SimplePolytope p = barrel(6);
  const auto reps = colouring_class_representatives(p);
  ASSERT_EQ(reps.size(), 4u);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const bool eq = pairs_equivalent(base_of(p), colouring_to_matrix(reps[i]), base_of(p),
                                       colouring_to_matrix(reps[j]))
                          .has_value();
      EXPECT_EQ(eq, i == j) << i << " vs " << j;
    }
}

TEST(CharZ2, CountsMatchExhaustiveScan) {
  EXPECT_EQ(enumerate_char_z2(simplex()).count, 168);
  EXPECT_EQ(enumerate_char_z2(simplex()).classes, 1);
  for (const auto& p : {simplex(), prism(3), cube(), prism(5)})
    EXPECT_EQ(enumerate_char_z2(p).count, char_z2_by_scan(p));
  EXPECT_GE(enumerate_char_z2(cube()).count, static_cast<long>(enumerate_colourings(cube()).size()));
  EXPECT_THROW(enumerate_char_z2(barrel(7)), Error);
}
