#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "rigidity/complex.hpp"
#include "rigidity/errors.hpp"

using namespace rigidity;
using namespace rigidity::testing;

namespace {

SimplicialComplex random_complex(std::mt19937& rng, int m) {
  std::uniform_int_distribution<int> size(1, std::min(m, 4));
  std::uniform_int_distribution<int> count(1, 6);
  std::vector<Mask> faces;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<int> v(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) v[j] = j;
    std::shuffle(v.begin(), v.end(), rng);
    Mask f = 0;
    for (int j = 0, s = size(rng); j < s; ++j) f |= bit(v[j]);
    faces.push_back(f);
  }
  return SimplicialComplex(m, faces);
}

}  // namespace

TEST(SimplicialComplex, TwoSegments) {
  const SimplicialComplex k(4, {0b0011, 0b1100});
  EXPECT_EQ(k.faces().size(), 1u + 4u + 2u);
  EXPECT_EQ(k.dimension(), 1);
  EXPECT_EQ(k.euler_characteristic(), 2);
  EXPECT_TRUE(k.has_edge(0, 1));
  EXPECT_FALSE(k.has_edge(1, 2));
  EXPECT_EQ(missing_faces(k), (std::vector<Mask>{0b0101, 0b0110, 0b1001, 0b1010}));
  EXPECT_TRUE(is_flag(k));
}

TEST(SimplicialComplex, MaximalFacesAreNormalized) {
  const SimplicialComplex a(3, {0b011, 0b001, 0b110});
  const SimplicialComplex b(3, {0b110, 0b011});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.maximal_faces().size(), 2u);
}

TEST(SimplicialComplex, RejectsOutOfRangeVertices) {
  EXPECT_THROW(SimplicialComplex(3, {0b1000}), Error);
}

TEST(SimplicialComplex, BoundaryOfSimplexIsNotFlag) {
  const SimplicialComplex k(3, {0b011, 0b110, 0b101});
  EXPECT_FALSE(is_flag(k));
  EXPECT_EQ(missing_faces(k), std::vector<Mask>{0b111});
  const auto h = reduced_cohomology(k, Coefficients::Z);
  EXPECT_EQ(h.at(1).rank, 1);
  EXPECT_EQ(h.at(0).rank, 0);
}

TEST(SimplicialComplex, MissingFacesMatchScan) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = random_complex(rng, 3 + trial % 5);
    auto want = missing_faces_by_scan(k);
    auto got = missing_faces(k);
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    ASSERT_EQ(got, want);
  }
}

TEST(ReducedCohomology, MatchesModPOracleOnRandomComplexes) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = random_complex(rng, 3 + trial % 5);
    const auto want = reduced_betti_mod_p(k, 2);
    const auto h = reduced_cohomology(k, Coefficients::Z2);
    for (int d = -1; d < k.m(); ++d) {
      const int got = d <= h.top_degree() ? h.at(d).rank : 0;
      ASSERT_EQ(got, want[d + 1]) << "degree " << d;
    }
    // Over Z the free ranks agree with F_p for a large prime.
    const auto wantq = reduced_betti_mod_p(k, 1000003);
    const auto hz = reduced_cohomology(k, Coefficients::Z);
    for (int d = -1; d <= hz.top_degree(); ++d) ASSERT_EQ(hz.at(d).rank, wantq[d + 1]);
  }
}

TEST(ReducedCohomology, EmptyComplexHasClassInDegreeMinusOne) {
  const SimplicialComplex k(3, {0b111});
  const auto full = full_subcomplex(k, 0);
  const auto h = reduced_cohomology(full.complex, Coefficients::Z);
  EXPECT_EQ(h.at(-1).rank, 1);
}

TEST(ReducedCohomology, CoboundarySquaresToZero) {
  const SimplicialComplex k(5, {0b00111, 0b01110, 0b11100, 0b11001});
  for (int s = 0; s + 2 <= 3; ++s) {
    const auto a = faces_within(k, full_mask(5), s);
    const auto b = faces_within(k, full_mask(5), s + 1);
    const auto c = faces_within(k, full_mask(5), s + 2);
    if (c.empty()) continue;
    const Matrix d1 = simplicial_coboundary(a, b, Coefficients::Z);
    const Matrix d2 = simplicial_coboundary(b, c, Coefficients::Z);
    EXPECT_EQ(multiply(d2, d1), Matrix(d2.rows(), d1.cols()));
  }
}

TEST(FullSubcomplex, Reindexes) {
  const SimplicialComplex k(4, {0b0011, 0b1100});
  const auto f = full_subcomplex(k, 0b1010);
  EXPECT_EQ(f.vertices, (std::vector<int>{1, 3}));
  EXPECT_EQ(f.complex.maximal_faces(), (std::vector<Mask>{0b01, 0b10}));
}

TEST(ChordlessCycles, MatchScanOnDualComplexes) {
  for (const auto& [name, p] : catalog_corpus()) {
    const auto k = dual_complex(p);
    for (int len = 4; len <= std::min(p.m(), 9); ++len) {
      CycleQuery q;
      q.min_len = q.max_len = len;
      std::vector<Mask> got;
      for (const auto& c : chordless_cycles(k, q)) got.push_back(mask_of(c));
      auto want = induced_cycles_by_scan(k, len);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      ASSERT_EQ(got, want) << name << " length " << len;
    }
  }
}

TEST(ChordlessCycles, CubeHasThreeFourCycles) {
  CycleQuery q;
  q.max_len = 4;
  EXPECT_EQ(chordless_cycles(dual_complex(cube()), q).size(), 3u);
  EXPECT_TRUE(chordless_cycles(dual_complex(barrel(5)), q).empty());
}

TEST(ChordlessCycles, ThroughAndAvoidFilter) {
  const auto k = dual_complex(cube());
  CycleQuery q;
  q.through = {{0, 3}};
  q.avoid = bit(1);
  const auto cycles = chordless_cycles(k, q);
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(mask_of(cycles[0]), bit(0) | bit(2) | bit(3) | bit(5));
}
