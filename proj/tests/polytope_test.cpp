#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/polytope.hpp"

using namespace rigidity;
using namespace rigidity::testing;

namespace {

ErrorKind kind_of(const std::vector<std::vector<int>>& rot) {
  try {
    (void)SimplePolytope::from_rotation_system(rot);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted an invalid rotation system";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(Catalog, FaceCounts) {
  struct Want {
    SimplePolytope p;
    int f0, f1, f2;
  };
  const std::vector<Want> wants{{simplex(), 4, 6, 4},    {cube(), 8, 12, 6},      {prism(5), 10, 15, 7},
                                {barrel(5), 20, 30, 12}, {barrel(7), 28, 42, 16}, {dodecahedron(), 20, 30, 12}};
  for (const auto& w : wants) {
    const PkVector pk = pk_vector(w.p);
    EXPECT_EQ(pk.f0, w.f0);
    EXPECT_EQ(pk.f1, w.f1);
    EXPECT_EQ(pk.f2, w.f2);
  }
  EXPECT_EQ(pk_vector(dodecahedron()).at(5), 12);
  EXPECT_EQ(pk_vector(barrel(7)).at(7), 2);
  EXPECT_EQ(pk_vector(barrel(7)).at(5), 14);
}

TEST(Catalog, PkIdentitiesHoldOnCorpus) {
  for (const auto& [name, p] : full_corpus()) {
    const PkVector pk = pk_vector(p);
    int weighted = 0;
    for (const auto& [k, n] : pk.p) weighted += (6 - k) * n;
    EXPECT_EQ(weighted, 12) << name;
    EXPECT_EQ(pk.f0 - pk.f1 + pk.f2, 2) << name;
    EXPECT_EQ(2 * pk.f1, 3 * pk.f0) << name;
  }
}

TEST(Catalog, RejectsSmallParameters) {
  EXPECT_THROW(prism(2), Error);
  EXPECT_THROW(barrel(4), Error);
}

TEST(SteinitzValidation, RejectsMalformedRotations) {
  // A square pyramid has a 4-valent apex.
  EXPECT_EQ(kind_of({{1, 2, 3, 4}, {0, 4, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 1}}), ErrorKind::NonSimple);
  EXPECT_EQ(kind_of({{1, 1, 2}, {0, 2, 3}, {0, 3, 1}, {0, 1, 2}}), ErrorKind::BadIntersection);
  EXPECT_EQ(kind_of({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2}}), ErrorKind::NotSphere);
  EXPECT_EQ(kind_of({{1, 2}, {0, 2}, {0, 1}}), ErrorKind::NotSphere);
  EXPECT_EQ(kind_of({{1, 2, 9}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}), ErrorKind::OutOfRange);
}

TEST(SteinitzValidation, OrientationIsNormalized) {
  // Reversing one rotation still describes the same polytope.
  auto rot = cube().rotation();
  std::reverse(rot[3].begin(), rot[3].end());
  const SimplePolytope p = SimplePolytope::from_rotation_system(rot);
  EXPECT_EQ(p, cube());
  for (int f = 0; f < p.m(); ++f)
    for (int g : p.rotation(f)) {
      const int h = p.successor(f, g);
      EXPECT_EQ(p.successor(g, h), f);
    }
}

TEST(Vertices, AreTriplesOfPairwiseAdjacentFacets) {
  for (const auto& [name, p] : full_corpus()) {
    for (Mask v : p.vertices()) {
      const auto e = elements(v);
      ASSERT_EQ(e.size(), 3u);
      EXPECT_TRUE(p.adjacent(e[0], e[1]) && p.adjacent(e[1], e[2]) && p.adjacent(e[0], e[2])) << name;
    }
    EXPECT_TRUE(std::is_sorted(p.vertices().begin(), p.vertices().end()));
  }
}

TEST(CanonicalCode, InvariantUnderRandomRelabeling) {
  std::mt19937 rng(42);
  for (const auto& [name, p] : full_corpus()) {
    const std::string code = canonical_code(p);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> perm(static_cast<std::size_t>(p.m()));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const SimplePolytope q = relabel(p, perm);
      ASSERT_EQ(canonical_code(q), code) << name;
      const auto iso = is_isomorphic(p, q);
      ASSERT_TRUE(iso.has_value()) << name;
      for (int f = 0; f < p.m(); ++f)
        for (int g : p.rotation(f)) ASSERT_TRUE(q.adjacent((*iso)[f], (*iso)[g]));
    }
  }
}

TEST(CanonicalCode, SeparatesDistinctPolytopes) {
  const auto corpus = catalog_corpus();
  std::set<std::string> codes;
  for (const auto& [name, p] : corpus) codes.insert(canonical_code(p));
  EXPECT_EQ(codes.size(), corpus.size());
  EXPECT_EQ(canonical_code(barrel(5)), canonical_code(dodecahedron()));
}

TEST(Isomorphisms, MatchPermutationScanOnSmallPolytopes) {
  // For 3-connected planar graphs the graph automorphisms are exactly the
  // combinatorial symmetries, reflections included.
  for (const auto& p : {simplex(), cube(), prism(3), prism(5)}) {
    auto got = isomorphisms(p, p);
    auto want = isomorphisms_by_permutation(p, p);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
  }
  EXPECT_EQ(isomorphisms(simplex(), simplex()).size(), 24u);
  EXPECT_EQ(isomorphisms(cube(), cube()).size(), 48u);
  EXPECT_EQ(isomorphisms(dodecahedron(), dodecahedron()).size(), 120u);
  EXPECT_EQ(isomorphisms(barrel(6), barrel(6)).size(), 24u);
}

TEST(CombinatorialBase, PolygonAndPolytope) {
  const CombinatorialBase g = polygon(5);
  EXPECT_EQ(g.n, 2);
  EXPECT_EQ(g.vertices.size(), 5u);
  EXPECT_EQ(g.base_vertex(), (std::vector<int>{0, 1}));
  EXPECT_EQ(base_isomorphisms(g, g).size(), 10u);
  const CombinatorialBase c = base_of(cube());
  EXPECT_EQ(c.vertices.size(), 8u);
  EXPECT_EQ(c.base_vertex().size(), 3u);
  EXPECT_EQ(base_isomorphisms(c, c).size(), 48u);
}

TEST(DualComplex, IsTheBoundarySphere) {
  for (const auto& [name, p] : catalog_corpus()) {
    const SimplicialComplex k = dual_complex(p);
    EXPECT_EQ(k.maximal_faces().size(), static_cast<std::size_t>(p.vertex_count())) << name;
    EXPECT_EQ(k.euler_characteristic(), 2) << name;
    const auto h = reduced_cohomology(k, Coefficients::Z);
    EXPECT_EQ(h.at(2).rank, 1) << name;
  }
}
