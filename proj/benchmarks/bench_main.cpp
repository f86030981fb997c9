#include <benchmark/benchmark.h>

#include "rigidity/belts.hpp"
#include "rigidity/characteristic.hpp"
#include "rigidity/constructions.hpp"
#include "rigidity/formats.hpp"
#include "rigidity/macohomology.hpp"
#include "rigidity/manifolds.hpp"

using namespace rigidity;

namespace {

void BM_EnumerateBelts(benchmark::State& state) {
  const SimplePolytope p = barrel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_belts(p));
}
BENCHMARK(BM_EnumerateBelts)->Arg(6)->Arg(10)->Arg(16);

void BM_IsPogorelovEdgeCut(benchmark::State& state) {
  const SimplePolytope p = edge_cut_all(dodecahedron());
  for (auto _ : state) benchmark::DoNotOptimize(is_pogorelov(p));
}
BENCHMARK(BM_IsPogorelovEdgeCut);

void BM_CanonicalCode(benchmark::State& state) {
  const SimplePolytope p = barrel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(p));
}
BENCHMARK(BM_CanonicalCode)->Arg(6)->Arg(12);

void BM_ParseSumExpression(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_expression("sum(barrel(6)@F1, barrel(6)@F1, rev:1)"));
}
BENCHMARK(BM_ParseSumExpression);

void BM_ZkBetti(benchmark::State& state) {
  const SimplicialComplex k = dual_complex(barrel(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    const MomentAngleCohomology h(k, Coefficients::Z);
    benchmark::DoNotOptimize(h.betti());
  }
}
BENCHMARK(BM_ZkBetti)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_H3SquareTrivial(benchmark::State& state) {
  const SimplePolytope p = barrel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h3_square_trivial(p));
}
BENCHMARK(BM_H3SquareTrivial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_AnnihilatorDodecahedron(benchmark::State& state) {
  const MomentAngleCohomology h(dual_complex(dodecahedron()), Coefficients::Z2);
  const auto [i, j] = h3_basis(h.complex()).front();
  const RingElement x = h3_class(h, i, j);
  (void)annihilator_dim(h, x);  // warm the block cache
  for (auto _ : state) benchmark::DoNotOptimize(annihilator_dim(h, x));
}
BENCHMARK(BM_AnnihilatorDodecahedron)->Unit(benchmark::kMillisecond);

void BM_ColouringClasses(benchmark::State& state) {
  const SimplePolytope p = barrel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(colouring_classes(p));
}
BENCHMARK(BM_ColouringClasses)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_PairEquivalence(benchmark::State& state) {
  const SimplePolytope p = barrel(6);
  const auto reps = colouring_class_representatives(p);
  const CharMatrix a = colouring_to_matrix(reps[0]), b = colouring_to_matrix(reps[1]);
  const CombinatorialBase base = base_of(p);
  for (auto _ : state) benchmark::DoNotOptimize(pairs_equivalent(base, a, base, b));
}
BENCHMARK(BM_PairEquivalence);

void BM_QtRingAndGeneratorSearch(benchmark::State& state) {
  const SimplePolytope p = barrel(6);
  const auto reps = colouring_class_representatives(p);
  const CombinatorialBase base = base_of(p);
  for (auto _ : state) {
    const QtRing a = qt_ring(base, colouring_to_matrix(reps[0]));
    const QtRing b = qt_ring(base, colouring_to_matrix(reps[0]));
    benchmark::DoNotOptimize(ring_isomorphic(a, b, IsoMode::GeneratorRestricted));
  }
}
BENCHMARK(BM_QtRingAndGeneratorSearch)->Unit(benchmark::kMillisecond);

void BM_CharZ2Census(benchmark::State& state) {
  const SimplePolytope p = prism(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_char_z2(p));
}
BENCHMARK(BM_CharZ2Census)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
