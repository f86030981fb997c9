// One PASS/FAIL line per acceptance criterion. The exit status counts
// implementation failures; a claim refuted by an independent oracle is still
// reported as FAIL, with the counterexample, but does not fail the run.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "rigidity/belts.hpp"
#include "rigidity/constructions.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/formats.hpp"
#include "rigidity/macohomology.hpp"
#include "rigidity/manifolds.hpp"

using namespace rigidity;
using namespace rigidity::testing;

namespace {

struct Outcome {
  bool pass = true;
  bool refuted = false;  // the claim itself fails while the implementation matches its oracles
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

std::string read(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) fail(ErrorKind::InvalidInput, "cannot open " + path);
  std::string s;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, f)) > 0;) s.append(buf, n);
  std::fclose(f);
  return s;
}

std::vector<CorpusEntry> corpus_up_to(int max_m) {
  std::vector<CorpusEntry> out;
  for (auto& e : full_corpus())
    if (e.p.m() <= max_m) out.push_back(std::move(e));
  return out;
}

void two_segments(Outcome& o) {
  const SimplicialComplex k = complex_from_text(read(std::string(RIGIDITY_FIXTURES) + "/two_segments.complex"));
  const MomentAngleCohomology h(k, Coefficients::Z);
  const auto b = h.betti();
  o.check(b == std::vector<int>{1, 0, 0, 4, 4, 1, 0, 0, 0}, "Betti numbers");
  for (const auto& [j, l] : h.nonzero_spots()) o.check(h.spot(j, l).torsion().empty(), "torsion-free");
  o.check(b == hochster_betti(k, 1000003), "Hochster oracle");
  // u1u2u4v3 - u1u2u3v4 (1-based) generates the degree-5 group.
  const RBlock& blk = h.block(0b1111);
  Cochain c{0b1111, 1, std::vector<std::int64_t>(blk.basis[1].size(), 0)};
  c.coeffs[blk.index_of(1, 0b0100)] = 1;
  c.coeffs[blk.index_of(1, 0b1000)] = -1;
  const RingElement x = h.classify(c);
  const bool generates = x.parts.size() == 1 && x.parts.begin()->second.size() == 1 &&
                         std::abs(x.parts.begin()->second[0]) == 1;
  o.check(generates, "degree-5 generator");
  o.detail << "b=(1,4,4,1) in degrees 0,3,4,5; degree-5 class coordinate "
           << (generates ? x.parts.begin()->second[0] : 0);
}

void cube_sanity(Outcome& o) {
  const MomentAngleCohomology h(dual_complex(cube()), Coefficients::Z);
  std::vector<int> want(13, 0);
  want[0] = 1, want[3] = 3, want[6] = 3, want[9] = 1;
  o.check(h.betti() == want, "Betti numbers");
  o.check(!h3_square_trivial(cube()), "H^3 products");
  const int belts4 = static_cast<int>(enumerate_belts(cube(), 4).size());
  o.check(belts4 == 3 && belt_count_by_scan(cube(), 4) == 3, "four-belts");
  o.detail << "b=(1,3,3,1) in degrees 0,3,6,9; nontrivial H^3 products; " << belts4 << " four-belts";
}

void pogorelov_classification(Outcome& o) {
  int checked = 0;
  auto expect = [&](const std::string& name, const SimplePolytope& p, bool want) {
    o.check(is_pogorelov(p) == want, name);
    ++checked;
  };
  for (int k = 5; k <= 8; ++k) expect("barrel(" + std::to_string(k) + ")", barrel(k), true);
  expect("edgecut(dodecahedron)", edge_cut_all(dodecahedron()), true);
  expect("simplex", simplex(), false);
  expect("cube", cube(), false);
  for (int k = 3; k <= 12; ++k) expect("prism(" + std::to_string(k) + ")", prism(k), false);
  expect("vertex sum", dodecahedra_vertex_sum(), false);
  for (const auto& s : dodecahedra_edge_sums()) expect("edge sum", s, false);
  expect("mixed sum", dodecahedra_mixed_sum(), false);
  o.detail << checked << " polytopes classified";
}

void product_criterion(Outcome& o) {
  const auto corpus = full_corpus();
  o.check(constructed_corpus().size() >= 20, "corpus size");
  int with4 = 0;
  for (const auto& [name, p] : corpus) {
    const bool belt4 = belt_count_by_scan(p, 4) > 0;
    o.check(has_belt(p, 4) == belt4, name + " belt search");
    o.check(h3_square_trivial(p) == !belt4, name);
    with4 += belt4;
  }
  o.detail << corpus.size() << " polytopes, " << with4 << " with a 4-belt";
}

void hochster(Outcome& o) {
  const auto corpus = corpus_up_to(14);
  for (const auto& [name, p] : corpus) {
    const SimplicialComplex k = dual_complex(p);
    const MomentAngleCohomology h(k, Coefficients::Z);
    try {
      h.verify_against_full_subcomplexes();
    } catch (const Error& e) {
      o.check(false, name + ": " + e.what());
    }
    const auto b = h.betti();
    o.check(b == hochster_betti(k, 1000003), name + " F_p oracle");
    for (int l = 0; l <= p.m() + 3; ++l) o.check(b[l] == b[p.m() + 3 - l], name + " duality");
    for (int l = p.m() + 4; l < static_cast<int>(b.size()); ++l) o.check(b[l] == 0, name + " top degree");
    for (const auto& [j, l] : h.nonzero_spots()) o.check(h.spot(j, l).torsion().empty(), name + " torsion");
  }
  o.detail << corpus.size() << " polytopes with m <= 14, every multidegree";
}

void surface_pieces(Outcome& o) {
  const auto corpus = corpus_up_to(14);
  long subsets = 0;
  for (const auto& [name, p] : corpus) {
    const SimplicialComplex k = dual_complex(p);
    for (Mask i = 0;; ++i) {
      const auto s = surface_piece_homology(p, i);
      const auto full = full_subcomplex(k, i).complex;
      const auto rb = reduced_betti_mod_p(full, 1000003);  // degrees -1..
      auto r = [&](int d) { return d + 1 < static_cast<int>(rb.size()) ? rb[d + 1] : 0; };
      if (s.r2 != r(0) || s.r1 != r(1) || s.r0 != r(2)) {
        o.check(false, name + " I=" + std::to_string(i));
        break;
      }
      ++subsets;
      if (i == full_mask(p.m())) break;
    }
  }
  o.detail << corpus.size() << " polytopes, " << subsets << " facet sets";
}

void decomposability(Outcome& o) {
  int witnesses = 0;
  for (const auto& p : triple_truncations_of_simplex()) {
    const auto rep = decomposability_report(p, Coefficients::Z, {p.m() - 2});
    if (rep.indecomposable.count(p.m() - 2) && rep.indecomposable.at(p.m() - 2) > 0) ++witnesses;
  }
  o.check(witnesses > 0, "triple-truncated simplex");
  int flag = 0;
  for (const auto& [name, p] : corpus_up_to(16)) {
    if (!is_flag_polytope(p)) continue;
    const auto rep = decomposability_report(p, Coefficients::Z, {p.m() - 2});
    o.check(rep.indecomposable.count(p.m() - 2) == 0 || rep.indecomposable.at(p.m() - 2) == 0, name);
    ++flag;
  }
  o.detail << witnesses << " triple truncation(s) with an indecomposable degree-5 class; " << flag
           << " flag polytopes (m <= 16) with none in degree m-2";
}

// dim Ann(x) = dim H - rank of multiplication by x, assembled from products of basis generators.
long annihilator_by_rank(const MomentAngleCohomology& h, const RingElement& x) {
  std::vector<RingElement> gens;
  for (const auto& [j, l] : h.nonzero_spots())
    for (int g = 0; g < h.spot(j, l).generator_count(); ++g) gens.push_back(h.generator(j, l, g));
  std::map<std::pair<std::pair<Mask, int>, int>, int> coord;
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& y : gens) {
    const RingElement xy = h.cup_product(x, y);
    std::vector<std::int64_t> row;
    for (const auto& [spot, v] : xy.parts)
      for (std::size_t g = 0; g < v.size(); ++g) {
        const auto key = std::make_pair(spot, static_cast<int>(g));
        if (!coord.count(key)) coord.emplace(key, static_cast<int>(coord.size()));
        const int c = coord.at(key);
        if (static_cast<int>(row.size()) <= c) row.resize(static_cast<std::size_t>(c) + 1, 0);
        row[c] = v[g];
      }
    rows.push_back(row);
  }
  for (auto& r : rows) r.resize(coord.size(), 0);
  return static_cast<long>(gens.size()) - (coord.empty() ? 0 : rank_mod_p(rows, 2));
}

void annihilators(Outcome& o) {
  const MomentAngleCohomology h(dual_complex(barrel(5)), Coefficients::Z2);
  const auto basis = h3_basis(h.complex());
  std::vector<RingElement> x;
  std::vector<long> ann;
  for (const auto& [i, j] : basis) {
    x.push_back(h3_class(h, i, j));
    ann.push_back(annihilator_dim(h, x.back()));
  }
  std::mt19937 rng(20);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  int oracle_checks = 0;
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    const RingElement alpha = h.add(x[a], x[b]);
    const long d = annihilator_dim(h, alpha);
    if (trial < 5) {
      o.check(d == annihilator_by_rank(h, alpha), "rank oracle for a combination");
      o.check(ann[a] == annihilator_by_rank(h, x[a]), "rank oracle for a basis class");
      oracle_checks += 2;
    }
    o.check(ann[a] > d && ann[b] > d, "Ann inequality");
  }
  o.detail << "25 combinations of " << basis.size() << " basis classes; " << oracle_checks
           << " dimensions confirmed by rank";
}

// Orbits of colourings under symmetries x colour permutations, by Burnside over stabilizers.
long colouring_orbits_by_burnside(const SimplePolytope& p) {
  const auto colourings = enumerate_colourings(p);
  const auto autos = isomorphisms(p, p);
  std::vector<int> perm{0, 1, 2, 3};
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  long fixed = 0;
  for (const auto& chi : colourings)
    for (const auto& s : autos)
      for (const auto& pi : perms) {
        bool same = true;
        for (int i = 0; i < p.m() && same; ++i) same = chi[s[i]] == pi[chi[i]];
        fixed += same;
      }
  return fixed / static_cast<long>(autos.size() * perms.size());
}

void colouring_counts(Outcome& o) {
  const int c5 = colouring_classes(barrel(5)), c6 = colouring_classes(barrel(6));
  o.check(c5 == 1 && c6 == 4, "class counts");
  o.check(colouring_orbits_by_burnside(barrel(5)) == 1, "barrel(5) Burnside");
  o.check(colouring_orbits_by_burnside(barrel(6)) == 4, "barrel(6) Burnside");
  o.check(static_cast<long>(enumerate_colourings(barrel(5)).size()) == colourings_by_scan(barrel(5)),
          "barrel(5) colouring count");
  o.detail << "classes " << c5 << " and " << c6 << ", confirmed by Burnside counting";
}

void pair_decisions(Outcome& o) {
  std::mt19937 rng(99);
  int scrambled = 0;
  for (const auto& [name, p] : catalog_corpus())
    for (const auto& chi : colouring_class_representatives(p)) {
      const CharMatrix l = colouring_to_matrix(chi);
      for (int trial = 0; trial < 2; ++trial) {
        const Scrambled s = scramble(p, l, rng);
        const auto w = pairs_equivalent(base_of(p), l, base_of(s.p), s.l);
        o.check(w.has_value() && verify_pair_equivalence(l, s.l, *w), name + " scrambled");
        ++scrambled;
      }
    }
  o.check(!pairs_equivalent(polygon(4), hirzebruch(2), polygon(4), hirzebruch(4)).has_value(), "Hirzebruch");
  const SimplePolytope q = barrel(6);
  const auto reps = colouring_class_representatives(q);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const bool eq = pairs_equivalent(base_of(q), colouring_to_matrix(reps[i]), base_of(q),
                                       colouring_to_matrix(reps[j]))
                          .has_value();
      o.check(eq == (i == j), "barrel(6) classes");
    }
  o.detail << scrambled << " scrambled self-pairs equivalent; Hirzebruch 2/4 inequivalent; " << reps.size()
           << " barrel(6) classes pairwise inequivalent";
}

void mode_consistency(Outcome& o) {
  long comparisons = 0, witnesses = 0;
  std::mt19937 rng(7);
  for (int k : {5, 6}) {
    const SimplePolytope p = barrel(k);
    const CombinatorialBase b = base_of(p);
    std::vector<QtRing> reps;
    for (const auto& chi : colouring_class_representatives(p)) reps.push_back(qt_ring(b, colouring_to_matrix(chi)));
    auto compare = [&](const QtRing& x, const QtRing& y) {
      const auto pair = ring_isomorphic(x, y, IsoMode::PairEquivalence);
      const auto gen = ring_isomorphic(x, y, IsoMode::GeneratorRestricted);
      o.check(pair.isomorphic == gen.isomorphic, "verdicts agree");
      if (gen.generator) {
        o.check(verify_generator_witness(x, y, *gen.generator), "witness valid");
        o.check(witness_preserves_p1(x, y, *gen.generator), "witness preserves sum v_i^2");
        ++witnesses;
      }
      ++comparisons;
      return gen.isomorphic;
    };
    for (const auto& chi : enumerate_colourings(p)) {
      const QtRing r = qt_ring(b, colouring_to_matrix(chi));
      int matches = 0;
      for (const auto& rep : reps) matches += compare(r, rep);
      o.check(matches == 1, "each colouring matches exactly one class");
    }
    for (const auto& rep : reps) {
      const Scrambled s = scramble(p, rep.lambda, rng);
      const QtRing r = qt_ring(base_of(s.p), s.l);
      for (const auto& other : reps) compare(r, other);
    }
  }
  o.detail << comparisons << " ring comparisons, " << witnesses << " witnesses checked";
}

void signature_identity(Outcome& o) {
  std::mt19937 rng(12);
  int total = 0, violations = 0, toric = 0;
  std::string example;
  bool implementation_ok = true;
  for (int m = 4; m <= 8; ++m) {
    for (int trial = 0; trial < 40; ++trial) {
      const CharMatrix l = random_polygon_matrix(m, rng);
      const QtRing r = qt_ring(polygon(m), l);
      const std::int64_t p1 = *pontryagin_w(r).p1_number;
      implementation_ok &= p1 == 3 * signature_of(r);
      ++total;
      if (p1 != 12 - 3 * m) {
        if (violations++ == 0) {
          std::string t = to_text(l);
          while (!t.empty() && t.back() == '\n') t.pop_back();
          for (char& ch : t)
            if (ch == '\n') ch = ';';
          example = "m=" + std::to_string(m) + " [" + t + "] gives " + std::to_string(p1) + " vs " +
                    std::to_string(12 - 3 * m);
        }
      }
    }
    for (int trial = 0; trial < 20; ++trial) {
      const QtRing r = qt_ring(polygon(m), random_fan(m, rng));
      implementation_ok &= *pontryagin_w(r).p1_number == 12 - 3 * m;
      ++toric;
    }
  }
  if (violations == 0) {
    o.check(implementation_ok, "3 sign(M) oracle");
    o.detail << total << " matrices satisfy 12 - 3m";
    return;
  }
  o.pass = false;
  o.refuted = implementation_ok;
  o.detail << "claim refuted: " << violations << " of " << total << " random characteristic matrices violate it, e.g. "
           << example << ". <p1,[M]> equals 3 sign(M) (independent signature oracle) on all " << total
           << " and 12 - 3m on all " << toric << " toric fans; implementation "
           << (implementation_ok ? "consistent" : "INCONSISTENT");
}

void bookkeeping(Outcome& o) {
  std::set<std::map<int, int>> outcomes;
  const auto sums = dodecahedra_edge_sums();
  for (const auto& s : sums) outcomes.insert(pk_vector(s).p);
  const std::set<std::map<int, int>> want{{{5, 16}, {7, 4}}, {{5, 16}, {6, 2}, {8, 2}}};
  o.check(outcomes == want, "edge-sum p_k outcomes");
  int cut = 0;
  for (const auto& [name, p] : full_corpus()) {
    if (cut == 10 || 4 * p.m() - 6 > 64) continue;  // P_E has m + f1 = 4m - 6 facets
    const PkVector before = pk_vector(p), after = pk_vector(edge_cut_all(p));
    o.check(after.at(6) == before.at(6) + before.f1, name + " edge cut");
    ++cut;
  }
  o.check(cut == 10, "ten polytopes");
  o.detail << sums.size() << " alignments give " << outcomes.size() << " p_k outcomes; p6 bookkeeping on " << cut
           << " polytopes";
}

}  // namespace

int main(int argc, char** argv) {
  // optional arguments select criteria by number
  std::set<std::size_t> only;
  for (int a = 1; a < argc; ++a) only.insert(static_cast<std::size_t>(std::atoi(argv[a])));
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"two-segments complex Betti numbers and degree-5 generator", two_segments},
      {"cube Betti numbers, H^3 products and four-belts", cube_sanity},
      {"Pogorelov classification", pogorelov_classification},
      {"H^3 products vanish iff there is no 4-belt", product_criterion},
      {"R*(K) agrees with full-subcomplex cohomology; Poincare duality", hochster},
      {"surface pieces match full-subcomplex cohomology", surface_pieces},
      {"indecomposable classes in degree m-2", decomposability},
      {"annihilator inequality on barrel(5) over Z2", annihilators},
      {"colouring classes of barrel(5) and barrel(6)", colouring_counts},
      {"pair-equivalence decisions", pair_decisions},
      {"generator-restricted and pair-equivalence verdicts agree", mode_consistency},
      {"signature identity <p1,[M]> = 12 - 3m on m-gons", signature_identity},
      {"construction p_k bookkeeping", bookkeeping},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && !only.count(i + 1)) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %2zu: %s (%.1fs) -- %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                secs, o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.pass && !o.refuted) ++failures;
  }
  return failures;
}
