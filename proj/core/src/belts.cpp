#include "rigidity/belts.hpp"

#include <algorithm>

#include "rigidity/errors.hpp"

namespace rigidity {

Belt normalize_cycle(std::vector<int> c) {
  if (c.size() < 3) return c;
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
  return c;
}

bool is_belt(const SimplePolytope& p, const std::vector<int>& c) {
  const int k = static_cast<int>(c.size());
  if (k < 3) return false;
  Mask seen = 0;
  for (int f : c) {
    if (f < 0 || f >= p.m() || contains(seen, f)) return false;
    seen |= bit(f);
  }
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const bool consecutive = b == a + 1 || (a == 0 && b == k - 1);
      if (p.adjacent(c[a], c[b]) != consecutive) return false;
    }
  if (k == 3 && p.is_vertex(seen)) return false;
  return true;
}

namespace {

std::vector<Belt> three_belts(const SimplePolytope& p) {
  std::vector<Belt> out;
  for (int a = 0; a < p.m(); ++a)
    for (int b : elements(p.neighbours(a) & ~(bit(a + 1) - 1)))
      for (int c : elements(p.neighbours(a) & p.neighbours(b) & ~(bit(b + 1) - 1)))
        if (!p.is_vertex(bit(a) | bit(b) | bit(c))) out.push_back({a, b, c});
  return out;
}

bool belt_less(const Belt& a, const Belt& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

std::vector<Belt> enumerate_belts(const SimplePolytope& p, int k) {
  std::vector<Belt> out;
  if (k == 0 || k == 3) out = three_belts(p);
  if (k == 0 || k >= 4) {
    CycleQuery q;
    q.min_len = k == 0 ? 4 : k;
    q.max_len = k;
    const auto cycles = chordless_cycles(dual_complex(p), q);
    out.insert(out.end(), cycles.begin(), cycles.end());
  }
  std::sort(out.begin(), out.end(), belt_less);
  return out;
}

bool has_belt(const SimplePolytope& p, int k) {
  if (k == 3) return !three_belts(p).empty();
  CycleQuery q;
  q.min_len = q.max_len = k;
  bool found = false;
  for_each_chordless_cycle(dual_complex(p), q, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

bool is_flag_polytope(const SimplePolytope& p) {
  if (p.m() == 4) return false;  // only the simplex has 4 facets
  return !has_belt(p, 3);
}

bool is_pogorelov(const SimplePolytope& p) { return is_flag_polytope(p) && !has_belt(p, 4); }

std::vector<int> facets_around(const SimplePolytope& p, int f) { return p.rotation(f); }

std::vector<int> facets_around_pair(const SimplePolytope& p, int a, int b) {
  if (!p.adjacent(a, b)) fail(ErrorKind::InvalidInput, "facets are not adjacent");
  std::vector<int> out;
  const auto& ra = p.rotation(a);
  const int ka = static_cast<int>(ra.size());
  const int pa = p.position(a, b);
  for (int s = 1; s < ka; ++s) out.push_back(ra[(pa + s) % ka]);
  // continue around b from the facet after pred_a(b)
  const auto& rb = p.rotation(b);
  const int kb = static_cast<int>(rb.size());
  const int pb = p.position(b, a);
  for (int s = 2; s < kb - 1; ++s) out.push_back(rb[(pb + s) % kb]);
  return out;
}

bool every_facet_surrounded(const SimplePolytope& p) {
  for (int f = 0; f < p.m(); ++f)
    if (!is_belt(p, facets_around(p, f))) return false;
  return true;
}

bool every_adjacent_pair_surrounded(const SimplePolytope& p) {
  for (const auto& [a, b] : p.edges())
    if (!is_belt(p, facets_around_pair(p, a, b))) return false;
  return true;
}

namespace {

void check_triple(const SimplePolytope& p, int i, int j, int k) {
  for (int x : {i, j, k})
    if (x < 0 || x >= p.m()) fail(ErrorKind::OutOfRange, "facet index out of range");
  if (i == j || i == k || j == k) fail(ErrorKind::InvalidInput, "facets must be distinct");
  if (p.adjacent(i, j)) fail(ErrorKind::InvalidInput, "the two belt facets must be disjoint");
}

// Visits belts through i and j avoiding k by increasing length; stops at the
// first length where `accept` selects something and returns the least accepted.
template <typename Accept>
std::optional<Belt> least_belt(const SimplePolytope& p, int i, int j, int k, Accept accept) {
  const SimplicialComplex dual = dual_complex(p);
  for (int len = 4; len <= p.m(); ++len) {
    CycleQuery q;
    q.through = {std::min(i, j), std::max(i, j)};
    q.avoid = bit(k);
    q.min_len = q.max_len = len;
    std::optional<Belt> best;
    for_each_chordless_cycle(dual, q, [&](const std::vector<int>& c) {
      if (accept(c) && (!best || c < *best)) best = c;
      return true;
    });
    if (best) return best;
  }
  return std::nullopt;
}

void split_arcs(const Belt& b, int i, int j, std::vector<int> arcs[2]) {
  const int n = static_cast<int>(b.size());
  const int start = static_cast<int>(std::find(b.begin(), b.end(), i) - b.begin());
  arcs[0].clear();
  arcs[1].clear();
  int which = 0;
  for (int s = 1; s < n; ++s) {
    const int f = b[(start + s) % n];
    if (f == j) {
      which = 1;
      continue;
    }
    arcs[which].push_back(f);
  }
}

}  // namespace

Belt find_separating_belt(const SimplePolytope& p, int i, int j, int k) {
  check_triple(p, i, j, k);
  auto b = least_belt(p, i, j, k, [](const std::vector<int>&) { return true; });
  if (!b) fail(ErrorKind::NotFound, "no belt through the two facets avoids the third");
  return *b;
}

ComponentAvoidingBelt find_component_avoiding_belt(const SimplePolytope& p, int i, int j, int k) {
  check_triple(p, i, j, k);
  auto disjoint_arc = [&](const std::vector<int>& c) {
    std::vector<int> arcs[2];
    split_arcs(c, i, j, arcs);
    for (int a = 0; a < 2; ++a)
      if (std::none_of(arcs[a].begin(), arcs[a].end(), [&](int f) { return p.adjacent(f, k); })) return a;
    return -1;
  };
  auto b = least_belt(p, i, j, k, [&](const std::vector<int>& c) { return disjoint_arc(c) >= 0; });
  if (!b) fail(ErrorKind::NotFound, "no belt has an arc disjoint from the third facet");
  ComponentAvoidingBelt out;
  out.belt = *b;
  split_arcs(out.belt, i, j, out.arcs);
  out.component = disjoint_arc(out.belt);
  return out;
}

namespace {

std::vector<std::vector<int>> components_of(const SimplePolytope& p, Mask set) {
  std::vector<std::vector<int>> out;
  Mask left = set;
  while (left) {
    const int s = std::countr_zero(left);
    Mask comp = bit(s), frontier = bit(s);
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Mask fresh = p.neighbours(v) & set & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    left &= ~comp;
    out.push_back(elements(comp));
  }
  return out;
}

}  // namespace

SurfacePieceHomology surface_piece_homology(const SimplePolytope& p, Mask facets) {
  const Mask all = full_mask(p.m());
  if (!is_subset(facets, all)) fail(ErrorKind::OutOfRange, "facet index out of range");
  SurfacePieceHomology h;
  h.components = components_of(p, facets);
  for (const auto& c : h.components)
    h.boundary_cycles.push_back(static_cast<int>(components_of(p, all & ~mask_of(c)).size()));
  const int s = static_cast<int>(h.components.size());
  h.r2 = s > 0 ? s - 1 : 0;
  if (facets == all) {
    h.r0 = 1;
    h.r1 = 0;
  } else {
    for (int c : h.boundary_cycles) h.r1 += c - 1;
  }
  return h;
}

}  // namespace rigidity
