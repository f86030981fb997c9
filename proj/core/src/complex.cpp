#include "rigidity/complex.hpp"

#include <algorithm>
#include <set>

#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

bool face_order(Mask a, Mask b) {
  const int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int m, const std::vector<Mask>& maximal_faces) : m_(m) {
  if (m < 0 || m > kMaxVertices) fail(ErrorKind::OutOfRange, "vertex count out of range");
  const Mask all = full_mask(m);
  std::set<Mask> closure{0};
  for (int v = 0; v < m; ++v) closure.insert(bit(v));
  for (Mask f : maximal_faces) {
    if (!is_subset(f, all)) fail(ErrorKind::OutOfRange, "face uses a vertex index out of range");
    for (Mask s = f;; s = (s - 1) & f) {
      closure.insert(s);
      if (s == 0) break;
    }
  }
  faces_.assign(closure.begin(), closure.end());
  std::sort(faces_.begin(), faces_.end(), face_order);
  face_set_.insert(faces_.begin(), faces_.end());

  for (Mask f : faces_) {
    bool maximal = true;
    for (int v = 0; v < m && maximal; ++v)
      if (!contains(f, v) && is_face(f | bit(v))) maximal = false;
    if (maximal) maximal_.push_back(f);
  }
  adjacency_.assign(static_cast<std::size_t>(m), 0);
  for (Mask f : faces_)
    if (popcount(f) == 2) {
      const auto e = elements(f);
      adjacency_[e[0]] |= bit(e[1]);
      adjacency_[e[1]] |= bit(e[0]);
    }
}

int SimplicialComplex::dimension() const {
  return faces_.empty() ? -1 : popcount(faces_.back()) - 1;
}

int SimplicialComplex::euler_characteristic() const {
  int chi = 0;
  for (Mask f : faces_)
    if (f) chi += (popcount(f) % 2 == 1) ? 1 : -1;
  return chi;
}

FullSubcomplex full_subcomplex(const SimplicialComplex& k, Mask j) {
  j &= full_mask(k.m());
  FullSubcomplex out;
  out.vertices = elements(j);
  std::vector<Mask> faces;
  for (Mask f : k.maximal_faces()) {
    const Mask g = f & j;
    if (!k.is_face(g)) continue;
    Mask packed = 0;
    for (std::size_t i = 0; i < out.vertices.size(); ++i)
      if (contains(g, out.vertices[i])) packed |= bit(static_cast<int>(i));
    faces.push_back(packed);
  }
  out.complex = SimplicialComplex(static_cast<int>(out.vertices.size()), faces);
  return out;
}

std::vector<Mask> missing_faces(const SimplicialComplex& k) {
  std::set<Mask> found;
  for (Mask f : k.faces())
    for (int v = 0; v < k.m(); ++v) {
      if (contains(f, v)) continue;
      const Mask s = f | bit(v);
      if (k.is_face(s) || found.count(s)) continue;
      bool minimal = true;
      for (int w : elements(s))
        if (!k.is_face(s & ~bit(w))) {
          minimal = false;
          break;
        }
      if (minimal) found.insert(s);
    }
  std::vector<Mask> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), face_order);
  return out;
}

bool is_flag(const SimplicialComplex& k) {
  const auto missing = missing_faces(k);
  return std::all_of(missing.begin(), missing.end(), [](Mask s) { return popcount(s) == 2; });
}

HomologyGroup GradedHomology::at(int d) const {
  if (d + 1 < 0 || d + 1 >= static_cast<int>(groups.size())) return {};
  return groups[d + 1];
}

std::vector<Mask> faces_within(const SimplicialComplex& k, Mask within, int size) {
  std::vector<Mask> out;
  for (Mask f : k.faces())
    if (popcount(f) == size && is_subset(f, within)) out.push_back(f);
  return out;
}

Matrix simplicial_coboundary(const std::vector<Mask>& lower, const std::vector<Mask>& upper, Coefficients c) {
  Matrix d(static_cast<int>(upper.size()), static_cast<int>(lower.size()));
  std::vector<std::pair<Mask, int>> index;
  index.reserve(lower.size());
  for (std::size_t i = 0; i < lower.size(); ++i) index.emplace_back(lower[i], static_cast<int>(i));
  std::sort(index.begin(), index.end());
  for (std::size_t r = 0; r < upper.size(); ++r) {
    int pos = 0;
    for (int v : elements(upper[r])) {
      const Mask face = upper[r] & ~bit(v);
      auto it = std::lower_bound(index.begin(), index.end(), std::make_pair(face, -1));
      if (it != index.end() && it->first == face)
        d(static_cast<int>(r), it->second) = reduce(pos % 2 == 0 ? 1 : -1, c);
      ++pos;
    }
  }
  return d;
}

GradedHomology reduced_cohomology(const SimplicialComplex& k, Coefficients c) {
  GradedHomology h;
  h.coeffs = c;
  const int top = k.dimension();
  const Mask all = full_mask(k.m());
  std::vector<std::vector<Mask>> by_size;
  for (int s = 0; s <= top + 1; ++s) by_size.push_back(faces_within(k, all, s));
  // coboundary out of degree d = size d+1; image into degree d from size d
  std::vector<int> out_rank(by_size.size(), 0);
  std::vector<std::vector<std::int64_t>> out_factors(by_size.size());
  for (std::size_t s = 0; s + 1 < by_size.size(); ++s) {
    const Matrix d = simplicial_coboundary(by_size[s], by_size[s + 1], c);
    out_factors[s] = invariant_factors(d, c);
    out_rank[s] = static_cast<int>(out_factors[s].size());
  }
  for (std::size_t s = 0; s < by_size.size(); ++s) {
    HomologyGroup g;
    const int in_rank = s > 0 ? out_rank[s - 1] : 0;
    g.rank = static_cast<int>(by_size[s].size()) - out_rank[s] - in_rank;
    if (s > 0)
      for (std::int64_t f : out_factors[s - 1])
        if (f > 1) g.torsion.push_back(f);
    h.groups.push_back(std::move(g));
  }
  return h;
}

void for_each_chordless_cycle(const SimplicialComplex& k, const CycleQuery& q,
                              const std::function<bool(const std::vector<int>&)>& visit) {
  const int m = k.m();
  const int max_len = q.max_len > 0 ? q.max_len : m;
  const int min_len = std::max(q.min_len, 3);
  std::vector<int> path;
  Mask on_path = 0;
  Mask need = 0;
  if (q.through) need = bit(q.through->first) | bit(q.through->second);
  bool stop = false;

  // path[0] is the least vertex; `blocked` holds vertices adjacent to an interior path vertex.
  std::function<void(Mask)> extend = [&](Mask blocked) {
    if (stop) return;
    const int start = path.front();
    const int last = path.back();
    Mask candidates = k.neighbours(last) & ~on_path & ~q.avoid & ~blocked & ~(bit(start + 1) - 1);
    while (candidates && !stop) {
      const int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      const bool closes = path.size() >= 2 && k.has_edge(v, start);
      if (closes) {
        const int len = static_cast<int>(path.size()) + 1;
        if (len >= min_len && path[1] < v && is_subset(need, on_path | bit(v))) {
          path.push_back(v);
          if (!visit(path)) stop = true;
          path.pop_back();
        }
        continue;
      }
      if (static_cast<int>(path.size()) + 1 >= max_len) continue;
      path.push_back(v);
      on_path |= bit(v);
      const Mask next_blocked = path.size() >= 3 ? blocked | k.neighbours(last) : blocked;
      extend(next_blocked);
      on_path &= ~bit(v);
      path.pop_back();
    }
  };

  for (int s = 0; s < m && !stop; ++s) {
    if (contains(q.avoid, s)) continue;
    if (need && (need & (bit(s) - 1))) continue;
    path.assign(1, s);
    on_path = bit(s);
    extend(0);
  }
}

std::vector<std::vector<int>> chordless_cycles(const SimplicialComplex& k, const CycleQuery& q) {
  std::vector<std::vector<int>> out;
  for_each_chordless_cycle(k, q, [&](const std::vector<int>& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

}  // namespace rigidity
