#include "rigidity/polytope.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

std::string facet_name(int f) { return "facet " + std::to_string(f + 1); }

int index_in(const std::vector<int>& cyc, int g) {
  auto it = std::find(cyc.begin(), cyc.end(), g);
  return it == cyc.end() ? -1 : static_cast<int>(it - cyc.begin());
}

}  // namespace

SimplePolytope SimplePolytope::from_rotation_system(std::vector<std::vector<int>> rot) {
  const int m = static_cast<int>(rot.size());
  if (m < 4) fail(ErrorKind::NotSphere, "a simple 3-polytope has at least 4 facets");
  if (m > kMaxVertices) fail(ErrorKind::OutOfRange, "too many facets");

  std::vector<Mask> nb(static_cast<std::size_t>(m), 0);
  for (int f = 0; f < m; ++f) {
    if (rot[f].size() < 3) fail(ErrorKind::NotSphere, facet_name(f) + " has fewer than 3 neighbours");
    for (int g : rot[f]) {
      if (g < 0 || g >= m) fail(ErrorKind::OutOfRange, facet_name(f) + " lists a neighbour out of range");
      if (g == f) fail(ErrorKind::BadIntersection, facet_name(f) + " is listed as its own neighbour");
      if (contains(nb[f], g))
        fail(ErrorKind::BadIntersection, facet_name(f) + " and " + facet_name(g) + " share more than one edge");
      nb[f] |= bit(g);
    }
  }
  for (int f = 0; f < m; ++f)
    for (int g : rot[f])
      if (!contains(nb[g], f))
        fail(ErrorKind::NotSphere, "adjacency of " + facet_name(f) + " and " + facet_name(g) + " is not symmetric");

  // Corner triples: consecutive neighbours around each facet.
  std::map<Mask, int> corner_count;
  for (int f = 0; f < m; ++f) {
    const auto& r = rot[f];
    for (std::size_t i = 0; i < r.size(); ++i) {
      const int a = r[i], b = r[(i + 1) % r.size()];
      if (!contains(nb[a], b))
        fail(ErrorKind::NonSimple, "consecutive neighbours " + facet_name(a) + ", " + facet_name(b) + " of " +
                                       facet_name(f) + " are not adjacent");
      ++corner_count[bit(f) | bit(a) | bit(b)];
    }
  }
  for (const auto& [t, c] : corner_count) {
    if (c < 3) {
      const auto e = elements(t);
      fail(ErrorKind::NonSimple, "corner {" + std::to_string(e[0] + 1) + "," + std::to_string(e[1] + 1) + "," +
                                     std::to_string(e[2] + 1) + "} does not lie in exactly three facets");
    }
    if (c > 3) fail(ErrorKind::NotSphere, "two corners span the same facet triple");
  }

  // Orientation normalization by BFS.
  auto succ = [&](int f, int g) {
    const auto& r = rot[f];
    return r[(index_in(r, g) + 1) % r.size()];
  };
  std::vector<int> state(static_cast<std::size_t>(m), 0);  // 0 unknown, 1 fixed
  std::deque<int> queue{0};
  state[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : rot[x]) {
      const int z = succ(x, y);
      // Coherence: succ_y(z) must be x.
      if (state[y] == 0) {
        if (succ(y, z) != x) std::reverse(rot[y].begin(), rot[y].end());
        state[y] = 1;
        ++reached;
        queue.push_back(y);
      } else if (succ(y, z) != x) {
        fail(ErrorKind::NotSphere, "rotation system is not coherently orientable");
      }
    }
  }
  if (reached != m) fail(ErrorKind::NotSphere, "facet adjacency graph is disconnected");

  const int f0 = static_cast<int>(corner_count.size());
  int f1 = 0;
  for (const auto& r : rot) f1 += static_cast<int>(r.size());
  f1 /= 2;
  if (f0 - f1 + m != 2) fail(ErrorKind::NotSphere, "Euler characteristic of the boundary is not 2");

  SimplePolytope p;
  p.rotation_ = std::move(rot);
  p.neighbours_ = std::move(nb);
  for (const auto& kv : corner_count) p.vertices_.push_back(kv.first);
  return p;
}

int SimplePolytope::position(int f, int g) const { return index_in(rotation_[f], g); }

int SimplePolytope::successor(int f, int g) const {
  const auto& r = rotation_[f];
  const int i = index_in(r, g);
  if (i < 0) fail(ErrorKind::InvalidInput, "facets are not adjacent");
  return r[(i + 1) % r.size()];
}

int SimplePolytope::predecessor(int f, int g) const {
  const auto& r = rotation_[f];
  const int i = index_in(r, g);
  if (i < 0) fail(ErrorKind::InvalidInput, "facets are not adjacent");
  return r[(i + r.size() - 1) % r.size()];
}

bool SimplePolytope::is_vertex(Mask t) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), t);
}

std::vector<std::pair<int, int>> SimplePolytope::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < m(); ++a)
    for (int b : elements(neighbours_[a]))
      if (a < b) out.emplace_back(a, b);
  return out;
}

int SimplePolytope::edge_count() const {
  int total = 0;
  for (const auto& r : rotation_) total += static_cast<int>(r.size());
  return total / 2;
}

bool CombinatorialBase::is_vertex(Mask s) const {
  return std::binary_search(vertices.begin(), vertices.end(), s);
}

std::vector<int> CombinatorialBase::base_vertex() const {
  std::vector<std::vector<int>> all;
  for (Mask v : vertices) all.push_back(elements(v));
  return *std::min_element(all.begin(), all.end());
}

std::vector<int> CombinatorialBase::oriented_vertex(Mask v) const {
  const auto e = elements(v);
  if (n == 2) {
    // vertex {i, i+1 mod m} in cyclic order
    if (e[1] == e[0] + 1) return e;
    return {e[1], e[0]};
  }
  if (polytope->successor(e[0], e[1]) == e[2]) return e;
  return {e[0], e[2], e[1]};
}

CombinatorialBase base_of(const SimplePolytope& p) {
  CombinatorialBase b;
  b.n = 3;
  b.m = p.m();
  b.vertices = p.vertices();
  b.polytope = p;
  return b;
}

CombinatorialBase polygon(int m) {
  if (m < 3) fail(ErrorKind::OutOfRange, "polygon needs at least 3 sides");
  CombinatorialBase b;
  b.n = 2;
  b.m = m;
  for (int i = 0; i < m; ++i) b.vertices.push_back(bit(i) | bit((i + 1) % m));
  std::sort(b.vertices.begin(), b.vertices.end());
  return b;
}

SimplicialComplex dual_complex(const SimplePolytope& p) { return SimplicialComplex(p.m(), p.vertices()); }

PkVector pk_vector(const SimplePolytope& p) {
  PkVector v;
  for (int f = 0; f < p.m(); ++f) ++v.p[p.facet_size(f)];
  v.f0 = p.vertex_count();
  v.f1 = p.edge_count();
  v.f2 = p.m();
  int lhs = 3 * v.at(3) + 2 * v.at(4) + v.at(5);
  int rhs = 12;
  for (const auto& [k, c] : v.p)
    if (k >= 7) rhs += (k - 6) * c;
  if (lhs != rhs) fail(ErrorKind::InvariantViolation, "facet counts violate 3p3+2p4+p5 = 12 + sum (k-6)pk");
  if (v.f0 - v.f1 + v.f2 != 2 || 3 * v.f0 != 2 * v.f1)
    fail(ErrorKind::InvariantViolation, "f-vector violates the Euler or simplicity relation");
  return v;
}

namespace {

// BFS code from the directed start (f, g) traversing rotations in direction dir.
// `label` receives the BFS number of each facet (0-based).
std::vector<int> bfs_code(const SimplePolytope& p, int f, int g, int dir, std::vector<int>& label) {
  const int m = p.m();
  label.assign(static_cast<std::size_t>(m), -1);
  std::vector<int> ref(static_cast<std::size_t>(m), -1);
  std::vector<int> code;
  code.reserve(static_cast<std::size_t>(2 * p.edge_count() + m));
  std::deque<int> queue{f};
  label[f] = 0;
  ref[f] = g;
  int next = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    const auto& r = p.rotation(x);
    const int k = static_cast<int>(r.size());
    const int start = p.position(x, ref[x]);
    for (int s = 0; s < k; ++s) {
      const int y = r[((start + dir * s) % k + k) % k];
      if (label[y] < 0) {
        label[y] = next++;
        ref[y] = x;
        queue.push_back(y);
      }
      code.push_back(label[y] + 1);
    }
    code.push_back(0);
  }
  return code;
}

std::string encode(int m, const std::vector<int>& code) {
  std::string s;
  s.reserve(code.size() + 1);
  s.push_back(static_cast<char>(m));
  for (int c : code) s.push_back(static_cast<char>(c));
  return s;
}

}  // namespace

std::string canonical_code(const SimplePolytope& p) {
  std::vector<int> best, label;
  for (int f = 0; f < p.m(); ++f)
    for (int g : p.rotation(f))
      for (int dir : {1, -1}) {
        auto code = bfs_code(p, f, g, dir, label);
        if (best.empty() || code < best) best = std::move(code);
      }
  return encode(p.m(), best);
}

std::vector<std::vector<int>> isomorphisms(const SimplePolytope& a, const SimplePolytope& b) {
  std::vector<std::vector<int>> out;
  if (a.m() != b.m() || a.edge_count() != b.edge_count()) return out;
  std::vector<int> la, lb;
  const int f = 0, g = a.rotation(0).front();
  const auto ref = bfs_code(a, f, g, 1, la);
  for (int f2 = 0; f2 < b.m(); ++f2) {
    if (b.facet_size(f2) != a.facet_size(f)) continue;
    for (int g2 : b.rotation(f2))
      for (int dir : {1, -1}) {
        if (bfs_code(b, f2, g2, dir, lb) != ref) continue;
        std::vector<int> inv_b(static_cast<std::size_t>(b.m()));
        for (int i = 0; i < b.m(); ++i) inv_b[lb[i]] = i;
        std::vector<int> sigma(static_cast<std::size_t>(a.m()));
        for (int i = 0; i < a.m(); ++i) sigma[i] = inv_b[la[i]];
        out.push_back(std::move(sigma));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<int>> is_isomorphic(const SimplePolytope& a, const SimplePolytope& b) {
  if (a.m() != b.m() || canonical_code(a) != canonical_code(b)) return std::nullopt;
  auto all = isomorphisms(a, b);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<std::vector<int>> base_isomorphisms(const CombinatorialBase& a, const CombinatorialBase& b) {
  if (a.n != b.n || a.m != b.m) return {};
  if (a.n == 3) return isomorphisms(*a.polytope, *b.polytope);
  std::vector<std::vector<int>> out;
  const int m = a.m;
  for (int shift = 0; shift < m; ++shift)
    for (int dir : {1, -1}) {
      std::vector<int> s(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) s[i] = ((shift + dir * i) % m + m) % m;
      out.push_back(std::move(s));
    }
  std::sort(out.begin(), out.end());
  return out;
}

SimplePolytope relabel(const SimplePolytope& p, const std::vector<int>& perm) {
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(p.m()));
  for (int f = 0; f < p.m(); ++f) {
    auto& r = rot[perm[f]];
    for (int g : p.rotation(f)) r.push_back(perm[g]);
  }
  return SimplePolytope::from_rotation_system(std::move(rot));
}

SimplePolytope simplex() {
  return SimplePolytope::from_rotation_system({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
}

SimplePolytope cube() {
  return SimplePolytope::from_rotation_system(
      {{1, 2, 4, 5}, {0, 2, 3, 5}, {0, 1, 3, 4}, {1, 2, 4, 5}, {0, 2, 3, 5}, {0, 1, 3, 4}});
}

SimplePolytope prism(int k) {
  if (k < 3) fail(ErrorKind::OutOfRange, "prism needs k >= 3");
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(k + 2));
  auto side = [k](int i) { return 2 + ((i % k) + k) % k; };
  for (int i = 0; i < k; ++i) {
    rot[0].push_back(side(i));
    rot[1].push_back(side(i));
    rot[side(i)] = {0, side(i - 1), 1, side(i + 1)};
  }
  return SimplePolytope::from_rotation_system(std::move(rot));
}

SimplePolytope barrel(int k) {
  if (k < 5) fail(ErrorKind::OutOfRange, "barrel needs k >= 5");
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(2 * k + 2));
  auto up = [k](int i) { return 2 + ((i % k) + k) % k; };
  auto low = [k](int i) { return k + 2 + ((i % k) + k) % k; };
  for (int i = 0; i < k; ++i) {
    rot[0].push_back(up(i));
    rot[1].push_back(low(i));
    rot[up(i)] = {0, up(i - 1), low(i), low(i + 1), up(i + 1)};
    rot[low(i)] = {1, low(i + 1), up(i), up(i - 1), low(i - 1)};
  }
  return SimplePolytope::from_rotation_system(std::move(rot));
}

SimplePolytope dodecahedron() { return barrel(5); }

}  // namespace rigidity
