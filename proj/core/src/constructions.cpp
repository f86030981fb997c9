#include "rigidity/constructions.hpp"

#include <algorithm>

#include "rigidity/belts.hpp"
#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

using Rotations = std::vector<std::vector<int>>;

int wrap(int i, int k) { return ((i % k) + k) % k; }

// Inserts z between the cyclically consecutive entries x and y.
void insert_between(std::vector<int>& r, int x, int y, int z) {
  const int k = static_cast<int>(r.size());
  for (int i = 0; i < k; ++i) {
    const int j = (i + 1) % k;
    if ((r[i] == x && r[j] == y) || (r[i] == y && r[j] == x)) {
      r.insert(r.begin() + j, z);
      return;
    }
  }
  fail(ErrorKind::InvariantViolation, "expected consecutive neighbours during surgery");
}

void replace_entry(std::vector<int>& r, int from, int to) {
  auto it = std::find(r.begin(), r.end(), from);
  if (it == r.end()) fail(ErrorKind::InvariantViolation, "expected neighbour during surgery");
  *it = to;
}

// Rotation of `r` starting right after `anchor`, excluding it.
std::vector<int> after(const std::vector<int>& r, int anchor) {
  const int k = static_cast<int>(r.size());
  const int pos = static_cast<int>(std::find(r.begin(), r.end(), anchor) - r.begin());
  std::vector<int> out;
  for (int s = 1; s < k; ++s) out.push_back(r[(pos + s) % k]);
  return out;
}

#ifndef NDEBUG
void expect_pogorelov(const SimplePolytope& r, const char* what) {
  if (!is_pogorelov(r)) fail(ErrorKind::InvariantViolation, std::string(what) + " left the Pogorelov class");
}
#endif

}  // namespace

SimplePolytope cut_edges(const SimplePolytope& p, int f, int first, int s) {
  if (f < 0 || f >= p.m()) fail(ErrorKind::OutOfRange, "facet index out of range");
  const auto& rf = p.rotation(f);
  const int k = static_cast<int>(rf.size());
  if (s < 0 || s > k - 2) fail(ErrorKind::MalformedEdgeRun, "edge run longer than the facet allows");
  std::vector<int> g;
  for (int i = 0; i <= s + 1; ++i) g.push_back(rf[wrap(first - 1 + i, k)]);
  const int nf = p.m();
  Rotations rot = p.rotation();
  rot.emplace_back();

  // F: the run g_1..g_s is replaced by the new facet.
  {
    std::vector<int> r;
    for (int i = 0; i < k; ++i) {
      const int pos = wrap(first - 1 + i, k);  // start at g_0
      if (i == 0) {
        r.push_back(rf[pos]);
        r.push_back(nf);
      } else if (i > s) {
        r.push_back(rf[pos]);
      }
    }
    rot[f] = r;
  }
  if (s == 0) {
    insert_between(rot[g[0]], f, g[1], nf);
    insert_between(rot[g[1]], f, g[0], nf);
  } else {
    insert_between(rot[g[0]], f, g[1], nf);
    insert_between(rot[g[s + 1]], f, g[s], nf);
    for (int i = 1; i <= s; ++i) replace_entry(rot[g[i]], f, nf);
  }
  rot[nf].push_back(f);
  for (int x : g) rot[nf].push_back(x);
  return SimplePolytope::from_rotation_system(std::move(rot));
}

SimplePolytope vertex_truncate(const SimplePolytope& p, Mask vertex) {
  if (!p.is_vertex(vertex)) fail(ErrorKind::InvalidInput, "not a vertex of the polytope");
  const auto e = elements(vertex);
  const int f = e[0];
  const int first = p.successor(f, e[1]) == e[2] ? p.position(f, e[2]) : p.position(f, e[1]);
  return cut_edges(p, f, first, 0);
}

SimplePolytope edge_truncate(const SimplePolytope& p, int a, int b) {
  if (a < 0 || b < 0 || a >= p.m() || b >= p.m() || !p.adjacent(a, b))
    fail(ErrorKind::InvalidInput, "not an edge of the polytope");
  return cut_edges(p, a, p.position(a, b), 1);
}

SimplePolytope sk_truncate(const SimplePolytope& p, int f, const std::vector<int>& run) {
  if (f < 0 || f >= p.m()) fail(ErrorKind::OutOfRange, "facet index out of range");
  const int s = static_cast<int>(run.size());
  const int k = p.facet_size(f);
  if (s < 2) fail(ErrorKind::MalformedEdgeRun, "an (s,k)-truncation needs s >= 2");
  if (s > k - 2) fail(ErrorKind::MalformedEdgeRun, "edge run too long for the facet");
  std::vector<int> pos;
  for (int g : run) {
    const int i = g >= 0 && g < p.m() ? p.position(f, g) : -1;
    if (i < 0) fail(ErrorKind::MalformedEdgeRun, "edge run contains a facet not adjacent to F");
    pos.push_back(i);
  }
  auto consecutive = [&](int dir) {
    for (int i = 1; i < s; ++i)
      if (pos[i] != wrap(pos[i - 1] + dir, k)) return false;
    return true;
  };
  int first;
  if (consecutive(1)) {
    first = pos.front();
  } else if (consecutive(-1)) {
    first = pos.back();
  } else {
    fail(ErrorKind::MalformedEdgeRun, "edges of the run are not consecutive on F");
  }
  SimplePolytope r = cut_edges(p, f, first, s);
#ifndef NDEBUG
  if (k >= s + 4 && is_pogorelov(p)) expect_pogorelov(r, "(s,k)-truncation");
#endif
  return r;
}

SimplePolytope connected_sum(const SimplePolytope& p, int f, const SimplePolytope& q, int g, Alignment align) {
  if (f < 0 || f >= p.m() || g < 0 || g >= q.m()) fail(ErrorKind::OutOfRange, "facet index out of range");
  const int k = p.facet_size(f);
  if (q.facet_size(g) != k) fail(ErrorKind::InvalidInput, "glued facets have different numbers of sides");
  if (!is_belt(p, p.rotation(f)) || !is_belt(q, q.rotation(g)))
    fail(ErrorKind::FacetNotBeltSurrounded, "glued facet is not surrounded by a belt");
  if (align.start < 0 || align.start >= k) fail(ErrorKind::OutOfRange, "alignment start out of range");

  const auto& a = p.rotation(f);
  const auto& b = q.rotation(g);
  auto partner = [&](int i) { return b[wrap(align.reverse ? align.start - i : align.start + i, k)]; };

  // New indices.
  std::vector<int> from_p(static_cast<std::size_t>(p.m()), -1), from_q(static_cast<std::size_t>(q.m()), -1);
  int next = 0;
  for (int x = 0; x < p.m(); ++x)
    if (x != f) from_p[x] = next++;
  for (int i = 0; i < k; ++i) from_q[partner(i)] = from_p[a[i]];
  Mask q_belt = 0;
  for (int y : b) q_belt |= bit(y);
  for (int y = 0; y < q.m(); ++y)
    if (y != g && !contains(q_belt, y)) from_q[y] = next++;

  Rotations rot(static_cast<std::size_t>(next));
  Mask p_belt = 0;
  for (int x : a) p_belt |= bit(x);
  for (int x = 0; x < p.m(); ++x) {
    if (x == f || contains(p_belt, x)) continue;
    for (int y : p.rotation(x)) rot[from_p[x]].push_back(from_p[y]);
  }
  for (int y = 0; y < q.m(); ++y) {
    if (y == g || contains(q_belt, y)) continue;
    for (int z : q.rotation(y)) rot[from_q[y]].push_back(from_q[z]);
  }
  for (int i = 0; i < k; ++i) {
    const int prev = from_p[a[wrap(i - 1, k)]];
    const int nxt = from_p[a[wrap(i + 1, k)]];
    // P side from prev to nxt, avoiding F.
    std::vector<int> ps;
    for (int y : after(p.rotation(a[i]), f)) ps.push_back(from_p[y]);
    if (ps.front() != prev) std::reverse(ps.begin(), ps.end());
    // Q side from nxt to prev, avoiding G.
    std::vector<int> qs;
    for (int y : after(q.rotation(partner(i)), g)) qs.push_back(from_q[y]);
    if (qs.front() != nxt) std::reverse(qs.begin(), qs.end());
    if (ps.front() != prev || ps.back() != nxt || qs.front() != nxt || qs.back() != prev)
      fail(ErrorKind::InvariantViolation, "belt neighbours disagree during gluing");
    auto& r = rot[from_p[a[i]]];
    r.assign(ps.begin(), ps.end());
    r.insert(r.end(), qs.begin() + 1, qs.end() - 1);
  }
  SimplePolytope r = SimplePolytope::from_rotation_system(std::move(rot));
#ifndef NDEBUG
  if (is_pogorelov(p) && is_pogorelov(q)) expect_pogorelov(r, "connected sum");
#endif
  return r;
}

SimplePolytope edge_cut_all(const SimplePolytope& p) {
  const auto edges = p.edges();
  const int m = p.m();
  auto edge_id = [&](int x, int y) {
    const auto key = std::make_pair(std::min(x, y), std::max(x, y));
    return m + static_cast<int>(std::lower_bound(edges.begin(), edges.end(), key) - edges.begin());
  };
  Rotations rot(static_cast<std::size_t>(m) + edges.size());
  for (int x = 0; x < m; ++x)
    for (int y : p.rotation(x)) rot[x].push_back(edge_id(x, y));
  for (const auto& [a, b] : edges) {
    const int x = p.successor(a, b), y = p.predecessor(a, b);
    rot[edge_id(a, b)] = {a, edge_id(a, x), edge_id(x, b), b, edge_id(b, y), edge_id(y, a)};
  }
  return SimplePolytope::from_rotation_system(std::move(rot));
}

SimplePolytope vertex_connected_sum(const SimplePolytope& p, Mask v, const SimplePolytope& q, Mask w,
                                    Alignment align) {
  const SimplePolytope tp = vertex_truncate(p, v);
  const SimplePolytope tq = vertex_truncate(q, w);
  return connected_sum(tp, tp.m() - 1, tq, tq.m() - 1, align);
}

SimplePolytope edge_connected_sum(const SimplePolytope& p, std::pair<int, int> e, const SimplePolytope& q,
                                  std::pair<int, int> e2, Alignment align) {
  const SimplePolytope tp = edge_truncate(p, e.first, e.second);
  const SimplePolytope tq = edge_truncate(q, e2.first, e2.second);
  return connected_sum(tp, tp.m() - 1, tq, tq.m() - 1, align);
}

}  // namespace rigidity
