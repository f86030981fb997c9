#include "rigidity/characteristic.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "rigidity/errors.hpp"

namespace rigidity {

Matrix CharMatrix::columns(const std::vector<int>& facets) const {
  Matrix out(n(), static_cast<int>(facets.size()));
  for (std::size_t k = 0; k < facets.size(); ++k)
    for (int r = 0; r < n(); ++r) out(r, static_cast<int>(k)) = entries(r, facets[k]);
  return out;
}

CharMatrix make_char_matrix(const std::vector<std::vector<std::int64_t>>& rows, Coefficients c) {
  if (rows.empty()) fail(ErrorKind::DimensionMismatch, "characteristic matrix has no rows");
  const int m = static_cast<int>(rows.front().size());
  CharMatrix l{Matrix(static_cast<int>(rows.size()), m), c};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != m) fail(ErrorKind::DimensionMismatch, "rows have different lengths");
    for (int i = 0; i < m; ++i) l.entries(static_cast<int>(r), i) = reduce(rows[r][i], c);
  }
  return l;
}

CharacteristicCheck is_characteristic(const CombinatorialBase& base, const CharMatrix& l) {
  if (l.n() != base.n || l.m() != base.m)
    fail(ErrorKind::DimensionMismatch, "matrix is " + std::to_string(l.n()) + "x" + std::to_string(l.m()) +
                                           ", expected " + std::to_string(base.n) + "x" + std::to_string(base.m));
  CharacteristicCheck out;
  for (Mask v : base.vertices) {
    const auto facets = elements(v);
    const std::int64_t d = determinant(l.columns(facets));
    const bool good = l.coeffs == Coefficients::Z2 ? (d & 1) == 1 : (d == 1 || d == -1);
    if (!good) {
      out.ok = false;
      out.violating_vertex = facets;
      out.determinant = l.coeffs == Coefficients::Z2 ? (d & 1) : d;
      return out;
    }
  }
  return out;
}

namespace {

std::vector<int> bfs_order(const SimplePolytope& p) {
  std::vector<int> order{0};
  Mask seen = bit(0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int g : p.rotation(order[i]))
      if (!contains(seen, g)) {
        seen |= bit(g);
        order.push_back(g);
      }
  return order;
}

Colouring normalize_colours(const Colouring& chi) {
  std::array<int, 4> map{-1, -1, -1, -1};
  int next = 0;
  Colouring out(chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (map[chi[i]] < 0) map[chi[i]] = next++;
    out[i] = map[chi[i]];
  }
  return out;
}

}  // namespace

std::vector<Colouring> enumerate_colourings(const SimplePolytope& p) {
  const auto order = bfs_order(p);
  const int m = p.m();
  std::vector<Colouring> out;
  Colouring chi(static_cast<std::size_t>(m), -1);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == m) {
      out.push_back(chi);
      return;
    }
    const int f = order[k];
    for (int c = 0; c < 4; ++c) {
      bool ok = true;
      for (int g : p.rotation(f))
        if (chi[g] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chi[f] = c;
      self(self, k + 1);
      chi[f] = -1;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Colouring> colouring_class_representatives(const SimplePolytope& p) {
  const auto autos = isomorphisms(p, p);
  std::set<Colouring> classes;
  for (const Colouring& chi : enumerate_colourings(p)) {
    if (normalize_colours(chi) != chi) continue;
    Colouring best;
    for (const auto& sigma : autos) {
      Colouring moved(chi.size());
      for (std::size_t i = 0; i < chi.size(); ++i) moved[sigma[i]] = chi[i];
      moved = normalize_colours(moved);
      if (best.empty() || moved < best) best = std::move(moved);
    }
    classes.insert(std::move(best));
  }
  return {classes.begin(), classes.end()};
}

int colouring_classes(const SimplePolytope& p) {
  return static_cast<int>(colouring_class_representatives(p).size());
}

CharMatrix colouring_to_matrix(const Colouring& chi) {
  CharMatrix l{Matrix(3, static_cast<int>(chi.size())), Coefficients::Z};
  for (std::size_t i = 0; i < chi.size(); ++i) {
    const int c = chi[i];
    if (c < 0 || c > 3) fail(ErrorKind::InvalidInput, "colours must lie in 1..4");
    for (int r = 0; r < 3; ++r) l.entries(r, static_cast<int>(i)) = (c == 3 || c == r) ? 1 : 0;
  }
  return l;
}

CharMatrix reduce_mod2(const CharMatrix& l) {
  CharMatrix out{Matrix(l.n(), l.m()), Coefficients::Z2};
  for (int r = 0; r < l.n(); ++r)
    for (int i = 0; i < l.m(); ++i) out.entries(r, i) = reduce(l.entries(r, i), Coefficients::Z2);
  return out;
}

CharMatrix lift_mod2(const CombinatorialBase& base, const CharMatrix& l2) {
  if (l2.coeffs != Coefficients::Z2) fail(ErrorKind::InvalidInput, "lift expects a Z2 matrix");
  const auto check2 = is_characteristic(base, l2);
  if (!check2.ok) fail(ErrorKind::NotCharacteristic, "matrix is not characteristic over Z2");
  CharMatrix l{l2.entries, Coefficients::Z};
  const auto check = is_characteristic(base, l);
  if (!check.ok) fail(ErrorKind::LiftFailed, "0/1 lift has determinant " + std::to_string(check.determinant));
  return l;
}

std::optional<PairEquivalence> pairs_equivalent(const CombinatorialBase& pa, const CharMatrix& la,
                                                const CombinatorialBase& pb, const CharMatrix& lb) {
  if (la.n() != lb.n() || la.coeffs != lb.coeffs)
    fail(ErrorKind::DimensionMismatch, "pairs differ in dimension or coefficients");
  if (!is_characteristic(pa, la).ok || !is_characteristic(pb, lb).ok)
    fail(ErrorKind::NotCharacteristic, "both matrices must be characteristic");
  const Coefficients c = la.coeffs;
  const int n = la.n(), m = la.m();
  const std::vector<int> bv = pa.base_vertex();
  const Matrix binv = inverse_unimodular(la.columns(bv), c);
  const int patterns = c == Coefficients::Z ? 1 << n : 1;
  for (const auto& sigma : base_isomorphisms(pa, pb)) {
    std::vector<int> image;
    for (int f : bv) image.push_back(sigma[f]);
    const Matrix bprime = lb.columns(image);
    for (int pattern = 0; pattern < patterns; ++pattern) {
      Matrix signed_b = bprime;
      for (int k = 0; k < n; ++k)
        if (pattern >> k & 1)
          for (int r = 0; r < n; ++r) signed_b(r, k) = -signed_b(r, k);
      PairEquivalence w{sigma, multiply(signed_b, binv, c), std::vector<int>(static_cast<std::size_t>(m), 1)};
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        const auto image_col = apply(w.a, la.column(i), c);
        const auto target = lb.column(sigma[i]);
        if (image_col == target) continue;
        bool negated = c == Coefficients::Z;
        for (int r = 0; r < n && negated; ++r) negated = image_col[r] == -target[r];
        if (negated)
          w.signs[i] = -1;
        else
          ok = false;
      }
      if (ok) return w;
    }
  }
  return std::nullopt;
}

bool verify_pair_equivalence(const CharMatrix& la, const CharMatrix& lb, const PairEquivalence& w) {
  if (la.n() != lb.n() || la.m() != lb.m() || static_cast<int>(w.sigma.size()) != la.m()) return false;
  const std::int64_t det = determinant(w.a);
  if (la.coeffs == Coefficients::Z ? (det != 1 && det != -1) : (det & 1) != 1) return false;
  for (int i = 0; i < la.m(); ++i) {
    auto col = apply(w.a, la.column(i), la.coeffs);
    for (auto& x : col) x = reduce(x * w.signs[i], la.coeffs);
    if (col != lb.column(w.sigma[i])) return false;
  }
  return true;
}

namespace {

// Z2^3 vectors as 3-bit integers.
bool independent3(int a, int b, int c) { return a && b && c && a != b && (a ^ b) != c && a != c && b != c; }

// Image of x under the linear map sending e_k to cols[k].
int map_z2(const std::array<int, 3>& cols, int x) {
  int y = 0;
  for (int k = 0; k < 3; ++k)
    if (x >> k & 1) y ^= cols[k];
  return y;
}

}  // namespace

CharZ2Census enumerate_char_z2(const SimplePolytope& p) {
  const int m = p.m();
  if (m > 14) fail(ErrorKind::SizeGuard, "exhaustive Z2 enumeration limited to m <= 14");
  const CombinatorialBase base = base_of(p);
  const auto bv = base.base_vertex();

  // Vertices grouped by the facet (in assignment order) that completes them.
  std::vector<int> order = bv;
  for (int f : bfs_order(p))
    if (std::find(order.begin(), order.end(), f) == order.end()) order.push_back(f);
  std::vector<int> rank(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) rank[order[k]] = k;
  std::vector<std::vector<std::array<int, 2>>> closing(static_cast<std::size_t>(m));
  for (Mask v : p.vertices()) {
    auto e = elements(v);
    std::sort(e.begin(), e.end(), [&](int x, int y) { return rank[x] < rank[y]; });
    closing[e[2]].push_back({e[0], e[1]});
  }

  // GL(3, Z2) acts freely, so fix the base vertex to the standard basis.
  std::vector<int> col(static_cast<std::size_t>(m), 0);
  for (int k = 0; k < 3; ++k) col[bv[k]] = 1 << k;
  std::vector<std::vector<int>> normalized;
  auto rec = [&](auto&& self, int k) -> void {
    if (k == m) {
      normalized.push_back(col);
      return;
    }
    const int f = order[k];
    for (int x = 1; x < 8; ++x) {
      bool ok = true;
      for (const auto& pr : closing[f])
        if (!independent3(col[pr[0]], col[pr[1]], x)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      col[f] = x;
      self(self, k + 1);
    }
    col[f] = 0;
  };
  rec(rec, 3);

  const auto autos = isomorphisms(p, p);
  std::set<std::vector<int>> classes;
  for (const auto& c : normalized) {
    std::vector<int> best;
    for (const auto& sigma : autos) {
      std::vector<int> moved(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) moved[sigma[i]] = c[i];
      const std::array<int, 3> basis{moved[bv[0]], moved[bv[1]], moved[bv[2]]};
      std::array<int, 8> inverse{};
      for (int x = 0; x < 8; ++x) inverse[map_z2(basis, x)] = x;
      for (int& x : moved) x = inverse[x];
      if (best.empty() || moved < best) best = std::move(moved);
    }
    classes.insert(std::move(best));
  }
  return {168L * static_cast<long>(normalized.size()), static_cast<long>(classes.size())};
}

}  // namespace rigidity
