#include "rigidity/macohomology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

int inversions(Mask a, Mask c) {
  int count = 0;
  for (int x : elements(c)) count += popcount(a & ~(bit(x + 1) - 1));
  return count;
}

std::int64_t normalize_coeff(std::int64_t x, std::int64_t order, Coefficients c) {
  if (c == Coefficients::Z2) return x & 1;
  if (order > 0) {
    x %= order;
    if (x < 0) x += order;
  }
  return x;
}

bool all_zero(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace

std::pair<int, KoszulMonomial> multiply(const SimplicialComplex& k, KoszulMonomial a, KoszulMonomial b) {
  const Mask ua = a.j & ~a.l, ub = b.j & ~b.l;
  if ((ua & ub) || (a.l & b.l) || (ua & b.l) || (a.l & ub)) return {0, {}};
  if (!k.is_face(a.l | b.l)) return {0, {}};
  const int sign = inversions(ua, ub) % 2 == 0 ? 1 : -1;
  return {sign, KoszulMonomial{a.j | b.j, a.l | b.l}};
}

int RBlock::index_of(int level, Mask l) const {
  if (level < 0 || level >= levels()) return -1;
  const auto& b = basis[level];
  auto it = std::lower_bound(b.begin(), b.end(), l);
  return it != b.end() && *it == l ? static_cast<int>(it - b.begin()) : -1;
}

RBlock r_block(const SimplicialComplex& k, Mask j, Coefficients c) {
  RBlock b;
  b.j = j;
  for (Mask f : k.faces()) {
    if (!is_subset(f, j)) continue;
    const int s = popcount(f);
    if (s >= b.levels()) b.basis.resize(static_cast<std::size_t>(s) + 1);
    b.basis[s].push_back(f);
  }
  for (auto& level : b.basis) std::sort(level.begin(), level.end());
  const int levels = b.levels();
  for (int l = 0; l + 1 < levels; ++l) {
    Matrix d(static_cast<int>(b.basis[l + 1].size()), static_cast<int>(b.basis[l].size()));
    for (std::size_t col = 0; col < b.basis[l].size(); ++col) {
      const Mask face = b.basis[l][col];
      const Mask u = j & ~face;
      for (int x : elements(u)) {
        const int row = b.index_of(l + 1, face | bit(x));
        if (row < 0) continue;
        d(row, static_cast<int>(col)) = reduce(rank_below(u, x) % 2 == 0 ? 1 : -1, c);
      }
    }
    b.d.push_back(std::move(d));
  }
  for (int l = 0; l < levels; ++l) {
    const int dim = static_cast<int>(b.basis[l].size());
    const Matrix incoming = l > 0 ? b.d[l - 1] : Matrix(dim, 0);
    const Matrix outgoing = l + 1 < levels ? b.d[l] : Matrix(0, dim);
    b.spots.emplace_back(incoming, outgoing, dim, c);
  }
  return b;
}

bool RingElement::is_zero() const {
  for (const auto& [key, v] : parts)
    if (!all_zero(v)) return false;
  return true;
}

MomentAngleCohomology::MomentAngleCohomology(SimplicialComplex k, Coefficients c) : k_(std::move(k)), c_(c) {
  if (k_.m() <= 20) dense_.resize(std::size_t{1} << k_.m());
}

const RBlock& MomentAngleCohomology::block(Mask j) const {
  if (!is_subset(j, full_mask(m()))) fail(ErrorKind::OutOfRange, "multidegree out of range");
  std::unique_ptr<RBlock>& slot = dense_.empty() ? sparse_[j] : dense_[j];
  if (!slot) slot = std::make_unique<RBlock>(r_block(k_, j, c_));
  return *slot;
}

const SpotCohomology& MomentAngleCohomology::spot(Mask j, int level) const {
  const RBlock& b = block(j);
  if (level < 0 || level >= b.levels()) fail(ErrorKind::OutOfRange, "level out of range for multidegree");
  return b.spots[level];
}

int MomentAngleCohomology::rank(Mask j, int level) const {
  const RBlock& b = block(j);
  if (level < 0 || level >= b.levels()) return 0;
  return b.spots[level].generator_count();
}

std::vector<int> MomentAngleCohomology::betti() const {
  if (m() > 24) fail(ErrorKind::SizeGuard, "Betti table limited to m <= 24");
  std::vector<int> b(static_cast<std::size_t>(2 * m() + 1), 0);
  for (Mask j = 0; j <= full_mask(m()); ++j) {
    const RBlock& blk = block(j);
    for (int l = 0; l < blk.levels(); ++l) b[popcount(j) + l] += blk.spots[l].free_rank();
    if (j == full_mask(m())) break;
  }
  return b;
}

std::vector<std::pair<Mask, int>> MomentAngleCohomology::nonzero_spots() const {
  if (m() > 24) fail(ErrorKind::SizeGuard, "full spot scan limited to m <= 24");
  std::vector<std::pair<Mask, int>> out;
  for (Mask j = 0;; ++j) {
    const RBlock& blk = block(j);
    for (int l = 0; l < blk.levels(); ++l)
      if (blk.spots[l].generator_count() > 0) out.emplace_back(j, l);
    if (j == full_mask(m())) break;
  }
  return out;
}

long MomentAngleCohomology::total_dimension() const {
  long total = 0;
  for (const auto& [j, l] : nonzero_spots()) total += spot(j, l).generator_count();
  return total;
}

void MomentAngleCohomology::verify_against_full_subcomplexes() const {
  if (m() > 24) fail(ErrorKind::SizeGuard, "oracle comparison limited to m <= 24");
  for (Mask j = 0;; ++j) {
    const RBlock& blk = block(j);
    const GradedHomology h = reduced_cohomology(full_subcomplex(k_, j).complex, c_);
    const int levels = std::max(blk.levels(), static_cast<int>(h.groups.size()));
    for (int l = 0; l < levels; ++l) {
      HomologyGroup mine;
      if (l < blk.levels()) {
        mine.rank = blk.spots[l].free_rank();
        mine.torsion = blk.spots[l].torsion();
      }
      if (!(mine == h.at(l - 1)))
        fail(ErrorKind::InternalMismatch, "R*(K) block and full subcomplex cohomology disagree");
    }
    if (j == full_mask(m())) break;
  }
}

RingElement MomentAngleCohomology::generator(Mask j, int level, int g) const {
  const SpotCohomology& s = spot(j, level);
  if (g < 0 || g >= s.generator_count()) fail(ErrorKind::OutOfRange, "generator index out of range");
  RingElement x;
  std::vector<std::int64_t> v(static_cast<std::size_t>(s.generator_count()), 0);
  v[g] = 1;
  x.parts[{j, level}] = std::move(v);
  return x;
}

RingElement MomentAngleCohomology::classify(const Cochain& c) const {
  RingElement x;
  auto v = spot(c.j, c.level).classify(c.coeffs);
  if (!all_zero(v)) x.parts[{c.j, c.level}] = std::move(v);
  return x;
}

Cochain MomentAngleCohomology::representative(const RingElement& x, Mask j, int level) const {
  const SpotCohomology& s = spot(j, level);
  Cochain c{j, level, std::vector<std::int64_t>(block(j).basis[level].size(), 0)};
  auto it = x.parts.find({j, level});
  if (it == x.parts.end()) return c;
  if (static_cast<int>(it->second.size()) != s.generator_count())
    fail(ErrorKind::BasisMismatch, "element does not match the cohomology basis");
  for (int g = 0; g < s.generator_count(); ++g) {
    if (it->second[g] == 0) continue;
    const auto& rep = s.representative(g);
    for (std::size_t i = 0; i < rep.size(); ++i)
      c.coeffs[i] = reduce(checked_add(c.coeffs[i], checked_mul(it->second[g], rep[i])), c_);
  }
  return c;
}

RingElement MomentAngleCohomology::add(const RingElement& a, const RingElement& b) const {
  RingElement out = a;
  for (const auto& [key, v] : b.parts) {
    auto& dst = out.parts[key];
    const SpotCohomology& s = spot(key.first, key.second);
    if (dst.empty()) dst.assign(v.size(), 0);
    if (dst.size() != v.size()) fail(ErrorKind::BasisMismatch, "element does not match the cohomology basis");
    for (std::size_t g = 0; g < v.size(); ++g)
      dst[g] = normalize_coeff(checked_add(dst[g], v[g]), s.order(static_cast<int>(g)), c_);
  }
  for (auto it = out.parts.begin(); it != out.parts.end();)
    it = all_zero(it->second) ? out.parts.erase(it) : std::next(it);
  return out;
}

RingElement MomentAngleCohomology::scale(const RingElement& a, std::int64_t k) const {
  RingElement out;
  for (const auto& [key, v] : a.parts) {
    const SpotCohomology& s = spot(key.first, key.second);
    std::vector<std::int64_t> w(v.size());
    for (std::size_t g = 0; g < v.size(); ++g)
      w[g] = normalize_coeff(checked_mul(v[g], k), s.order(static_cast<int>(g)), c_);
    if (!all_zero(w)) out.parts[key] = std::move(w);
  }
  return out;
}

Cochain MomentAngleCohomology::cochain_product(const Cochain& a, const Cochain& b) const {
  if (a.j & b.j) fail(ErrorKind::InvalidInput, "multidegrees of the factors intersect");
  const RBlock& ba = block(a.j);
  const RBlock& bb = block(b.j);
  const RBlock& target = block(a.j | b.j);
  const int level = a.level + b.level;
  Cochain out{a.j | b.j, level, {}};
  if (level >= target.levels()) return out;
  out.coeffs.assign(target.basis[level].size(), 0);
  const Mask ua_all = a.j, ub_all = b.j;
  for (std::size_t x = 0; x < a.coeffs.size(); ++x) {
    if (a.coeffs[x] == 0) continue;
    const Mask la = ba.basis[a.level][x];
    for (std::size_t y = 0; y < b.coeffs.size(); ++y) {
      if (b.coeffs[y] == 0) continue;
      const Mask lb = bb.basis[b.level][y];
      const int idx = target.index_of(level, la | lb);
      if (idx < 0) continue;
      const int sign = inversions(ua_all & ~la, ub_all & ~lb) % 2 == 0 ? 1 : -1;
      out.coeffs[idx] = reduce(checked_add(out.coeffs[idx], checked_mul(sign, checked_mul(a.coeffs[x], b.coeffs[y]))), c_);
    }
  }
  return out;
}

RingElement MomentAngleCohomology::cup_product(const RingElement& a, const RingElement& b) const {
  RingElement out;
  for (const auto& [ka, va] : a.parts)
    for (const auto& [kb, vb] : b.parts) {
      if (ka.first & kb.first) continue;
      if (all_zero(va) || all_zero(vb)) continue;
      const Cochain prod = cochain_product(representative(a, ka.first, ka.second),
                                           representative(b, kb.first, kb.second));
      if (prod.coeffs.empty()) continue;
      out = add(out, classify(prod));
    }
  return out;
}

std::vector<std::pair<int, int>> h3_basis(const SimplicialComplex& k) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < k.m(); ++i)
    for (int j = i + 1; j < k.m(); ++j)
      if (!k.has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

RingElement h3_class(const MomentAngleCohomology& h, int i, int j) {
  const Mask jm = bit(i) | bit(j);
  const RBlock& b = h.block(jm);
  Cochain c{jm, 1, std::vector<std::int64_t>(b.basis[1].size(), 0)};
  c.coeffs[b.index_of(1, bit(j))] = 1;
  return h.classify(c);
}

bool h3_square_trivial(const SimplePolytope& p) {
  const SimplicialComplex k = dual_complex(p);
  const MomentAngleCohomology h(k, Coefficients::Z);
  const int m = k.m();
  std::map<std::pair<int, int>, RingElement> classes;
  auto cls = [&](int i, int j) -> const RingElement& {
    auto it = classes.find({i, j});
    if (it == classes.end()) it = classes.emplace(std::make_pair(i, j), h3_class(h, i, j)).first;
    return it->second;
  };
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        for (int d = c + 1; d < m; ++d) {
          const Mask j = bit(a) | bit(b) | bit(c) | bit(d);
          // every product of two H^3 classes on J lands in the (J, level 2) group
          if (h.rank(j, 2) == 0) continue;
          const std::pair<std::pair<int, int>, std::pair<int, int>> splits[3] = {
              {{a, b}, {c, d}}, {{a, c}, {b, d}}, {{a, d}, {b, c}}};
          for (const auto& [x, y] : splits) {
            if (k.has_edge(x.first, x.second) || k.has_edge(y.first, y.second)) continue;
            if (!h.cup_product(cls(x.first, x.second), cls(y.first, y.second)).is_zero()) return false;
          }
        }
  return true;
}

namespace {

// Rank of a list of coordinate vectors over the field.
int span_rank(const std::vector<std::vector<std::int64_t>>& vs, int dim, Coefficients c) {
  if (vs.empty() || dim == 0) return 0;
  Matrix a(dim, static_cast<int>(vs.size()));
  for (std::size_t col = 0; col < vs.size(); ++col)
    for (int r = 0; r < dim; ++r) a(r, static_cast<int>(col)) = vs[col][r];
  return rank(a, c);
}

}  // namespace

DecomposabilityReport decomposability_report(const SimplePolytope& p, Coefficients c,
                                             const std::vector<int>& degrees) {
  const MomentAngleCohomology h(dual_complex(p), c);
  const int m = h.m();
  if (m > 20) fail(ErrorKind::SizeGuard, "decomposability report limited to m <= 20");
  auto wanted = [&](int deg) { return degrees.empty() || std::find(degrees.begin(), degrees.end(), deg) != degrees.end(); };
  DecomposabilityReport rep;
  const Mask all = full_mask(m);
  for (Mask j = 1; j <= all; ++j) {
    const RBlock& blk = h.block(j);
    for (int level = 1; level < blk.levels(); ++level) {
      const int deg = popcount(j) + level;
      const int dim = blk.spots[level].generator_count();
      if (!wanted(deg) || dim == 0) continue;
      std::vector<std::vector<std::int64_t>> image;
      const Mask low = j & (~j + 1);
      // splits j = j1 + j2 with the least element in j1 and j2 nonempty
      const Mask rest = j & ~low;
      for (Mask sub = rest;; sub = (sub - 1) & rest) {
        const Mask j1 = low | sub, j2 = j & ~j1;
        if (j2 != 0) {
          const RBlock& b1 = h.block(j1);
          const RBlock& b2 = h.block(j2);
          for (int l1 = 1; l1 < b1.levels() && l1 < level; ++l1) {
            const int l2 = level - l1;
            if (l2 >= b2.levels()) continue;
            const int n1 = b1.spots[l1].generator_count(), n2 = b2.spots[l2].generator_count();
            for (int g1 = 0; g1 < n1; ++g1)
              for (int g2 = 0; g2 < n2; ++g2) {
                const RingElement prod = h.cup_product(h.generator(j1, l1, g1), h.generator(j2, l2, g2));
                auto it = prod.parts.find({j, level});
                if (it != prod.parts.end()) image.push_back(it->second);
              }
          }
        }
        if (sub == 0) break;
      }
      rep.total[deg] += dim;
      rep.indecomposable[deg] += dim - span_rank(image, dim, c);
    }
  }
  return rep;
}

long annihilator_dim(const MomentAngleCohomology& h, const RingElement& x) {
  const auto spots = h.nonzero_spots();
  std::map<std::pair<Mask, int>, int> index;
  for (std::size_t i = 0; i < spots.size(); ++i) index[spots[i]] = static_cast<int>(i);
  const int n = static_cast<int>(spots.size());

  // Union-find over source spots [0, n) and target spots [n, 2n).
  std::vector<int> parent(static_cast<std::size_t>(2 * n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (int s = 0; s < n; ++s)
    for (const auto& [key, v] : x.parts) {
      if (key.first & spots[s].first) continue;
      auto it = index.find({key.first | spots[s].first, key.second + spots[s].second});
      if (it != index.end()) parent[find(s)] = find(n + it->second);
    }

  struct Component {
    std::vector<int> sources, targets;
  };
  std::map<int, Component> comps;
  for (int s = 0; s < n; ++s) comps[find(s)].sources.push_back(s);
  for (int t = 0; t < n; ++t) comps[find(n + t)].targets.push_back(t);

  long total = 0, image_rank = 0;
  for (const auto& sp : spots) total += h.spot(sp.first, sp.second).generator_count();
  for (const auto& [root, comp] : comps) {
    if (comp.sources.empty() || comp.targets.empty()) continue;
    std::map<int, int> row_offset;
    int rows = 0;
    for (int t : comp.targets) {
      row_offset[t] = rows;
      rows += h.spot(spots[t].first, spots[t].second).generator_count();
    }
    std::vector<std::vector<std::int64_t>> cols;
    for (int s : comp.sources) {
      const int gens = h.spot(spots[s].first, spots[s].second).generator_count();
      for (int g = 0; g < gens; ++g) {
        const RingElement prod = h.cup_product(x, h.generator(spots[s].first, spots[s].second, g));
        std::vector<std::int64_t> col(static_cast<std::size_t>(rows), 0);
        for (const auto& [key, v] : prod.parts) {
          const int t = index.at(key);
          for (std::size_t i = 0; i < v.size(); ++i) col[row_offset.at(t) + i] = v[i];
        }
        cols.push_back(std::move(col));
      }
    }
    image_rank += span_rank(cols, rows, h.coeffs());
  }
  return total - image_rank;
}

}  // namespace rigidity
