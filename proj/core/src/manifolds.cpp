#include "rigidity/manifolds.hpp"

#include <algorithm>
#include <functional>

#include "rigidity/belts.hpp"
#include "rigidity/errors.hpp"

namespace rigidity {

std::string to_string(IsoMode m) {
  switch (m) {
    case IsoMode::PairEquivalence: return "pair-equivalence";
    case IsoMode::GeneratorRestricted: return "generator-restricted";
    case IsoMode::Lattice: return "lattice";
  }
  return "unknown";
}

namespace {

void multisets(int m, int n, int from, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == n) {
    f(cur);
    return;
  }
  for (int i = from; i < m; ++i) {
    cur.push_back(i);
    multisets(m, n, i, cur, f);
    cur.pop_back();
  }
}

void for_each_multiset(int m, int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  multisets(m, n, 0, cur, f);
}

ToricRing build_ring(const CombinatorialBase& base, const CharMatrix& lambda) {
  const auto check = is_characteristic(base, lambda);
  if (!check.ok) fail(ErrorKind::NotCharacteristic, "matrix fails the determinant condition");
  const Coefficients c = lambda.coeffs;
  const int n = base.n, m = base.m;
  ToricRing r;
  r.base = base;
  r.lambda = lambda;
  r.base_vertex = base.base_vertex();
  for (int i = 0; i < m; ++i)
    if (std::find(r.base_vertex.begin(), r.base_vertex.end(), i) == r.base_vertex.end()) r.free_facets.push_back(i);

  // v_B = -Lambda_B^{-1} Lambda_F v_F
  const Matrix solved = multiply(inverse_unimodular(lambda.columns(r.base_vertex), c), lambda.columns(r.free_facets), c);
  const int rank = m - n;
  r.expr.assign(static_cast<std::size_t>(m), std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0));
  for (int t = 0; t < rank; ++t) r.expr[r.free_facets[t]][t] = 1;
  for (int k = 0; k < n; ++k)
    for (int t = 0; t < rank; ++t) r.expr[r.base_vertex[k]][t] = reduce(-solved(k, t), c);

  auto oriented_det = [&](Mask v) { return determinant(lambda.columns(base.oriented_vertex(v))); };
  const std::int64_t s0 = c == Coefficients::Z2 ? 1 : oriented_det(mask_of(r.base_vertex));

  std::map<std::vector<int>, std::int64_t> memo;
  std::function<std::int64_t(const std::vector<int>&)> eval = [&](const std::vector<int>& s) -> std::int64_t {
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    const Mask d = mask_of(s);
    std::int64_t value = 0;
    if (popcount(d) == n) {
      if (base.is_vertex(d)) value = c == Coefficients::Z2 ? 1 : s0 * oriented_det(d);
    } else {
      const auto w = std::find_if(base.vertices.begin(), base.vertices.end(), [&](Mask v) { return is_subset(d, v); });
      if (w != base.vertices.end()) {
        int repeated = -1;
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
          if (s[i] == s[i + 1]) repeated = s[i];
        const std::vector<int> wf = elements(*w);
        std::vector<int> rest;
        for (int i = 0; i < m; ++i)
          if (!contains(*w, i)) rest.push_back(i);
        const Matrix sub = multiply(inverse_unimodular(lambda.columns(wf), c), lambda.columns(rest), c);
        const int row = static_cast<int>(std::find(wf.begin(), wf.end(), repeated) - wf.begin());
        std::vector<int> base_s = s;
        base_s.erase(std::find(base_s.begin(), base_s.end(), repeated));
        for (std::size_t t = 0; t < rest.size(); ++t) {
          const std::int64_t coeff = reduce(-sub(row, static_cast<int>(t)), c);
          if (coeff == 0) continue;
          std::vector<int> next = base_s;
          next.insert(std::upper_bound(next.begin(), next.end(), rest[t]), rest[t]);
          value = reduce(checked_add(value, checked_mul(coeff, eval(next))), c);
        }
      }
    }
    memo[s] = value;
    return value;
  };
  for_each_multiset(m, n, [&](const std::vector<int>& s) { r.evaluation[s] = eval(s); });
  return r;
}

}  // namespace

std::int64_t ToricRing::eval(std::vector<int> facets) const {
  std::sort(facets.begin(), facets.end());
  auto it = evaluation.find(facets);
  if (it == evaluation.end()) fail(ErrorKind::OutOfRange, "evaluation needs n facet indices in range");
  return it->second;
}

std::int64_t ToricRing::evaluate(const std::vector<std::vector<std::int64_t>>& classes) const {
  if (static_cast<int>(classes.size()) != n()) fail(ErrorKind::DimensionMismatch, "top evaluation needs n classes");
  std::int64_t total = 0;
  std::vector<int> idx(static_cast<std::size_t>(n()));
  std::function<void(int, std::int64_t)> rec = [&](int k, std::int64_t coeff) {
    if (k == n()) {
      total = reduce(checked_add(total, checked_mul(coeff, eval(idx))), coeffs());
      return;
    }
    for (int i = 0; i < m(); ++i) {
      if (classes[k][i] == 0) continue;
      idx[k] = i;
      rec(k + 1, checked_mul(coeff, classes[k][i]));
    }
  };
  rec(0, 1);
  return total;
}

QtRing qt_ring(const CombinatorialBase& base, const CharMatrix& lambda) {
  if (lambda.coeffs != Coefficients::Z) fail(ErrorKind::InvalidInput, "quasitoric rings need an integer matrix");
  return build_ring(base, lambda);
}

SmallCoverRing sc_ring(const CombinatorialBase& base, const CharMatrix& lambda2) {
  if (lambda2.coeffs != Coefficients::Z2) fail(ErrorKind::InvalidInput, "small cover rings need a Z2 matrix");
  return build_ring(base, lambda2);
}

CharacteristicClasses pontryagin_w(const ToricRing& r) {
  CharacteristicClasses out;
  const int m = r.m();
  if (r.coeffs() == Coefficients::Z) {
    if (r.n() == 3) {
      out.p1_pairing.assign(static_cast<std::size_t>(m), 0);
      for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) out.p1_pairing[j] = checked_add(out.p1_pairing[j], r.eval({i, i, j}));
    } else {
      std::int64_t p = 0;
      for (int i = 0; i < m; ++i) p = checked_add(p, r.eval({i, i}));
      out.p1_number = p;
    }
  }
  out.w_low.assign(r.free_facets.size(), 0);
  for (const auto& e : r.expr)
    for (std::size_t t = 0; t < e.size(); ++t) out.w_low[t] = (out.w_low[t] + e[t]) & 1;
  for (Mask v : r.base.vertices) out.w_top = (out.w_top + r.eval(elements(v))) & 1;
  return out;
}

bool verify_generator_witness(const ToricRing& a, const ToricRing& b, const GeneratorWitness& w) {
  const Coefficients c = a.coeffs();
  if (a.n() != b.n() || a.m() != b.m() || c != b.coeffs()) return false;
  for (const auto& [s, value] : a.evaluation) {
    std::vector<int> image;
    std::int64_t sign = w.orientation;
    for (int f : s) {
      image.push_back(w.sigma[f]);
      sign *= w.signs[f];
    }
    if (reduce(value - sign * b.eval(image), c) != 0) return false;
  }
  // Every relation row of a must map into the row space of b.
  const int n = a.n(), m = a.m();
  const int base_rank = rank(b.lambda.entries, c);
  for (int j = 0; j < n; ++j) {
    Matrix stacked(n + 1, m);
    for (int r = 0; r < n; ++r)
      for (int i = 0; i < m; ++i) stacked(r, i) = b.lambda.entries(r, i);
    for (int i = 0; i < m; ++i) stacked(n, w.sigma[i]) = reduce(a.lambda.entries(j, i) * w.signs[i], c);
    if (rank(stacked, c) != base_rank) return false;
  }
  return true;
}

bool witness_preserves_p1(const ToricRing& a, const ToricRing& b, const GeneratorWitness& w) {
  const CharacteristicClasses pa = pontryagin_w(a), pb = pontryagin_w(b);
  if (a.n() == 2) return pa.p1_number && pb.p1_number && *pa.p1_number == w.orientation * *pb.p1_number;
  for (int j = 0; j < a.m(); ++j)
    if (pa.p1_pairing[j] != w.orientation * w.signs[j] * pb.p1_pairing[w.sigma[j]]) return false;
  return true;
}

namespace {

bool pogorelov_base(const CombinatorialBase& b) { return b.polytope && is_pogorelov(*b.polytope); }

std::optional<GeneratorWitness> generator_search(const ToricRing& a, const ToricRing& b) {
  const Coefficients c = a.coeffs();
  const int n = a.n(), m = a.m();
  const auto& bv = a.base_vertex;
  const int patterns = c == Coefficients::Z ? 1 << n : 1;
  for (const auto& sigma : base_isomorphisms(a.base, b.base)) {
    auto image_eval = [&](Mask v) {
      std::vector<int> img;
      for (int f : elements(v)) img.push_back(sigma[f]);
      return b.eval(img);
    };
    for (int pattern = 0; pattern < patterns; ++pattern) {
      GeneratorWitness w{sigma, std::vector<int>(static_cast<std::size_t>(m), 0), 1};
      std::int64_t prod = 1;
      for (int k = 0; k < n; ++k) {
        w.signs[bv[k]] = (pattern >> k & 1) ? -1 : 1;
        prod *= w.signs[bv[k]];
      }
      if (c == Coefficients::Z) w.orientation = static_cast<int>(prod * image_eval(mask_of(bv)) * a.eval(bv));
      // Propagate through vertices with one undetermined facet.
      bool progress = true;
      while (progress) {
        progress = false;
        for (Mask v : a.base.vertices) {
          int unknown = -1, count = 0;
          std::int64_t known = 1;
          for (int f : elements(v)) {
            if (w.signs[f] == 0) {
              unknown = f;
              ++count;
            } else {
              known *= w.signs[f];
            }
          }
          if (count != 1) continue;
          // T(v) * orientation = prod(signs) * T'(sigma v)
          const std::int64_t need = c == Coefficients::Z ? a.eval(elements(v)) * w.orientation * image_eval(v) * known : 1;
          w.signs[unknown] = static_cast<int>(need);
          progress = true;
        }
      }
      if (std::find(w.signs.begin(), w.signs.end(), 0) != w.signs.end()) continue;
      if (verify_generator_witness(a, b, w)) return w;
    }
  }
  return std::nullopt;
}

// Evaluation form on the free basis.
std::int64_t free_form(const ToricRing& r, const std::vector<int>& t) {
  std::vector<int> f;
  for (int x : t) f.push_back(r.free_facets[x]);
  return r.eval(f);
}

std::optional<Matrix> lattice_search(const ToricRing& a, const ToricRing& b) {
  const int n = a.n();
  const int rank = static_cast<int>(a.free_facets.size());
  if (a.coeffs() != Coefficients::Z) fail(ErrorKind::ModeUnsupported, "lattice mode works over Z");
  if (rank > 2 || static_cast<int>(b.free_facets.size()) != rank)
    fail(ErrorKind::ModeUnsupported, "lattice mode needs equal free rank at most 2");
  const int bound = 3, span = 2 * bound + 1;
  int cells = rank * rank, total = 1;
  for (int i = 0; i < cells; ++i) total *= span;
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  std::function<void()> gen = [&] {
    if (static_cast<int>(cur.size()) == n) {
      tuples.push_back(cur);
      return;
    }
    for (int t = 0; t < rank; ++t) {
      cur.push_back(t);
      gen();
      cur.pop_back();
    }
  };
  gen();
  for (int code = 0; code < total; ++code) {
    Matrix phi(rank, rank);
    int rest = code;
    for (int i = 0; i < cells; ++i) {
      phi(i / rank, i % rank) = rest % span - bound;
      rest /= span;
    }
    const std::int64_t det = determinant(phi);
    if (det != 1 && det != -1) continue;
    for (int orientation : {1, -1}) {
      bool ok = true;
      for (const auto& t : tuples) {
        // form_b(phi e_t1, ..., phi e_tn)
        std::int64_t image = 0;
        for (const auto& s : tuples) {
          std::int64_t coeff = 1;
          for (int k = 0; k < n && coeff; ++k) coeff *= phi(s[k], t[k]);
          if (coeff) image += coeff * free_form(b, s);
        }
        if (free_form(a, t) != orientation * image) {
          ok = false;
          break;
        }
      }
      if (ok) return phi;
    }
  }
  return std::nullopt;
}

}  // namespace

RingIsoResult ring_isomorphic(const ToricRing& a, const ToricRing& b, IsoMode mode) {
  if (a.n() != b.n()) fail(ErrorKind::ModeUnsupported, "rings over bases of different dimension");
  if (a.coeffs() != b.coeffs()) fail(ErrorKind::ModeUnsupported, "rings over different coefficients");
  RingIsoResult out;
  out.mode = mode;
  const bool pogorelov = pogorelov_base(a.base) && pogorelov_base(b.base);
  switch (mode) {
    case IsoMode::PairEquivalence:
      out.pair = pairs_equivalent(a.base, a.lambda, b.base, b.lambda);
      out.isomorphic = out.pair.has_value();
      out.conclusive = out.isomorphic || pogorelov;
      break;
    case IsoMode::GeneratorRestricted:
      out.generator = generator_search(a, b);
      out.isomorphic = out.generator.has_value();
      out.conclusive = out.isomorphic || pogorelov;
      break;
    case IsoMode::Lattice:
      out.lattice = lattice_search(a, b);
      out.isomorphic = out.lattice.has_value();
      out.conclusive = out.isomorphic;
      break;
  }
  return out;
}

RingIsoResult sc_isomorphic(const SmallCoverRing& a, const SmallCoverRing& b) {
  if (a.coeffs() != Coefficients::Z2 || b.coeffs() != Coefficients::Z2)
    fail(ErrorKind::ModeUnsupported, "small cover rings are over Z2");
  if (a.n() != b.n()) fail(ErrorKind::ModeUnsupported, "rings over bases of different dimension");
  RingIsoResult out = ring_isomorphic(a, b, IsoMode::PairEquivalence);
  out.generator = generator_search(a, b);
  if (out.generator.has_value() != out.isomorphic)
    fail(ErrorKind::InternalMismatch, "Z2 pair equivalence and generator search disagree");
  return out;
}

}  // namespace rigidity
