#include "generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace rigidity::testing {

CharMatrix hirzebruch(int k) { return make_char_matrix({{1, 0, -1, k}, {0, 1, 0, -1}}, Coefficients::Z); }

Scrambled scramble(const SimplePolytope& p, const CharMatrix& l, std::mt19937& rng) {
  std::vector<int> perm(static_cast<std::size_t>(p.m()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix a = Matrix::identity(3);
  std::uniform_int_distribution<int> idx(0, 2), coeff(-2, 2);
  for (int step = 0; step < 6; ++step) {
    const int r = idx(rng), s = idx(rng);
    if (r == s) continue;
    const int c = coeff(rng);
    for (int col = 0; col < 3; ++col) a(r, col) += c * a(s, col);
  }
  const Matrix al = multiply(a, l.entries);
  CharMatrix out{Matrix(3, p.m()), Coefficients::Z};
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < p.m(); ++i) {
    const int sign = flip(rng) ? -1 : 1;
    for (int r = 0; r < 3; ++r) out.entries(r, perm[i]) = sign * al(r, i);
  }
  return {relabel(p, perm), out};
}

CharMatrix random_polygon_matrix(int m, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  for (;;) {
    std::vector<std::vector<std::int64_t>> cols{{1, 0}, {0, 1}};
    while (static_cast<int>(cols.size()) < m) {
      // det(prev, a * prev + s * before) = s * det(prev, before) = +-1
      const auto prev = cols[cols.size() - 1], before = cols[cols.size() - 2];
      const int a = d(rng);
      const int s = d(rng) >= 0 ? 1 : -1;
      cols.push_back({a * prev[0] + s * before[0], a * prev[1] + s * before[1]});
    }
    const auto& last = cols.back();
    const std::int64_t det = last[0] * cols[0][1] - last[1] * cols[0][0];
    if (det != 1 && det != -1) continue;
    std::vector<std::vector<std::int64_t>> rows(2);
    for (const auto& c : cols) {
      rows[0].push_back(c[0]);
      rows[1].push_back(c[1]);
    }
    return make_char_matrix(rows, Coefficients::Z);
  }
}

CharMatrix random_fan(int m, std::mt19937& rng) {
  std::vector<std::array<std::int64_t, 2>> rays;
  if (m == 3) {
    rays = {{1, 0}, {0, 1}, {-1, -1}};
  } else {
    std::uniform_int_distribution<int> k(-3, 3);
    rays = {{1, 0}, {0, 1}, {-1, 0}, {k(rng), -1}};
  }
  while (static_cast<int>(rays.size()) < m) {
    std::uniform_int_distribution<std::size_t> pos(0, rays.size() - 1);
    const std::size_t i = pos(rng), j = (i + 1) % rays.size();
    rays.insert(rays.begin() + static_cast<long>(i) + 1, {rays[i][0] + rays[j][0], rays[i][1] + rays[j][1]});
  }
  // keep the base vertex {0, 1} positively oriented
  while (rays[0][0] * rays[1][1] - rays[0][1] * rays[1][0] != 1) std::rotate(rays.begin(), rays.begin() + 1, rays.end());
  std::vector<std::vector<std::int64_t>> rows(2);
  for (const auto& ray : rays) {
    rows[0].push_back(ray[0]);
    rows[1].push_back(ray[1]);
  }
  return make_char_matrix(rows, Coefficients::Z);
}

}  // namespace rigidity::testing
